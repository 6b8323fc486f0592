// Copyright 2026 The meanpart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meanpart/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "meanpart/errors.hpp"

namespace meanpart {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buffer, end);
}

namespace {

json require_field(const json& j, const char* field, const char* context) {
  const auto it = j.find(field);
  if (it == j.end()) {
    throw ValidationError(std::string(context) + ": missing field '" + field + "'");
  }
  return *it;
}

}  // namespace

json partition_to_json(const LabeledPartition& partition) {
  json values = json::array();
  for (Eigen::Index k = 0; k < partition.ell(); ++k) {
    json row = json::array();
    for (Eigen::Index j = 0; j < partition.m(); ++j) row.push_back(partition(k, j));
    values.push_back(std::move(row));
  }
  return json{{"ell", partition.ell()},
              {"m", partition.m()},
              {"kind", "soft"},
              {"values", std::move(values)}};
}

json partition_to_json(const HardLabeling& labels) {
  return json{{"ell", labels.ell},
              {"m", labels.labels.size()},
              {"kind", "hard"},
              {"labels", labels.labels}};
}

LabeledPartition partition_from_json(const json& j) {
  constexpr const char* kContext = "partition";
  const int ell = require_field(j, "ell", kContext).get<int>();
  const int m = require_field(j, "m", kContext).get<int>();
  const std::string kind = require_field(j, "kind", kContext).get<std::string>();
  if (kind == "hard") {
    HardLabeling labels;
    labels.ell = ell;
    labels.labels = require_field(j, "labels", kContext).get<std::vector<int>>();
    if (static_cast<int>(labels.labels.size()) != m) {
      throw ValidationError("partition: field 'labels' must list m entries");
    }
    return make_hard(labels);
  }
  if (kind == "soft") {
    const json rows = require_field(j, "values", kContext);
    if (!rows.is_array() || static_cast<int>(rows.size()) != ell) {
      throw ValidationError("partition: field 'values' must hold ell rows");
    }
    Matrix values(ell, m);
    for (int k = 0; k < ell; ++k) {
      const json& row = rows[k];
      if (!row.is_array() || static_cast<int>(row.size()) != m) {
        throw ValidationError("partition: field 'values' row " + std::to_string(k) +
                              " must hold m entries");
      }
      for (int c = 0; c < m; ++c) values(k, c) = row[c].get<double>();
    }
    return LabeledPartition(std::move(values));
  }
  throw ValidationError("partition: field 'kind' must be 'hard' or 'soft'");
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open for reading: " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

namespace {

template <typename Member>
json ensemble_json(const std::vector<Member>& members) {
  if (members.empty()) throw ValidationError("ensemble must not be empty");
  json partitions = json::array();
  for (const Member& member : members) partitions.push_back(partition_to_json(member));
  return json{{"ell", partitions.front()["ell"]},
              {"m", partitions.front()["m"]},
              {"partitions", std::move(partitions)}};
}

}  // namespace

void write_ensemble(const std::filesystem::path& path, const std::vector<HardLabeling>& members) {
  write_json(path, ensemble_json(members));
}

void write_ensemble(const std::filesystem::path& path, const std::vector<LabeledPartition>& members) {
  write_json(path, ensemble_json(members));
}

std::vector<LabeledPartition> read_ensemble(const std::filesystem::path& path) {
  const json j = read_json(path);
  constexpr const char* kContext = "ensemble";
  const int ell = require_field(j, "ell", kContext).get<int>();
  const int m = require_field(j, "m", kContext).get<int>();
  const json partitions = require_field(j, "partitions", kContext);
  if (!partitions.is_array() || partitions.empty()) {
    throw ValidationError("ensemble: field 'partitions' must be a nonempty array");
  }
  std::vector<LabeledPartition> members;
  members.reserve(partitions.size());
  for (const json& p : partitions) {
    LabeledPartition member = partition_from_json(p);
    if (member.ell() != ell || member.m() != m) {
      throw ValidationError("ensemble: member dimensions disagree with header");
    }
    members.push_back(std::move(member));
  }
  return members;
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path.string());
  for (Eigen::Index c = 0; c < data.d(); ++c) {
    if (c > 0) out << ',';
    out << 'x' << (c + 1);
  }
  if (data.has_ground_truth()) out << ",label";
  out << '\n';
  for (Eigen::Index r = 0; r < data.m(); ++r) {
    for (Eigen::Index c = 0; c < data.d(); ++c) {
      if (c > 0) out << ',';
      out << format_double(data.points(r, c));
    }
    if (data.has_ground_truth()) out << ',' << data.ground_truth[r];
    out << '\n';
  }
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open for reading: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path.string() + ": empty dataset file");

  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  if (header.empty()) throw ValidationError(path.string() + ": empty header");
  const bool labeled = header.back() == "label";
  const int d = static_cast<int>(header.size()) - (labeled ? 1 : 0);
  if (d < 1) throw ValidationError(path.string() + ": no coordinate columns");

  std::vector<double> coords;
  std::vector<int> labels;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int col = 0;
    while (std::getline(ss, cell, ',')) {
      if (col < d) {
        coords.push_back(std::stod(cell));
      } else if (labeled && col == d) {
        labels.push_back(std::stoi(cell));
      } else {
        throw ValidationError(path.string() + ": row " + std::to_string(rows) +
                              " has too many columns");
      }
      ++col;
    }
    if (col != d + (labeled ? 1 : 0)) {
      throw ValidationError(path.string() + ": row " + std::to_string(rows) +
                            " has too few columns");
    }
    ++rows;
  }
  if (rows == 0) throw ValidationError(path.string() + ": dataset has no points");

  Dataset data;
  data.points.resize(rows, d);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < d; ++c) data.points(r, c) = coords[static_cast<std::size_t>(r) * d + c];
  }
  data.ground_truth = std::move(labels);
  return data;
}

namespace {

// One-hot matrices serialize in the compact hard form.
json partition_to_json_auto(const LabeledPartition& partition) {
  HardLabeling labels;
  labels.ell = static_cast<int>(partition.ell());
  labels.labels.reserve(partition.m());
  for (Eigen::Index j = 0; j < partition.m(); ++j) {
    int one_row = -1;
    for (Eigen::Index k = 0; k < partition.ell(); ++k) {
      const double v = partition(k, j);
      if (std::abs(v - 1.0) <= 1e-12) {
        if (one_row >= 0) return partition_to_json(partition);
        one_row = static_cast<int>(k);
      } else if (std::abs(v) > 1e-12) {
        return partition_to_json(partition);
      }
    }
    if (one_row < 0) return partition_to_json(partition);
    labels.labels.push_back(one_row + 1);
  }
  return partition_to_json(labels);
}

}  // namespace

json mean_result_to_json(const MeanResult& result, bool stationary) {
  json members = json::array();
  for (int i = 0; i < result.alignment.size(); ++i) {
    members.push_back(partition_to_json_auto(result.alignment.member(i)));
  }
  json mean = partition_to_json(result.mean);
  return json{{"ell", result.mean.ell()},
              {"m", result.mean.m()},
              {"mean", mean["values"]},
              {"frechet_value", result.frechet_value},
              {"iterations", result.iterations},
              {"converged", result.converged},
              {"restarts_used", result.restarts_used},
              {"stationary", stationary},
              {"trace", result.trace},
              {"alignment", json{{"source_ids", result.alignment.source_ids()},
                                 {"members", std::move(members)}}}};
}

json motif_report_to_json(const MotifSet& motifs, int m,
                          const std::vector<std::optional<double>>& purity) {
  json motif_rows = json::array();
  for (const std::vector<int>& motif : motifs.motifs) motif_rows.push_back(motif);
  json j{{"tau", motifs.tau},
         {"motifs", std::move(motif_rows)},
         {"uncovered", uncovered_points(motifs, m)}};
  if (!purity.empty()) {
    json values = json::array();
    for (const auto& p : purity) {
      if (p.has_value()) {
        values.push_back(*p);
      } else {
        values.push_back(nullptr);
      }
    }
    j["purity"] = std::move(values);
  }
  return j;
}

void write_motif_csv(const std::filesystem::path& path, const MotifSet& motifs,
                     const Dataset* data, int m) {
  std::vector<int> motif_of(m, -1);
  for (std::size_t k = 0; k < motifs.motifs.size(); ++k) {
    for (int j : motifs.motifs[k]) motif_of[j] = static_cast<int>(k) + 1;
  }

  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path.string());
  out << "point_index";
  if (data != nullptr) {
    for (Eigen::Index c = 0; c < data->d(); ++c) out << ",x" << (c + 1);
  }
  out << ",motif_id\n";
  for (int j = 0; j < m; ++j) {
    out << j;
    if (data != nullptr) {
      for (Eigen::Index c = 0; c < data->d(); ++c) out << ',' << format_double(data->points(j, c));
    }
    out << ',' << motif_of[j] << '\n';
  }
}

namespace {

std::string selected_marker(const StabilityReport& report, int k) {
  std::string marker;
  if (report.selected_k_pairwise == k) marker += 'G';
  if (report.selected_k_alignment == k) marker += 'g';
  if (report.selected_k_variation == k) marker += 'F';
  return marker;
}

}  // namespace

void write_stability_csv(const std::filesystem::path& path, const StabilityReport& report) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path.string());
  out << "k,G,g,F,D,selected_marker\n";
  for (const StabilityRow& row : report.rows) {
    out << row.k << ',' << format_double(row.pairwise) << ',' << format_double(row.alignment)
        << ',' << format_double(row.variation) << ',' << format_double(row.chain_gap) << ','
        << selected_marker(report, row.k) << '\n';
  }
}

json stability_report_to_json(const StabilityReport& report) {
  json rows = json::array();
  for (const StabilityRow& row : report.rows) {
    json r{{"k", row.k},
           {"G", row.pairwise},
           {"g", row.alignment},
           {"F", row.variation},
           {"D", row.chain_gap},
           {"variation_exceeds_pairwise", row.variation_exceeds_pairwise},
           {"iterations", row.iterations},
           {"converged", row.converged},
           {"restarts_used", row.restarts_used}};
    if (row.exact_alignment.has_value()) {
      r["g_exact"] = *row.exact_alignment;
    } else {
      r["g_exact"] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  return json{{"k_min", report.k_min},
              {"k_max", report.k_max},
              {"n", report.n},
              {"rows", std::move(rows)},
              {"selected_k",
               json{{"G", report.selected_k_pairwise},
                    {"g", report.selected_k_alignment},
                    {"F", report.selected_k_variation}}}};
}

}  // namespace meanpart
