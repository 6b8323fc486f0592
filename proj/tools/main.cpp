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

// Command-line front end: data generation, ensemble creation, distances,
// mean partitions, motifs, stability sweeps, and randomized oracle checks.
// Every command resolves its flags into a parameter object, executes from
// that object alone, and writes a manifest alongside its outputs; `rerun`
// replays a manifest (optionally into another directory) byte-identically.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "meanpart/alignment.hpp"
#include "meanpart/consensus.hpp"
#include "meanpart/dataset.hpp"
#include "meanpart/errors.hpp"
#include "meanpart/io.hpp"
#include "meanpart/kmeans.hpp"
#include "meanpart/profile.hpp"
#include "meanpart/rng.hpp"
#include "meanpart/sampling.hpp"
#include "meanpart/stability.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace meanpart;

namespace {

constexpr const char* kToolName = "meanpart";
constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCapacity = 4;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class OracleFailure : public std::runtime_error {
 public:
  explicit OracleFailure(const std::string& what) : std::runtime_error(what) {}
};

// ---- parameter access -------------------------------------------------------

template <typename T>
T param(const json& params, const char* key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw UsageError(std::string("missing parameter '") + key + "'");
  }
  return it->get<T>();
}

template <typename T>
T param_or(const json& params, const char* key, T fallback) {
  const auto it = params.find(key);
  return it == params.end() || it->is_null() ? fallback : it->get<T>();
}

KMeansOptions kmeans_options(const json& params) {
  KMeansOptions options;
  options.max_iters = param_or(params, "kmeans_max_iters", 100);
  options.n_init = param_or(params, "n_init", 1);
  const std::string policy = param_or<std::string>(params, "empty_policy", "reseed");
  if (policy == "reseed") {
    options.empty_policy = EmptyClusterPolicy::kReseedFarthest;
  } else if (policy == "leave") {
    options.empty_policy = EmptyClusterPolicy::kLeaveEmpty;
  } else {
    throw UsageError("empty_policy must be 'reseed' or 'leave'");
  }
  return options;
}

SolverConfig solver_config(const json& params, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.restarts = param_or(params, "restarts", 3);
  cfg.max_iters = param_or(params, "max_iters", 200);
  cfg.tol = param_or(params, "tol", 1e-10);
  cfg.seed = seed;
  if (cfg.restarts < 1) throw UsageError("restarts must be >= 1");
  if (cfg.max_iters < 1) throw UsageError("max-iters must be >= 1");
  if (!(cfg.tol > 0.0)) throw UsageError("tol must be positive");
  return cfg;
}

// ---- commands ---------------------------------------------------------------

json run_gen_data(const json& params) {
  const std::string kind = param<std::string>(params, "kind");
  const auto seed = param_or<std::uint64_t>(params, "seed", 0);
  const std::string out = param<std::string>(params, "out");

  Dataset data;
  if (kind == "gaussian-grid") {
    if (!params.contains("rows") || !params.contains("cols")) {
      throw UsageError("gaussian-grid needs --rows and --cols");
    }
    data = gen_gaussian_grid(param<int>(params, "rows"), param<int>(params, "cols"),
                             param_or(params, "sigma", 0.12),
                             param_or(params, "points_per", 100), seed);
  } else if (kind == "uniform") {
    if (!params.contains("m")) throw UsageError("uniform needs --m");
    data = gen_uniform(param<int>(params, "m"), param_or(params, "d", 2), seed);
  } else {
    throw UsageError("kind must be 'gaussian-grid' or 'uniform'");
  }
  write_dataset_csv(out, data);
  return json{{"dataset", out}};
}

json run_ensemble(const json& params) {
  const Dataset data = read_dataset_csv(param<std::string>(params, "data"));
  EnsembleSpec spec;
  spec.n = param<int>(params, "n");
  spec.k = param<int>(params, "k");
  spec.seed = param_or<std::uint64_t>(params, "seed", 0);
  spec.kmeans = kmeans_options(params);
  if (spec.n < 1) throw UsageError("n must be >= 1");
  if (spec.k < 1) throw UsageError("k must be >= 1");

  const std::vector<LabeledPartition> members = generate_ensemble(data, spec);
  const std::string out = param<std::string>(params, "out");
  write_ensemble(out, members);
  return json{{"ensemble", out}};
}

json run_dist(const json& params) {
  const LabeledPartition a = partition_from_json(read_json(param<std::string>(params, "a")));
  const LabeledPartition b = partition_from_json(read_json(param<std::string>(params, "b")));
  const PairwiseAlignment fast = delta(a, b);

  json result{{"distance", fast.distance},
              {"squared", fast.distance * fast.distance},
              {"inner_value", fast.inner_value},
              {"permutation", fast.permutation.mapping()}};
  if (param_or(params, "oracle", false)) {
    const PairwiseAlignment slow = delta_bruteforce(a, b);
    result["bruteforce"] = json{{"distance", slow.distance},
                                {"permutation", slow.permutation.mapping()}};
    result["agreement"] = std::abs(fast.distance - slow.distance) < 1e-9;
  }
  const std::string out = param<std::string>(params, "out");
  write_json(out, result);
  return json{{"distance", out}};
}

json run_mean(const json& params) {
  const std::vector<LabeledPartition> sample =
      read_ensemble(param<std::string>(params, "ensemble"));
  const SolverConfig cfg = solver_config(params, param_or<std::uint64_t>(params, "seed", 0));
  const MeanResult result = mean_partition(sample, cfg);
  const std::string out = param<std::string>(params, "out");
  write_json(out, mean_result_to_json(result, check_stationarity(result)));
  return json{{"mean", out}};
}

json run_motifs(const json& params) {
  const std::vector<LabeledPartition> sample =
      read_ensemble(param<std::string>(params, "ensemble"));
  const double tau = param<double>(params, "tau");
  const auto seed = param_or<std::uint64_t>(params, "seed", 0);

  const MeanResult result = mean_partition(sample, solver_config(params, seed));
  const Profile profile =
      profile_of(result.alignment, "mean_partition(seed=" + std::to_string(seed) + ")");
  const MotifSet motifs = motifs_of(profile, tau);

  std::vector<std::optional<double>> purity;
  const bool have_data = params.contains("data") && !params["data"].is_null();
  Dataset data;
  if (have_data) {
    data = read_dataset_csv(param<std::string>(params, "data"));
    if (data.m() != profile.values.m()) {
      throw ValidationError("dataset and ensemble disagree on the point count");
    }
    if (data.has_ground_truth()) purity = motif_purity(motifs, data.ground_truth);
  }

  const std::string out = param<std::string>(params, "out");
  write_json(out, motif_report_to_json(motifs, static_cast<int>(profile.values.m()), purity));

  const std::string csv_out = param_or<std::string>(
      params, "csv_out", fs::path(out).replace_extension(".csv").string());
  write_motif_csv(csv_out, motifs, have_data ? &data : nullptr,
                  static_cast<int>(profile.values.m()));
  return json{{"motifs", out}, {"points", csv_out}};
}

void write_stability_average(const fs::path& path, const std::vector<StabilityReport>& trials) {
  StabilityReport averaged;
  averaged.k_min = trials.front().k_min;
  averaged.k_max = trials.front().k_max;
  averaged.n = trials.front().n;
  for (std::size_t row = 0; row < trials.front().rows.size(); ++row) {
    StabilityRow mean_row;
    mean_row.k = trials.front().rows[row].k;
    for (const StabilityReport& trial : trials) {
      mean_row.pairwise += trial.rows[row].pairwise;
      mean_row.alignment += trial.rows[row].alignment;
      mean_row.variation += trial.rows[row].variation;
    }
    const auto t = static_cast<double>(trials.size());
    mean_row.pairwise /= t;
    mean_row.alignment /= t;
    mean_row.variation /= t;
    mean_row.chain_gap = mean_row.alignment - mean_row.pairwise;
    averaged.rows.push_back(mean_row);
  }
  std::vector<std::pair<int, double>> by_g, by_a, by_v;
  for (const StabilityRow& row : averaged.rows) {
    by_g.emplace_back(row.k, row.pairwise);
    by_a.emplace_back(row.k, row.alignment);
    by_v.emplace_back(row.k, row.variation);
  }
  averaged.selected_k_pairwise = select_k(by_g);
  averaged.selected_k_alignment = select_k(by_a);
  averaged.selected_k_variation = select_k(by_v);
  write_stability_csv(path, averaged);
}

json run_stability(const json& params) {
  const int k_min = param<int>(params, "kmin");
  const int k_max = param<int>(params, "kmax");
  const int n = param<int>(params, "n");
  const int trials = param_or(params, "trials", 1);
  const auto seed = param_or<std::uint64_t>(params, "seed", 0);
  const std::string prefix = param<std::string>(params, "out_prefix");
  if (k_min > k_max) throw UsageError("kmin must not exceed kmax");
  if (trials < 1) throw UsageError("trials must be >= 1");

  const bool have_data = params.contains("data") && !params["data"].is_null();
  const bool have_gen = params.contains("gen") && !params["gen"].is_null();
  if (have_data == have_gen) {
    throw UsageError("provide exactly one of --data or --gen");
  }

  Dataset fixed;
  if (have_data) fixed = read_dataset_csv(param<std::string>(params, "data"));

  EnsembleSpec ensemble;
  ensemble.kmeans = kmeans_options(params);

  std::vector<StabilityReport> reports;
  json outputs;
  for (int t = 0; t < trials; ++t) {
    Dataset trial_data;
    if (have_data) {
      trial_data = fixed;
    } else {
      const std::uint64_t data_seed = derive_seed(seed, "trial-data", t);
      const std::string gen = param<std::string>(params, "gen");
      if (gen == "gaussian-grid") {
        trial_data = gen_gaussian_grid(param<int>(params, "rows"), param<int>(params, "cols"),
                                       param_or(params, "sigma", 0.12),
                                       param_or(params, "points_per", 100), data_seed);
      } else if (gen == "uniform") {
        trial_data = gen_uniform(param<int>(params, "m"), param_or(params, "d", 2), data_seed);
      } else {
        throw UsageError("gen must be 'gaussian-grid' or 'uniform'");
      }
    }

    EnsembleSpec trial_ensemble = ensemble;
    trial_ensemble.seed = derive_seed(seed, "trial-ensemble", t);
    const SolverConfig solver = solver_config(params, derive_seed(seed, "trial-solver", t));

    reports.push_back(stability_sweep(trial_data, k_min, k_max, n, trial_ensemble, solver));
    const std::string trial_path = prefix + "_trial" + std::to_string(t) + ".csv";
    write_stability_csv(trial_path, reports.back());
    outputs["trial" + std::to_string(t)] = trial_path;
  }

  const std::string avg_path = prefix + "_avg.csv";
  write_stability_average(avg_path, reports);
  outputs["average"] = avg_path;

  json summary{{"trials", trials}, {"reports", json::array()}};
  for (const StabilityReport& report : reports) {
    summary["reports"].push_back(stability_report_to_json(report));
  }
  const std::string summary_path = prefix + "_summary.json";
  write_json(summary_path, summary);
  outputs["summary"] = summary_path;
  return outputs;
}

// ---- oracle suites ----------------------------------------------------------

json oracle_delta(int cases, std::uint64_t seed) {
  double max_diff = 0.0;
  int agreements = 0;
  for (int c = 0; c < cases; ++c) {
    Rng rng(derive_seed(seed, "delta-case", c));
    const int ell = 2 + static_cast<int>(rng.next_below(5));
    const int m = 3 + static_cast<int>(rng.next_below(10));
    const LabeledPartition x = random_soft_partition(rng, ell, m);
    const LabeledPartition y = random_soft_partition(rng, ell, m);
    const double diff = std::abs(delta(x, y).distance - delta_bruteforce(x, y).distance);
    max_diff = std::max(max_diff, diff);
    if (diff < 1e-9) ++agreements;
  }
  std::cout << "suite=delta cases=" << cases << " agreements=" << agreements
            << " max_abs_diff=" << max_diff << '\n';
  if (agreements != cases) throw OracleFailure("assignment solver disagrees with brute force");
  return json{{"suite", "delta"},
              {"cases", cases},
              {"agreements", agreements},
              {"max_abs_diff", max_diff}};
}

json oracle_identities(int cases, std::uint64_t seed) {
  double max_residual = 0.0;
  for (int c = 0; c < cases; ++c) {
    Rng rng(derive_seed(seed, "identity-case", c));
    const int n = 2 + static_cast<int>(rng.next_below(5));
    const int ell = 2 + static_cast<int>(rng.next_below(3));
    const int m = 3 + static_cast<int>(rng.next_below(6));
    std::vector<LabeledPartition> members;
    for (int i = 0; i < n; ++i) {
      members.push_back(c % 2 == 0 ? random_hard_partition(rng, ell, m)
                                   : random_soft_partition(rng, ell, m));
    }
    const MultipleAlignment a(members);
    const double f = f_value(a);
    const double g = g_value(a);
    const double h = h_value(a);
    double norms = 0.0;
    for (const LabeledPartition& x : members) {
      norms += frobenius_norm(x) * frobenius_norm(x);
    }
    max_residual = std::max(max_residual, std::abs(g - 2.0 * f));
    max_residual = std::max(max_residual, std::abs(f - (norms / n - h / n)));

    const double pairwise = pairwise_instability(members);
    double averaged = 0.0;
    for (const LabeledPartition& x : members) averaged += frechet_value(members, x);
    averaged /= n;
    max_residual = std::max(max_residual, std::abs(pairwise - averaged));
  }
  std::cout << "suite=identities cases=" << cases << " max_residual=" << max_residual << '\n';
  if (max_residual >= 1e-9) throw OracleFailure("algebraic identity residual exceeds 1e-9");
  return json{{"suite", "identities"}, {"cases", cases}, {"max_residual", max_residual}};
}

json oracle_mean(int cases, std::uint64_t seed) {
  int attained = 0;
  for (int c = 0; c < cases; ++c) {
    Rng rng(derive_seed(seed, "mean-case", c));
    const int n = 2 + static_cast<int>(rng.next_below(3));
    const int ell = 2 + static_cast<int>(rng.next_below(2));
    const int m = 3 + static_cast<int>(rng.next_below(4));
    std::vector<LabeledPartition> sample;
    for (int i = 0; i < n; ++i) sample.push_back(random_soft_partition(rng, ell, m));

    const MeanResult exact = exhaustive_mean(sample);
    const MeanResult approx =
        mean_partition(sample, {.restarts = 6, .seed = derive_seed(seed, "mean-solver", c)});
    if (approx.frechet_value < exact.frechet_value - 1e-9) {
      throw OracleFailure("heuristic mean beat the exhaustive optimum");
    }
    if (std::abs(exact.frechet_value - g_value(exact.alignment) / 2.0) > 1e-9) {
      throw OracleFailure("exhaustive optimum violates F = g/2");
    }
    if (approx.frechet_value <= exact.frechet_value + 1e-9) ++attained;
  }
  std::cout << "suite=mean cases=" << cases << " global_optimum_attained=" << attained << '/'
            << cases << '\n';
  return json{{"suite", "mean"}, {"cases", cases}, {"attained", attained}};
}

json run_oracle(const json& params) {
  const std::string suite = param<std::string>(params, "suite");
  const auto seed = param_or<std::uint64_t>(params, "seed", 0);

  json report;
  if (suite == "delta") {
    report = oracle_delta(param_or(params, "cases", 500), seed);
  } else if (suite == "identities") {
    report = oracle_identities(param_or(params, "cases", 200), seed);
  } else if (suite == "mean") {
    report = oracle_mean(param_or(params, "cases", 50), seed);
  } else {
    throw UsageError("suite must be delta, identities, or mean");
  }

  json outputs;
  if (params.contains("out") && !params["out"].is_null()) {
    const std::string out = param<std::string>(params, "out");
    write_json(out, report);
    outputs["report"] = out;
  }
  return outputs;
}

// ---- manifest plumbing --------------------------------------------------------

json execute_command(const std::string& command, const json& params) {
  if (command == "gen-data") return run_gen_data(params);
  if (command == "ensemble") return run_ensemble(params);
  if (command == "dist") return run_dist(params);
  if (command == "mean") return run_mean(params);
  if (command == "motifs") return run_motifs(params);
  if (command == "stability") return run_stability(params);
  if (command == "oracle") return run_oracle(params);
  throw UsageError("unknown command '" + command + "'");
}

fs::path manifest_path(const json& params) {
  if (params.contains("out_prefix")) {
    return fs::path(param<std::string>(params, "out_prefix") + "_manifest.json");
  }
  if (params.contains("out") && !params["out"].is_null()) {
    return fs::path(param<std::string>(params, "out") + ".manifest.json");
  }
  return {};
}

// Output-path parameters per command; rerun --out-dir rebases exactly these.
std::vector<const char*> output_params(const std::string& command) {
  if (command == "stability") return {"out_prefix"};
  if (command == "motifs") return {"out", "csv_out"};
  return {"out"};
}

void run_with_manifest(const std::string& command, json params) {
  const auto start = std::chrono::steady_clock::now();
  const json outputs = execute_command(command, params);
  const double duration =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const fs::path manifest = manifest_path(params);
  if (!manifest.empty()) {
    write_json(manifest, json{{"tool", kToolName},
                              {"version", kToolVersion},
                              {"command", command},
                              {"params", params},
                              {"outputs", outputs},
                              {"duration_seconds", duration}});
  }
  for (const auto& [name, path] : outputs.items()) {
    std::cout << name << ": " << path.get<std::string>() << '\n';
  }
}

void run_rerun(const std::string& manifest_file, const std::string& out_dir) {
  const json manifest = read_json(manifest_file);
  if (!manifest.contains("command") || !manifest.contains("params")) {
    throw ValidationError(manifest_file + ": missing field 'command' or 'params'");
  }
  const std::string command = manifest["command"].get<std::string>();
  json params = manifest["params"];

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const char* key : output_params(command)) {
      if (params.contains(key) && !params[key].is_null()) {
        const fs::path original(params[key].get<std::string>());
        params[key] = (fs::path(out_dir) / original.filename()).string();
      }
    }
  }
  run_with_manifest(command, params);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consensus clustering toolkit: partition metrics, mean partitions, "
               "motifs, and cluster-stability model selection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  std::string command_to_run;
  json params;

  // gen-data
  {
    auto* cmd = app.add_subcommand("gen-data", "generate a synthetic dataset CSV");
    auto kind = std::make_shared<std::string>();
    auto rows = std::make_shared<int>(0);
    auto cols = std::make_shared<int>(0);
    auto sigma = std::make_shared<double>(0.12);
    auto points_per = std::make_shared<int>(100);
    auto m = std::make_shared<int>(0);
    auto d = std::make_shared<int>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--kind", *kind, "gaussian-grid or uniform")->required();
    cmd->add_option("--rows", *rows, "grid rows (gaussian-grid)");
    cmd->add_option("--cols", *cols, "grid columns (gaussian-grid)");
    cmd->add_option("--sigma", *sigma, "per-coordinate noise (gaussian-grid)");
    cmd->add_option("--points-per", *points_per, "points per component (gaussian-grid)");
    cmd->add_option("--m", *m, "point count (uniform)");
    cmd->add_option("--d", *d, "dimension (uniform)");
    cmd->add_option("--seed", *seed, "master seed");
    cmd->add_option("--out", *out, "output CSV path")->required();
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "gen-data";
      params = json{{"kind", *kind}, {"sigma", *sigma}, {"points_per", *points_per},
                    {"d", *d},       {"seed", *seed},   {"out", *out}};
      if (*rows > 0) params["rows"] = *rows;
      if (*cols > 0) params["cols"] = *cols;
      if (*m > 0) params["m"] = *m;
    });
  }

  // ensemble
  {
    auto* cmd = app.add_subcommand("ensemble", "k-means ensemble of a dataset");
    auto data = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    auto kmeans_iters = std::make_shared<int>(100);
    auto n_init = std::make_shared<int>(1);
    auto policy = std::make_shared<std::string>("reseed");
    cmd->add_option("--data", *data, "dataset CSV")->required();
    cmd->add_option("--k", *k, "clusters per member")->required();
    cmd->add_option("--n", *n, "ensemble size")->required();
    cmd->add_option("--seed", *seed, "master seed");
    cmd->add_option("--out", *out, "output ensemble JSON")->required();
    cmd->add_option("--kmeans-max-iters", *kmeans_iters, "Lloyd iteration cap");
    cmd->add_option("--n-init", *n_init, "k-means starts per member");
    cmd->add_option("--empty-policy", *policy, "reseed or leave");
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "ensemble";
      params = json{{"data", *data},
                    {"k", *k},
                    {"n", *n},
                    {"seed", *seed},
                    {"out", *out},
                    {"kmeans_max_iters", *kmeans_iters},
                    {"n_init", *n_init},
                    {"empty_policy", *policy}};
    });
  }

  // dist
  {
    auto* cmd = app.add_subcommand("dist", "intrinsic distance between two partitions");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto oracle = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--a", *a, "first partition JSON")->required();
    cmd->add_option("--b", *b, "second partition JSON")->required();
    cmd->add_flag("--oracle", *oracle, "also run the factorial oracle");
    cmd->add_option("--out", *out, "output JSON")->required();
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "dist";
      params = json{{"a", *a}, {"b", *b}, {"oracle", *oracle}, {"out", *out}};
    });
  }

  // mean
  {
    auto* cmd = app.add_subcommand("mean", "approximate mean partition of an ensemble");
    auto ensemble = std::make_shared<std::string>();
    auto restarts = std::make_shared<int>(3);
    auto max_iters = std::make_shared<int>(200);
    auto tol = std::make_shared<double>(1e-10);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--ensemble", *ensemble, "ensemble JSON")->required();
    cmd->add_option("--restarts", *restarts, "solver restarts")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", *max_iters, "iteration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", *tol, "improvement tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", *seed, "solver seed");
    cmd->add_option("--out", *out, "output JSON")->required();
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "mean";
      params = json{{"ensemble", *ensemble}, {"restarts", *restarts}, {"max_iters", *max_iters},
                    {"tol", *tol},           {"seed", *seed},         {"out", *out}};
    });
  }

  // motifs
  {
    auto* cmd = app.add_subcommand("motifs", "consensus motifs of an ensemble");
    auto ensemble = std::make_shared<std::string>();
    auto tau = std::make_shared<double>(0.0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto data = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto csv_out = std::make_shared<std::string>();
    auto restarts = std::make_shared<int>(3);
    cmd->add_option("--ensemble", *ensemble, "ensemble JSON")->required();
    cmd->add_option("--tau", *tau, "consensus threshold in (0.5, 1)")->required();
    cmd->add_option("--seed", *seed, "solver seed");
    cmd->add_option("--data", *data, "dataset CSV for purity and coordinates");
    cmd->add_option("--out", *out, "motif report JSON")->required();
    cmd->add_option("--csv-out", *csv_out, "plot-ready CSV (default: report path with .csv)");
    cmd->add_option("--restarts", *restarts, "solver restarts")->check(CLI::PositiveNumber);
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "motifs";
      params = json{{"ensemble", *ensemble},
                    {"tau", *tau},
                    {"seed", *seed},
                    {"out", *out},
                    {"restarts", *restarts}};
      if (!data->empty()) params["data"] = *data;
      if (!csv_out->empty()) params["csv_out"] = *csv_out;
    });
  }

  // stability
  {
    auto* cmd = app.add_subcommand("stability", "instability scores over a cluster range");
    auto data = std::make_shared<std::string>();
    auto gen = std::make_shared<std::string>();
    auto rows = std::make_shared<int>(0);
    auto cols = std::make_shared<int>(0);
    auto sigma = std::make_shared<double>(0.12);
    auto points_per = std::make_shared<int>(100);
    auto m = std::make_shared<int>(0);
    auto d = std::make_shared<int>(2);
    auto kmin = std::make_shared<int>(0);
    auto kmax = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto trials = std::make_shared<int>(1);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto prefix = std::make_shared<std::string>();
    auto n_init = std::make_shared<int>(1);
    auto restarts = std::make_shared<int>(3);
    cmd->add_option("--data", *data, "dataset CSV (fixed across trials)");
    cmd->add_option("--gen", *gen, "draw a dataset per trial: gaussian-grid or uniform");
    cmd->add_option("--rows", *rows, "grid rows (--gen gaussian-grid)");
    cmd->add_option("--cols", *cols, "grid columns (--gen gaussian-grid)");
    cmd->add_option("--sigma", *sigma, "noise level (--gen gaussian-grid)");
    cmd->add_option("--points-per", *points_per, "points per component (--gen gaussian-grid)");
    cmd->add_option("--m", *m, "point count (--gen uniform)");
    cmd->add_option("--d", *d, "dimension (--gen uniform)");
    cmd->add_option("--kmin", *kmin, "smallest cluster count")->required();
    cmd->add_option("--kmax", *kmax, "largest cluster count")->required();
    cmd->add_option("--n", *n, "ensemble size per k")->required();
    cmd->add_option("--trials", *trials, "independent trials");
    cmd->add_option("--seed", *seed, "master seed");
    cmd->add_option("--out-prefix", *prefix, "output path prefix")->required();
    cmd->add_option("--n-init", *n_init, "k-means starts per member");
    cmd->add_option("--restarts", *restarts, "solver restarts")->check(CLI::PositiveNumber);
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "stability";
      params = json{{"kmin", *kmin},
                    {"kmax", *kmax},
                    {"n", *n},
                    {"trials", *trials},
                    {"seed", *seed},
                    {"out_prefix", *prefix},
                    {"n_init", *n_init},
                    {"restarts", *restarts},
                    {"sigma", *sigma},
                    {"points_per", *points_per},
                    {"d", *d}};
      if (!data->empty()) params["data"] = *data;
      if (!gen->empty()) params["gen"] = *gen;
      if (*rows > 0) params["rows"] = *rows;
      if (*cols > 0) params["cols"] = *cols;
      if (*m > 0) params["m"] = *m;
    });
  }

  // oracle
  {
    auto* cmd = app.add_subcommand("oracle", "randomized brute-force verification");
    auto suite = std::make_shared<std::string>();
    auto cases = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--suite", *suite, "delta, mean, or identities")->required();
    cmd->add_option("--cases", *cases, "number of random cases");
    cmd->add_option("--seed", *seed, "case seed");
    cmd->add_option("--out", *out, "optional report JSON");
    cmd->callback([=, &command_to_run, &params] {
      command_to_run = "oracle";
      params = json{{"suite", *suite}, {"seed", *seed}};
      if (*cases > 0) params["cases"] = *cases;
      if (!out->empty()) params["out"] = *out;
    });
  }

  // rerun
  std::string rerun_manifest;
  std::string rerun_out_dir;
  {
    auto* cmd = app.add_subcommand("rerun", "replay a command from its manifest");
    cmd->add_option("--manifest", rerun_manifest, "manifest JSON")->required();
    cmd->add_option("--out-dir", rerun_out_dir, "redirect outputs into this directory");
    cmd->callback([&command_to_run] { command_to_run = "rerun"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (command_to_run == "rerun") {
      run_rerun(rerun_manifest, rerun_out_dir);
    } else {
      run_with_manifest(command_to_run, params);
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const OracleFailure& e) {
    std::cerr << "oracle failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
