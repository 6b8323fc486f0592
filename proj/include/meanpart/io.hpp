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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "meanpart/consensus.hpp"
#include "meanpart/dataset.hpp"
#include "meanpart/partition.hpp"
#include "meanpart/profile.hpp"
#include "meanpart/stability.hpp"

// File formats:
//   partition  {"ell", "m", "kind": "hard"|"soft", "labels": [...]
//               or "values": [[...], ...]}
//   ensemble   {"ell", "m", "partitions": [partition, ...]}
//   dataset    CSV with header x1,...,xd[,label]
//   stability  CSV with header k,G,g,F,D,selected_marker
// Labels are 1-based; point indices and permutation mappings are 0-based.

namespace meanpart {

/// Shortest round-trip decimal representation (std::to_chars), so identical
/// values serialize to identical bytes on every run.
std::string format_double(double value);

nlohmann::json partition_to_json(const LabeledPartition& partition);
nlohmann::json partition_to_json(const HardLabeling& labels);
LabeledPartition partition_from_json(const nlohmann::json& j);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

void write_ensemble(const std::filesystem::path& path, const std::vector<HardLabeling>& members);
void write_ensemble(const std::filesystem::path& path, const std::vector<LabeledPartition>& members);
std::vector<LabeledPartition> read_ensemble(const std::filesystem::path& path);

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);
Dataset read_dataset_csv(const std::filesystem::path& path);

nlohmann::json mean_result_to_json(const MeanResult& result, bool stationary);

nlohmann::json motif_report_to_json(const MotifSet& motifs, int m,
                                    const std::vector<std::optional<double>>& purity);

/// Plot-ready join of point coordinates (when available) with motif ids:
/// point_index,x...,motif_id with motif_id = 1-based cluster row or -1.
void write_motif_csv(const std::filesystem::path& path, const MotifSet& motifs,
                     const Dataset* data, int m);

void write_stability_csv(const std::filesystem::path& path, const StabilityReport& report);
nlohmann::json stability_report_to_json(const StabilityReport& report);

}  // namespace meanpart
