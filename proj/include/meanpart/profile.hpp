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

#include <optional>
#include <string>
#include <vector>

#include "meanpart/consensus.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

using BinaryMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Average membership matrix of a multiple alignment. For crisp ensembles,
/// entry (k, j) is the relative frequency with which point j lands in cluster
/// k across the aligned members.
struct Profile {
  LabeledPartition values;
  int n = 0;                  // ensemble size behind the average
  std::string alignment_ref;  // provenance of the alignment used
};

/// Consensus clusters cut from a profile at threshold tau: motifs[k] lists
/// the points whose average membership in cluster k reaches tau. Motifs are
/// pairwise disjoint and partition the covered point set.
struct MotifSet {
  double tau = 0.0;
  std::vector<std::vector<int>> motifs;  // one (possibly empty) list per cluster
  std::vector<int> covered;              // sorted union of the motifs
};

Profile profile_of(const MultipleAlignment& a, std::string alignment_ref = {});

/// 0/1 matrix with entry 1 where tau <= profile value (inclusive). Because
/// tau > 0.5 and columns sum to one, each column has at most one 1.
/// tau must lie strictly inside (0.5, 1).
BinaryMatrix truncate(const Profile& p, double tau);

MotifSet motifs_of(const Profile& p, double tau);

/// Points not covered by any motif, sorted.
std::vector<int> uncovered_points(const MotifSet& motifs, int m);

/// Majority ground-truth fraction per motif (nullopt for empty motifs).
/// ground_truth holds one 1-based component label per point.
std::vector<std::optional<double>> motif_purity(const MotifSet& motifs,
                                                const std::vector<int>& ground_truth);

}  // namespace meanpart
