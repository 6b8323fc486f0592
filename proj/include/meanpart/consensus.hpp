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

#include <cstdint>
#include <span>
#include <vector>

#include "meanpart/partition.hpp"

namespace meanpart {

/// One chosen representation per sample partition.
class MultipleAlignment {
 public:
  /// Members must share dimensions; source_ids records which sample partition
  /// each member represents.
  MultipleAlignment(std::vector<LabeledPartition> members, std::vector<int> source_ids);

  /// Convenience: source ids 0..n-1.
  explicit MultipleAlignment(std::vector<LabeledPartition> members);

  int size() const { return static_cast<int>(members_.size()); }
  Eigen::Index ell() const { return members_.front().ell(); }
  Eigen::Index m() const { return members_.front().m(); }
  const LabeledPartition& member(int i) const { return members_[i]; }
  const std::vector<LabeledPartition>& members() const { return members_; }
  const std::vector<int>& source_ids() const { return source_ids_; }

 private:
  void validate() const;

  std::vector<LabeledPartition> members_;
  std::vector<int> source_ids_;
};

struct SolverConfig {
  int restarts = 1;
  int max_iters = 200;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

/// Output of the mean-partition solvers.
struct MeanResult {
  LabeledPartition mean;        // a representation of the (approximate) mean
  MultipleAlignment alignment;  // sample representations in optimal position with mean
  double frechet_value = 0.0;   // F_n at the mean
  int iterations = 0;           // align/average cycles of the winning restart
  bool converged = false;       // permutation tuple reached a fixed point
  int restarts_used = 0;        // index of the winning restart
  std::vector<double> trace;    // per-cycle f values of the winning restart
};

/// Fréchet function value: average squared intrinsic distance from z to the
/// sample. Invariant under relabelling z or any sample member.
double frechet_value(std::span<const LabeledPartition> sample, const LabeledPartition& z);

/// Elementwise average of the alignment members; always a valid partition
/// representation (columns still sum to one).
LabeledPartition alignment_mean(const MultipleAlignment& a);

/// Average squared pairwise Frobenius distance (1/n^2 normalization, zero
/// diagonal included), computed as the literal double sum.
double g_value(const MultipleAlignment& a);

/// Average squared Frobenius distance of members to the alignment mean.
double f_value(const MultipleAlignment& a);

/// Sum of inner products of members with the alignment mean; equals
/// n * |mean|^2.
double h_value(const MultipleAlignment& a);

/// Approximates a mean partition by alternating alignment and averaging:
/// align every sample member to the current candidate, replace the candidate
/// by the member average, repeat until the permutation tuple repeats, the f
/// improvement drops below tol, or max_iters is hit. Runs config.restarts
/// independent starts (start r < n begins at sample member r; later starts at
/// a seeded random convex combination of two members) and returns the restart
/// with the smallest Fréchet value, earliest index on ties.
MeanResult mean_partition(std::span<const LabeledPartition> sample, const SolverConfig& config);

/// Certified global optimum for tiny instances: enumerates every multiple
/// alignment (first member's representation fixed), selects the one with
/// minimal g, and returns its mean. Requires (ell!)^(n-1) <= 10^6. The
/// returned Fréchet value provably equals f of the optimal alignment; this is
/// verified internally.
MeanResult exhaustive_mean(std::span<const LabeledPartition> sample);

/// True iff result.mean equals the average of result.alignment within 1e-9
/// and no member's inner product with the mean can be improved by more than
/// 1e-9 through realignment.
bool check_stationarity(const MeanResult& result);

}  // namespace meanpart
