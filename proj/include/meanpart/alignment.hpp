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

#include "meanpart/partition.hpp"

namespace meanpart {

/// Result of putting two representations in optimal position.
struct PairwiseAlignment {
  Permutation permutation;  // applied to the first argument
  double distance = 0.0;    // the intrinsic metric value
  double inner_value = 0.0; // maximized <PX, Y>
};

/// Intrinsic metric between the partitions represented by x and y: the
/// minimum Frobenius distance over relabellings, attained by the returned
/// permutation. Solved exactly as a linear assignment problem on the row
/// inner-product score matrix, using the identity
///   distance^2 = |x|^2 + |y|^2 - 2 max_P <Px, y>,
/// with the square clamped at zero against round-off. Ties between optimal
/// permutations break to the lexicographically smallest mapping array.
PairwiseAlignment delta(const LabeledPartition& x, const LabeledPartition& y);

/// Same contract as delta, computed by exhaustive search over all ell!
/// relabellings with direct norm evaluation. Verification oracle; requires
/// ell <= kMaxEnumClusters.
PairwiseAlignment delta_bruteforce(const LabeledPartition& x, const LabeledPartition& y);

/// The representation of x in optimal position with z, i.e. delta(x, z)'s
/// permutation applied to x.
LabeledPartition align_to(const LabeledPartition& x, const LabeledPartition& z);

}  // namespace meanpart
