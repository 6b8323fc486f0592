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

#include <Eigen/Core>

#include <vector>

namespace meanpart {

/// Dense row-major matrix; one contiguous row per cluster.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Per-entry slack allowed when checking that a membership column sums to 1.
inline constexpr double kColumnSumTol = 1e-9;

/// Entrywise tolerance for exact-fix tests (stabilizer membership).
inline constexpr double kStabilizerTol = 1e-12;

/// Largest cluster count for which factorial enumeration is permitted
/// (8! = 40320 permutations).
inline constexpr int kMaxEnumClusters = 8;

/// A cluster membership matrix: entry (k, j) is the degree of membership of
/// data point j in cluster k. Entries lie in [0, 1] and every column sums to
/// one. Rows carry the (arbitrary) cluster labelling; empty clusters appear
/// as all-zero rows. Immutable after construction.
class LabeledPartition {
 public:
  /// Validates entry range and column sums; throws ValidationError otherwise.
  explicit LabeledPartition(Matrix values);

  Eigen::Index ell() const { return values_.rows(); }
  Eigen::Index m() const { return values_.cols(); }
  const Matrix& values() const { return values_; }
  double operator()(Eigen::Index k, Eigen::Index j) const { return values_(k, j); }

 private:
  Matrix values_;
};

/// Crisp partition stored as one 1-based cluster label per point.
struct HardLabeling {
  int ell = 0;
  std::vector<int> labels;  // values in {1..ell}, one per point
};

/// A relabelling of clusters. mapping()[k] is the destination row of source
/// row k: applying the permutation to X yields Y with Y.row(mapping[k]) ==
/// X.row(k).
class Permutation {
 public:
  /// Validates that `target` is a bijection on {0..ell-1}.
  explicit Permutation(std::vector<int> target);

  static Permutation identity(int ell);

  int size() const { return static_cast<int>(target_.size()); }
  int target(int k) const { return target_[k]; }
  const std::vector<int>& mapping() const { return target_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Composition acting left to right on matrices: compose(q).apply(X) equals
  /// this->apply(q.apply(X)).
  Permutation compose(const Permutation& q) const;

  Matrix apply(const Matrix& x) const;
  LabeledPartition apply(const LabeledPartition& x) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> target_;
};

/// All ell! permutations in lexicographic order of their mapping arrays.
/// Throws CapacityError for ell > kMaxEnumClusters.
std::vector<Permutation> all_permutations(int ell);

/// One-hot membership matrix for a crisp labelling.
LabeledPartition make_hard(const HardLabeling& labels);

/// Frobenius inner product; arguments must share dimensions.
double inner_product(const LabeledPartition& x, const LabeledPartition& y);

/// Euclidean (Frobenius) norm of the membership matrix.
double frobenius_norm(const LabeledPartition& x);

/// Length of the underlying partition. Representation-independent: every row
/// permutation of x has the same value, which equals frobenius_norm(x).
double partition_length(const LabeledPartition& x);

/// All permutations fixing x entrywise (within kStabilizerTol). Always
/// contains the identity; the result is a subgroup of the permutation group.
std::vector<Permutation> stabilizer(const LabeledPartition& x);

/// True iff the stabilizer is trivial. Well-defined on the partition (orbit)
/// level since stabilizers of representations are conjugate.
bool is_asymmetric(const LabeledPartition& x);

/// Largest absolute entrywise difference; test and convergence helper.
double max_abs_diff(const LabeledPartition& a, const LabeledPartition& b);

}  // namespace meanpart
