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

#include "meanpart/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "meanpart/errors.hpp"

namespace meanpart {

LabeledPartition::LabeledPartition(Matrix values) : values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw ValidationError("partition matrix must have at least one row and column");
  }
  for (Eigen::Index k = 0; k < values_.rows(); ++k) {
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
      const double v = values_(k, j);
      if (!(v >= -kColumnSumTol && v <= 1.0 + kColumnSumTol)) {
        throw ValidationError("membership degree out of [0,1] at row " +
                              std::to_string(k) + ", column " + std::to_string(j));
      }
    }
  }
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    const double s = values_.col(j).sum();
    if (std::abs(s - 1.0) > kColumnSumTol) {
      throw ValidationError("memberships of point " + std::to_string(j) +
                            " sum to " + std::to_string(s) + ", expected 1");
    }
  }
}

Permutation::Permutation(std::vector<int> target) : target_(std::move(target)) {
  const int ell = static_cast<int>(target_.size());
  if (ell < 1) throw ValidationError("permutation must have positive size");
  std::vector<char> seen(ell, 0);
  for (int t : target_) {
    if (t < 0 || t >= ell || seen[t]) {
      throw ValidationError("permutation mapping is not a bijection");
    }
    seen[t] = 1;
  }
}

Permutation Permutation::identity(int ell) {
  std::vector<int> t(ell);
  std::iota(t.begin(), t.end(), 0);
  return Permutation(std::move(t));
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k) {
    if (target_[k] != k) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(target_.size());
  for (int k = 0; k < size(); ++k) inv[target_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (size() != q.size()) throw ValidationError("permutation size mismatch");
  std::vector<int> t(target_.size());
  for (int k = 0; k < size(); ++k) t[k] = target_[q.target_[k]];
  return Permutation(std::move(t));
}

Matrix Permutation::apply(const Matrix& x) const {
  if (x.rows() != size()) throw ValidationError("permutation/matrix size mismatch");
  Matrix y(x.rows(), x.cols());
  for (int k = 0; k < size(); ++k) y.row(target_[k]) = x.row(k);
  return y;
}

LabeledPartition Permutation::apply(const LabeledPartition& x) const {
  return LabeledPartition(apply(x.values()));
}

std::vector<Permutation> all_permutations(int ell) {
  if (ell < 1) throw ValidationError("cluster count must be positive");
  if (ell > kMaxEnumClusters) {
    throw CapacityError("permutation enumeration limited to " +
                        std::to_string(kMaxEnumClusters) + " clusters, got " +
                        std::to_string(ell));
  }
  std::vector<int> t(ell);
  std::iota(t.begin(), t.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

LabeledPartition make_hard(const HardLabeling& labels) {
  if (labels.ell < 1) throw ValidationError("cluster count must be positive");
  if (labels.labels.empty()) throw ValidationError("labelling must cover at least one point");
  Matrix values = Matrix::Zero(labels.ell, static_cast<Eigen::Index>(labels.labels.size()));
  for (std::size_t j = 0; j < labels.labels.size(); ++j) {
    const int label = labels.labels[j];
    if (label < 1 || label > labels.ell) {
      throw ValidationError("label " + std::to_string(label) + " of point " +
                            std::to_string(j) + " outside {1.." +
                            std::to_string(labels.ell) + "}");
    }
    values(label - 1, static_cast<Eigen::Index>(j)) = 1.0;
  }
  return LabeledPartition(std::move(values));
}

double inner_product(const LabeledPartition& x, const LabeledPartition& y) {
  if (x.ell() != y.ell() || x.m() != y.m()) {
    throw ValidationError("inner product requires matching dimensions");
  }
  return x.values().cwiseProduct(y.values()).sum();
}

double frobenius_norm(const LabeledPartition& x) { return x.values().norm(); }

double partition_length(const LabeledPartition& x) { return frobenius_norm(x); }

std::vector<Permutation> stabilizer(const LabeledPartition& x) {
  std::vector<Permutation> fixing;
  for (const Permutation& p : all_permutations(static_cast<int>(x.ell()))) {
    bool fixes = true;
    for (int k = 0; fixes && k < p.size(); ++k) {
      // PX = X  <=>  row k of X lands unchanged on row target(k).
      fixes = (x.values().row(p.target(k)) - x.values().row(k))
                  .cwiseAbs()
                  .maxCoeff() <= kStabilizerTol;
    }
    if (fixes) fixing.push_back(p);
  }
  return fixing;
}

bool is_asymmetric(const LabeledPartition& x) { return stabilizer(x).size() == 1; }

double max_abs_diff(const LabeledPartition& a, const LabeledPartition& b) {
  if (a.ell() != b.ell() || a.m() != b.m()) {
    throw ValidationError("comparison requires matching dimensions");
  }
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

}  // namespace meanpart
