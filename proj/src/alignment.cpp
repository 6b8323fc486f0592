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

#include "meanpart/alignment.hpp"

#include <cmath>

#include "meanpart/errors.hpp"
#include "meanpart/lap.hpp"

namespace meanpart {

namespace {

void check_dims(const LabeledPartition& x, const LabeledPartition& y) {
  if (x.ell() != y.ell() || x.m() != y.m()) {
    throw ValidationError("distance requires matching dimensions");
  }
}

}  // namespace

PairwiseAlignment delta(const LabeledPartition& x, const LabeledPartition& y) {
  check_dims(x, y);

  // Assign rows of x to rows of y so the total squared row distance is
  // minimal; the optimum is exactly the squared intrinsic metric. Squared
  // differences keep the sum free of cancellation, so identical orbits give
  // distance zero exactly (the inner-product form of delta^2 would lose that
  // to round-off under the square root).
  const int ell = static_cast<int>(x.ell());
  Matrix cost(ell, ell);
  for (int k = 0; k < ell; ++k) {
    for (int l = 0; l < ell; ++l) {
      cost(k, l) = (x.values().row(k) - y.values().row(l)).squaredNorm();
    }
  }
  const LapResult lap = solve_assignment_min(cost);
  const std::vector<int> mapping = lex_min_optimal_assignment(cost, lap);

  double dist2 = 0.0;
  double inner = 0.0;
  for (int k = 0; k < ell; ++k) {
    dist2 += cost(k, mapping[k]);
    inner += x.values().row(k).dot(y.values().row(mapping[k]));
  }
  return PairwiseAlignment{Permutation(mapping), std::sqrt(std::max(0.0, dist2)), inner};
}

PairwiseAlignment delta_bruteforce(const LabeledPartition& x, const LabeledPartition& y) {
  check_dims(x, y);

  const Permutation* best = nullptr;
  double best_dist2 = 0.0;
  const std::vector<Permutation> perms = all_permutations(static_cast<int>(x.ell()));
  for (const Permutation& p : perms) {
    const double d2 = (p.apply(x.values()) - y.values()).squaredNorm();
    if (best == nullptr || d2 < best_dist2) {
      best = &p;
      best_dist2 = d2;
    }
  }

  double inner = 0.0;
  for (int k = 0; k < best->size(); ++k) {
    inner += x.values().row(k).dot(y.values().row(best->target(k)));
  }
  return PairwiseAlignment{*best, std::sqrt(best_dist2), inner};
}

LabeledPartition align_to(const LabeledPartition& x, const LabeledPartition& z) {
  return delta(x, z).permutation.apply(x);
}

}  // namespace meanpart
