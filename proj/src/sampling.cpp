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

#include "meanpart/sampling.hpp"

#include <cmath>
#include <numeric>

namespace meanpart {

LabeledPartition random_soft_partition(Rng& rng, int ell, int m) {
  Matrix values(ell, m);
  for (int j = 0; j < m; ++j) {
    double sum = 0.0;
    for (int k = 0; k < ell; ++k) {
      const double e = -std::log(1.0 - rng.next_unit());
      values(k, j) = e;
      sum += e;
    }
    for (int k = 0; k < ell; ++k) values(k, j) /= sum;
  }
  return LabeledPartition(std::move(values));
}

HardLabeling random_hard_labeling(Rng& rng, int ell, int m) {
  HardLabeling labels;
  labels.ell = ell;
  labels.labels.resize(m);
  for (int j = 0; j < m; ++j) {
    labels.labels[j] = 1 + static_cast<int>(rng.next_below(ell));
  }
  return labels;
}

LabeledPartition random_hard_partition(Rng& rng, int ell, int m) {
  return make_hard(random_hard_labeling(rng, ell, m));
}

Permutation random_permutation(Rng& rng, int ell) {
  std::vector<int> mapping(ell);
  std::iota(mapping.begin(), mapping.end(), 0);
  for (int k = 0; k < ell - 1; ++k) {
    const int swap_with = k + static_cast<int>(rng.next_below(ell - k));
    std::swap(mapping[k], mapping[swap_with]);
  }
  return Permutation(std::move(mapping));
}

}  // namespace meanpart
