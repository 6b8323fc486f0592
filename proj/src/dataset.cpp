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

#include "meanpart/dataset.hpp"

#include "meanpart/errors.hpp"
#include "meanpart/rng.hpp"

namespace meanpart {

Dataset gen_gaussian_grid(int rows, int cols, double sigma, int points_per_component,
                          std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw ValidationError("grid must have positive extent");
  if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
  if (points_per_component < 1) {
    throw ValidationError("points per component must be positive");
  }

  const int components = rows * cols;
  const int m = components * points_per_component;
  Dataset out;
  out.points.resize(m, 2);
  out.ground_truth.resize(m);

  Rng rng(seed);
  int next = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int label = r * cols + c + 1;
      for (int p = 0; p < points_per_component; ++p, ++next) {
        out.points(next, 0) = r + sigma * rng.next_gaussian();
        out.points(next, 1) = c + sigma * rng.next_gaussian();
        out.ground_truth[next] = label;
      }
    }
  }
  return out;
}

Dataset gen_uniform(int m, int d, std::uint64_t seed) {
  if (m < 1 || d < 1) throw ValidationError("point count and dimension must be positive");
  Dataset out;
  out.points.resize(m, d);
  Rng rng(seed);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) out.points(i, j) = rng.next_unit();
  }
  return out;
}

}  // namespace meanpart
