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
#include <vector>

#include <Eigen/Core>

namespace meanpart {

using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Dataset {
  PointMatrix points;             // one row per point
  std::vector<int> ground_truth;  // empty, or one 1-based component label per point

  Eigen::Index m() const { return points.rows(); }
  Eigen::Index d() const { return points.cols(); }
  bool has_ground_truth() const { return !ground_truth.empty(); }
};

/// rows x cols planted components centered on the integer grid, isotropic
/// Gaussian noise with standard deviation sigma per coordinate,
/// points_per_component draws each. Ground truth labels components in
/// row-major grid order starting at 1. Deterministic per seed.
Dataset gen_gaussian_grid(int rows, int cols, double sigma, int points_per_component,
                          std::uint64_t seed);

/// m i.i.d. points uniform on [0,1]^d; no ground truth.
Dataset gen_uniform(int m, int d, std::uint64_t seed);

}  // namespace meanpart
