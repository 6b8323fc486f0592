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

#include <vector>

#include "meanpart/partition.hpp"

namespace meanpart {

struct LapResult {
  std::vector<int> assignment;   // assignment[i] = column matched to row i
  double total = 0.0;            // sum of chosen costs
  std::vector<double> row_dual;  // feasible potentials: cost(i,j) >= u_i + v_j
  std::vector<double> col_dual;
};

/// Minimum-cost perfect assignment on a square cost matrix, solved by the
/// O(n^3) shortest-augmenting-path method with dual potentials
/// (Jonker-Volgenant / Hungarian family). Deterministic.
LapResult solve_assignment_min(const Matrix& cost);

/// Among the minimum-cost assignments, returns the one with lexicographically
/// smallest assignment array. Candidate edges are those with (near) zero
/// reduced cost under the solver's dual potentials; by complementary
/// slackness these carry every optimal assignment. Falls back to
/// base.assignment if the refined choice is not cost-neutral.
std::vector<int> lex_min_optimal_assignment(const Matrix& cost, const LapResult& base);

}  // namespace meanpart
