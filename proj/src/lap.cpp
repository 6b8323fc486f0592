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

#include "meanpart/lap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meanpart/errors.hpp"

namespace meanpart {

LapResult solve_assignment_min(const Matrix& cost) {
  if (cost.rows() != cost.cols() || cost.rows() < 1) {
    throw ValidationError("assignment requires a nonempty square cost matrix");
  }
  const int n = static_cast<int>(cost.rows());
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based arrays; column 0 is the virtual start of each augmenting path.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  LapResult result;
  result.assignment.assign(n, -1);
  result.row_dual.assign(n, 0.0);
  result.col_dual.assign(n, 0.0);
  for (int j = 1; j <= n; ++j) result.assignment[match[j] - 1] = j - 1;
  for (int i = 1; i <= n; ++i) result.row_dual[i - 1] = u[i];
  for (int j = 1; j <= n; ++j) result.col_dual[j - 1] = v[j];
  result.total = 0.0;
  for (int i = 0; i < n; ++i) result.total += cost(i, result.assignment[i]);
  return result;
}

namespace {

// Kuhn augmenting step on the admissible-edge graph.
bool try_augment(int row, const std::vector<std::vector<int>>& adj,
                 std::vector<int>& row_to_col, std::vector<int>& col_to_row,
                 std::vector<char>& visited) {
  for (int col : adj[row]) {
    if (visited[col]) continue;
    visited[col] = 1;
    if (col_to_row[col] < 0 ||
        try_augment(col_to_row[col], adj, row_to_col, col_to_row, visited)) {
      row_to_col[row] = col;
      col_to_row[col] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> lex_min_optimal_assignment(const Matrix& cost, const LapResult& base) {
  const int n = static_cast<int>(cost.rows());
  if (n == 1) return base.assignment;

  const double scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
  const double eps = 1e-9 * scale;

  // Admissible edges: zero reduced cost up to round-off. The base matching is
  // always admitted so a perfect matching exists.
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == base.assignment[i] ||
          cost(i, j) - base.row_dual[i] - base.col_dual[j] <= eps) {
        adj[i].push_back(j);
      }
    }
  }

  std::vector<int> row_to_col = base.assignment;
  std::vector<int> col_to_row(n, -1);
  for (int i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;

  // Fix rows in order, each to its smallest column that still admits a
  // perfect matching on the remaining rows.
  std::vector<char> fixed_col(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : adj[i]) {
      if (fixed_col[j]) continue;
      if (j == row_to_col[i]) break;  // already the best reachable choice
      if (j > row_to_col[i]) continue;
      // Tentatively rematch: free column j, then try to re-seat its owner.
      const int owner = col_to_row[j];
      const int old = row_to_col[i];
      row_to_col[i] = j;
      col_to_row[j] = i;
      row_to_col[owner] = -1;
      col_to_row[old] = -1;
      std::vector<char> visited(n, 0);
      for (int c = 0; c < n; ++c) visited[c] = fixed_col[c];
      visited[j] = 1;
      if (try_augment(owner, adj, row_to_col, col_to_row, visited)) {
        break;  // rematch succeeded; row i now fixed to j
      }
      // Roll back.
      row_to_col[i] = old;
      col_to_row[old] = i;
      row_to_col[owner] = j;
      col_to_row[j] = owner;
    }
    fixed_col[row_to_col[i]] = 1;
  }

  // Accept only if cost-neutral; protects against eps admitting a near-tie.
  double refined_total = 0.0;
  for (int i = 0; i < n; ++i) refined_total += cost(i, row_to_col[i]);
  if (refined_total > base.total + 1e-9 * std::max(1.0, std::abs(base.total))) {
    return base.assignment;
  }
  return row_to_col;
}

}  // namespace meanpart
