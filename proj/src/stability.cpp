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

#include "meanpart/stability.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "meanpart/alignment.hpp"
#include "meanpart/errors.hpp"
#include "meanpart/parallel.hpp"
#include "meanpart/rng.hpp"

namespace meanpart {

namespace {

void check_sample(std::span<const LabeledPartition> sample) {
  if (sample.empty()) throw ValidationError("sample must not be empty");
  for (const LabeledPartition& x : sample) {
    if (x.ell() != sample.front().ell() || x.m() != sample.front().m()) {
      throw ValidationError("sample members must share dimensions");
    }
  }
}

// Strictly upper-triangular squared distances, computed independently per
// pair and reduced in fixed order by the callers.
std::vector<double> pairwise_squared(std::span<const LabeledPartition> sample) {
  const int n = static_cast<int>(sample.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> squared(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int p) {
    const double d = delta(sample[pairs[p].first], sample[pairs[p].second]).distance;
    squared[p] = d * d;
  });
  return squared;
}

}  // namespace

double pairwise_instability(std::span<const LabeledPartition> sample) {
  check_sample(sample);
  const int n = static_cast<int>(sample.size());
  const std::vector<double> squared = pairwise_squared(sample);
  double total = 0.0;
  for (double s : squared) total += 2.0 * s;  // (i,j) and (j,i); diagonal is zero
  return total / (static_cast<double>(n) * n);
}

std::pair<double, MultipleAlignment> multiple_alignment_instability(
    std::span<const LabeledPartition> sample, const SolverConfig& config) {
  MeanResult result = mean_partition(sample, config);
  const double g = g_value(result.alignment);
  return {g, std::move(result.alignment)};
}

double frechet_variation(std::span<const LabeledPartition> sample, const SolverConfig& config) {
  return mean_partition(sample, config).frechet_value;
}

int select_k(std::span<const std::pair<int, double>> scores) {
  if (scores.empty()) throw ValidationError("score table must not be empty");
  int best_k = scores.front().first;
  double best = scores.front().second;
  for (const auto& [k, score] : scores) {
    if (score < best || (score == best && k < best_k)) {
      best = score;
      best_k = k;
    }
  }
  return best_k;
}

StabilityReport stability_sweep(const Dataset& data, int k_min, int k_max, int n,
                                const EnsembleSpec& ensemble, const SolverConfig& solver) {
  if (k_min < 1 || k_min > k_max || k_max > data.m()) {
    throw ValidationError("cluster range must satisfy 1 <= k_min <= k_max <= point count");
  }
  if (n < 2) throw ValidationError("stability scoring needs at least 2 ensemble members");

  StabilityReport report;
  report.k_min = k_min;
  report.k_max = k_max;
  report.n = n;

  for (int k = k_min; k <= k_max; ++k) {
    EnsembleSpec spec = ensemble;
    spec.n = n;
    spec.k = k;
    spec.seed = derive_seed(ensemble.seed, "stability-k", static_cast<std::uint64_t>(k));
    const std::vector<LabeledPartition> sample = generate_ensemble(data, spec);

    SolverConfig cfg = solver;
    cfg.seed = derive_seed(solver.seed, "stability-k", static_cast<std::uint64_t>(k));
    MeanResult result = mean_partition(sample, cfg);

    StabilityRow row;
    row.k = k;
    row.pairwise = pairwise_instability(sample);
    row.alignment = g_value(result.alignment);
    row.variation = result.frechet_value;
    row.chain_gap = row.alignment - row.pairwise;
    row.variation_exceeds_pairwise = row.variation > row.pairwise + 1e-9;
    row.iterations = result.iterations;
    row.converged = result.converged;
    row.restarts_used = result.restarts_used;

    if (row.pairwise > row.alignment + 1e-9) {
      throw std::logic_error("pairwise instability exceeds alignment instability at k=" +
                             std::to_string(k));
    }
    if (std::abs(row.alignment - 2.0 * f_value(result.alignment)) > 1e-9) {
      throw std::logic_error("g != 2f for the reported alignment at k=" + std::to_string(k));
    }

    const double enumerations = (n - 1) * std::lgamma(static_cast<double>(k) + 1.0);
    if (k <= kMaxEnumClusters && enumerations <= std::log(1e6)) {
      row.exact_alignment = g_value(exhaustive_mean(sample).alignment);
    }
    report.rows.push_back(std::move(row));
  }

  std::vector<std::pair<int, double>> by_pairwise, by_alignment, by_variation;
  for (const StabilityRow& row : report.rows) {
    by_pairwise.emplace_back(row.k, row.pairwise);
    by_alignment.emplace_back(row.k, row.alignment);
    by_variation.emplace_back(row.k, row.variation);
  }
  report.selected_k_pairwise = select_k(by_pairwise);
  report.selected_k_alignment = select_k(by_alignment);
  report.selected_k_variation = select_k(by_variation);
  return report;
}

}  // namespace meanpart
