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

#include <optional>
#include <utility>
#include <vector>

#include "meanpart/consensus.hpp"
#include "meanpart/dataset.hpp"
#include "meanpart/kmeans.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

/// Average squared pairwise intrinsic distance over the sample (zero diagonal
/// included). Label-invariant.
double pairwise_instability(std::span<const LabeledPartition> sample);

/// Instability through a multiple alignment: runs the mean-partition solver
/// and reports g of the resulting alignment together with the alignment.
/// Upper-bounds the optimal-alignment instability.
std::pair<double, MultipleAlignment> multiple_alignment_instability(
    std::span<const LabeledPartition> sample, const SolverConfig& config);

/// Fréchet function value at the solver's approximate mean.
double frechet_variation(std::span<const LabeledPartition> sample, const SolverConfig& config);

/// Per-k record of a stability sweep.
struct StabilityRow {
  int k = 0;
  double pairwise = 0.0;    // G: pairwise instability
  double alignment = 0.0;   // g: instability of the reported alignment
  double variation = 0.0;   // F: Fréchet variation at the approximate mean
  double chain_gap = 0.0;   // D = g - G, nonnegative
  bool variation_exceeds_pairwise = false;  // diagnostic: F > G despite expectation
  std::optional<double> exact_alignment;    // g at the exhaustive optimum, when sized
  int iterations = 0;
  bool converged = false;
  int restarts_used = 0;
};

struct StabilityReport {
  int k_min = 0;
  int k_max = 0;
  int n = 0;
  std::vector<StabilityRow> rows;
  int selected_k_pairwise = 0;   // argmin G, smaller k on ties
  int selected_k_alignment = 0;  // argmin g
  int selected_k_variation = 0;  // argmin F
};

/// Argmin over (k, score) pairs with ties broken toward smaller k.
int select_k(std::span<const std::pair<int, double>> scores);

/// For each k in [k_min, k_max]: generate an n-member k-means ensemble of the
/// dataset (seeds derived from ensemble.seed and k) and score it with G, g,
/// and F. Verifies G <= g and g = 2f on every row. The per-k ensembles and
/// solver runs depend only on (ensemble.seed, solver.seed, k), never on
/// scheduling.
StabilityReport stability_sweep(const Dataset& data, int k_min, int k_max, int n,
                                const EnsembleSpec& ensemble, const SolverConfig& solver);

}  // namespace meanpart
