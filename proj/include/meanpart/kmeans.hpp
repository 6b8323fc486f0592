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

#include "meanpart/dataset.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

enum class EmptyClusterPolicy {
  kReseedFarthest,  // re-center once on the point farthest from its centroid
  kLeaveEmpty,      // keep the all-zero row
};

struct KMeansOptions {
  int max_iters = 100;
  int n_init = 1;  // independent Lloyd starts, best within-cluster SSQ wins
  EmptyClusterPolicy empty_policy = EmptyClusterPolicy::kReseedFarthest;
};

struct KMeansResult {
  HardLabeling labels;
  int iterations = 0;
  bool converged = false;
  std::vector<double> wcss_trace;  // within-cluster sum of squares per iteration
};

/// Lloyd iterations from k distinct data points sampled uniformly (seeded),
/// squared Euclidean distances, assignment ties to the lowest cluster index,
/// until the assignment repeats or max_iters. With n_init > 1 the start with
/// the lowest final within-cluster sum of squares wins (first on ties).
KMeansResult kmeans_run(const Dataset& data, int k, std::uint64_t seed,
                        const KMeansOptions& options = {});

/// Hard labelling only, default options.
HardLabeling kmeans(const Dataset& data, int k, std::uint64_t seed);

struct EnsembleSpec {
  int n = 1;
  int k = 1;
  std::uint64_t seed = 0;
  KMeansOptions kmeans;
};

/// n crisp partitions from independently seeded k-means runs on the same
/// dataset. Member i's random stream depends only on (spec.seed, i), so the
/// result is identical no matter how members are scheduled.
std::vector<LabeledPartition> generate_ensemble(const Dataset& data, const EnsembleSpec& spec);

}  // namespace meanpart
