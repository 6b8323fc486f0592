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

#include "meanpart/kmeans.hpp"

#include <limits>
#include <numeric>

#include "meanpart/errors.hpp"
#include "meanpart/parallel.hpp"
#include "meanpart/rng.hpp"

namespace meanpart {

namespace {

double squared_distance(const PointMatrix& pts, int j, const PointMatrix& centroids, int c) {
  return (pts.row(j) - centroids.row(c)).squaredNorm();
}

std::vector<int> nearest_centroids(const PointMatrix& pts, const PointMatrix& centroids) {
  std::vector<int> assign(pts.rows());
  for (int j = 0; j < pts.rows(); ++j) {
    int best = 0;
    double best_d = squared_distance(pts, j, centroids, 0);
    for (int c = 1; c < centroids.rows(); ++c) {
      const double d = squared_distance(pts, j, centroids, c);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    assign[j] = best;
  }
  return assign;
}

struct LloydOutcome {
  std::vector<int> assign;
  int iterations = 0;
  bool converged = false;
  std::vector<double> wcss_trace;
  double final_wcss = std::numeric_limits<double>::infinity();
};

LloydOutcome lloyd(const PointMatrix& pts, int k, Rng& rng, const KMeansOptions& opt) {
  const int m = static_cast<int>(pts.rows());

  // Start from k distinct data points (partial Fisher-Yates on indices).
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int t = 0; t < k; ++t) {
    const int swap_with = t + static_cast<int>(rng.next_below(m - t));
    std::swap(order[t], order[swap_with]);
  }
  PointMatrix centroids(k, pts.cols());
  for (int c = 0; c < k; ++c) centroids.row(c) = pts.row(order[c]);

  LloydOutcome out;
  std::vector<int> prev_assign;
  for (int it = 1; it <= opt.max_iters; ++it) {
    std::vector<int> assign = nearest_centroids(pts, centroids);

    bool reseeded = false;
    if (opt.empty_policy == EmptyClusterPolicy::kReseedFarthest) {
      std::vector<int> counts(k, 0);
      for (int a : assign) ++counts[a];
      for (int c = 0; c < k; ++c) {
        if (counts[c] > 0) continue;
        int farthest = -1;
        double farthest_d = -1.0;
        for (int j = 0; j < m; ++j) {
          const double d = squared_distance(pts, j, centroids, assign[j]);
          if (d > farthest_d) {
            farthest_d = d;
            farthest = j;
          }
        }
        centroids.row(c) = pts.row(farthest);
        // Move the point now so a later empty cluster picks a different one.
        --counts[assign[farthest]];
        assign[farthest] = c;
        ++counts[c];
        reseeded = true;
      }
      if (reseeded) assign = nearest_centroids(pts, centroids);  // one retry
    }

    if (!reseeded && assign == prev_assign) {
      out.converged = true;
      break;
    }

    // Update step; empty clusters keep their previous centroid.
    PointMatrix sums = PointMatrix::Zero(k, pts.cols());
    std::vector<int> counts(k, 0);
    for (int j = 0; j < m; ++j) {
      sums.row(assign[j]) += pts.row(j);
      ++counts[assign[j]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) centroids.row(c) = sums.row(c) / counts[c];
    }

    double wcss = 0.0;
    for (int j = 0; j < m; ++j) wcss += squared_distance(pts, j, centroids, assign[j]);
    out.wcss_trace.push_back(wcss);
    out.iterations = it;
    prev_assign = std::move(assign);
  }

  out.assign = std::move(prev_assign);
  out.final_wcss = out.wcss_trace.empty() ? 0.0 : out.wcss_trace.back();
  return out;
}

}  // namespace

KMeansResult kmeans_run(const Dataset& data, int k, std::uint64_t seed,
                        const KMeansOptions& options) {
  const int m = static_cast<int>(data.m());
  if (m < 1) throw ValidationError("dataset must contain points");
  if (k < 1) throw ValidationError("cluster count must be positive");
  if (k > m) {
    throw ValidationError("cluster count " + std::to_string(k) + " exceeds point count " +
                          std::to_string(m));
  }
  if (options.max_iters < 1) throw ValidationError("max_iters must be >= 1");
  if (options.n_init < 1) throw ValidationError("n_init must be >= 1");

  LloydOutcome best;
  for (int t = 0; t < options.n_init; ++t) {
    Rng rng(derive_seed(seed, "init", static_cast<std::uint64_t>(t)));
    LloydOutcome outcome = lloyd(data.points, k, rng, options);
    if (t == 0 || outcome.final_wcss < best.final_wcss) best = std::move(outcome);
  }

  KMeansResult result;
  result.labels.ell = k;
  result.labels.labels.resize(m);
  for (int j = 0; j < m; ++j) result.labels.labels[j] = best.assign[j] + 1;
  result.iterations = best.iterations;
  result.converged = best.converged;
  result.wcss_trace = std::move(best.wcss_trace);
  return result;
}

HardLabeling kmeans(const Dataset& data, int k, std::uint64_t seed) {
  return kmeans_run(data, k, seed).labels;
}

std::vector<LabeledPartition> generate_ensemble(const Dataset& data, const EnsembleSpec& spec) {
  if (spec.n < 1) throw ValidationError("ensemble size must be >= 1");

  std::vector<LabeledPartition> members;
  members.reserve(spec.n);
  std::vector<HardLabeling> labelings(spec.n);
  parallel_for(spec.n, [&](int i) {
    const std::uint64_t member_seed = derive_seed(spec.seed, "member", static_cast<std::uint64_t>(i));
    labelings[i] = kmeans_run(data, spec.k, member_seed, spec.kmeans).labels;
  });
  for (int i = 0; i < spec.n; ++i) members.push_back(make_hard(labelings[i]));
  return members;
}

}  // namespace meanpart
