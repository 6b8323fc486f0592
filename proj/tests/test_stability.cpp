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

#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "meanpart/alignment.hpp"
#include "meanpart/errors.hpp"
#include "meanpart/rng.hpp"
#include "meanpart/sampling.hpp"
#include "meanpart/stability.hpp"
#include "test_support.hpp"

using namespace meanpart;

namespace {

std::vector<LabeledPartition> running_pair() {
  return {test::running_x(), test::running_y()};
}

}  // namespace

TEST_CASE("pairwise instability") {
  Rng rng(3);
  const LabeledPartition x = random_hard_partition(rng, 3, 6);
  std::vector<LabeledPartition> relabelled;
  for (int i = 0; i < 4; ++i) relabelled.push_back(random_permutation(rng, 3).apply(x));
  CHECK(pairwise_instability(relabelled) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(pairwise_instability(running_pair()) == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(pairwise_instability(std::vector<LabeledPartition>{}), ValidationError);
}

TEST_CASE("pairwise instability averages per-member Frechet values") {
  Rng rng(7);
  for (int c = 0; c < 20; ++c) {
    const int n = 2 + static_cast<int>(rng.next_below(5));
    std::vector<LabeledPartition> sample;
    for (int i = 0; i < n; ++i) sample.push_back(random_soft_partition(rng, 3, 5));

    double averaged = 0.0;
    for (const LabeledPartition& member : sample) averaged += frechet_value(sample, member);
    averaged /= n;

    CHECK(std::abs(pairwise_instability(sample) - averaged) < 1e-9);
  }
}

TEST_CASE("alignment instability upper-bounds and reaches the exhaustive value") {
  const auto [g, alignment] = multiple_alignment_instability(running_pair(), {.restarts = 2});
  CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(alignment.size() == 2);

  Rng rng(11);
  for (int c = 0; c < 10; ++c) {
    std::vector<LabeledPartition> sample;
    for (int i = 0; i < 3; ++i) sample.push_back(random_soft_partition(rng, 2, 5));
    const double reported =
        multiple_alignment_instability(sample, {.restarts = 6, .seed = static_cast<std::uint64_t>(c)}).first;
    const double exact = g_value(exhaustive_mean(sample).alignment);
    CHECK(reported >= exact - 1e-9);
  }

  const LabeledPartition x = test::running_x();
  const std::vector<LabeledPartition> same{x, x, x};
  CHECK(multiple_alignment_instability(same, {}).first == doctest::Approx(0.0));
}

TEST_CASE("frechet variation sits below pairwise instability at the exact mean") {
  const double f = frechet_variation(running_pair(), {.restarts = 2});
  CHECK(f == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(f <= pairwise_instability(running_pair()) + 1e-9);

  const LabeledPartition x = test::running_x();
  const std::vector<LabeledPartition> same{x, x};
  CHECK(frechet_variation(same, {}) == doctest::Approx(0.0));
}

TEST_CASE("variation equals half the alignment instability at stationary points") {
  Rng rng(13);
  for (int c = 0; c < 10; ++c) {
    std::vector<LabeledPartition> sample;
    for (int i = 0; i < 4; ++i) sample.push_back(random_soft_partition(rng, 3, 6));
    const SolverConfig cfg{.restarts = 3, .seed = static_cast<std::uint64_t>(c)};
    const MeanResult result = mean_partition(sample, cfg);
    REQUIRE(result.converged);
    CHECK(result.frechet_value ==
          doctest::Approx(g_value(result.alignment) / 2.0).epsilon(1e-9));
  }
}

TEST_CASE("select_k takes the argmin with ties to the smaller k") {
  const std::vector<std::pair<int, double>> table{{2, 0.9}, {3, 0.2}, {4, 0.5}};
  CHECK(select_k(table) == 3);
  const std::vector<std::pair<int, double>> tie{{2, 0.5}, {3, 0.5}, {4, 0.7}};
  CHECK(select_k(tie) == 2);
  CHECK_THROWS_AS(select_k(std::vector<std::pair<int, double>>{}), ValidationError);
}

TEST_CASE("stability sweep on a small dataset") {
  const Dataset data = gen_gaussian_grid(1, 2, 0.05, 10, 5);
  const StabilityReport report =
      stability_sweep(data, 1, 3, 6, {.seed = 17}, {.restarts = 2, .seed = 23});
  REQUIRE(report.rows.size() == 3);

  // k = 1: single-cluster partitions are all identical.
  CHECK(report.rows[0].pairwise == doctest::Approx(0.0));
  CHECK(report.rows[0].alignment == doctest::Approx(0.0));
  CHECK(report.rows[0].variation == doctest::Approx(0.0));

  for (const StabilityRow& row : report.rows) {
    CHECK(row.pairwise <= row.alignment + 1e-9);
    CHECK(row.chain_gap >= -1e-9);
    if (row.exact_alignment.has_value()) {
      CHECK(row.pairwise <= *row.exact_alignment + 1e-9);
      CHECK(*row.exact_alignment <= row.alignment + 1e-9);
    }
  }

  CHECK(report.selected_k_pairwise >= 1);
  CHECK(report.selected_k_pairwise <= 3);
}

TEST_CASE("stability sweep validates its range") {
  const Dataset data = gen_uniform(10, 2, 3);
  CHECK_THROWS_AS(stability_sweep(data, 3, 2, 4, {}, {}), ValidationError);
  CHECK_THROWS_AS(stability_sweep(data, 0, 2, 4, {}, {}), ValidationError);
  CHECK_THROWS_AS(stability_sweep(data, 2, 11, 4, {}, {}), ValidationError);
  CHECK_THROWS_AS(stability_sweep(data, 2, 3, 1, {}, {}), ValidationError);
}

TEST_CASE("stability sweep is reproducible") {
  const Dataset data = gen_uniform(30, 2, 5);
  const StabilityReport a = stability_sweep(data, 2, 4, 5, {.seed = 9}, {.restarts = 2, .seed = 1});
  const StabilityReport b = stability_sweep(data, 2, 4, 5, {.seed = 9}, {.restarts = 2, .seed = 1});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].pairwise == b.rows[i].pairwise);
    CHECK(a.rows[i].alignment == b.rows[i].alignment);
    CHECK(a.rows[i].variation == b.rows[i].variation);
  }
  CHECK(a.selected_k_pairwise == b.selected_k_pairwise);
}
