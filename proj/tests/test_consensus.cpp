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
#include <vector>

#include "doctest.h"
#include "meanpart/alignment.hpp"
#include "meanpart/consensus.hpp"
#include "meanpart/errors.hpp"
#include "meanpart/rng.hpp"
#include "meanpart/sampling.hpp"
#include "test_support.hpp"

using namespace meanpart;
using test::matrix_of;

namespace {

MultipleAlignment random_alignment(Rng& rng, int n, int ell, int m, bool hard = false) {
  std::vector<LabeledPartition> members;
  members.reserve(n);
  for (int i = 0; i < n; ++i) {
    members.push_back(hard ? random_hard_partition(rng, ell, m)
                           : random_soft_partition(rng, ell, m));
  }
  return MultipleAlignment(std::move(members));
}

std::vector<LabeledPartition> random_sample(Rng& rng, int n, int ell, int m) {
  std::vector<LabeledPartition> sample;
  sample.reserve(n);
  for (int i = 0; i < n; ++i) sample.push_back(random_soft_partition(rng, ell, m));
  return sample;
}

}  // namespace

TEST_CASE("frechet value basics") {
  const LabeledPartition x = test::running_x();
  const std::vector<LabeledPartition> triple{x, x, x};
  CHECK(frechet_value(triple, x) == doctest::Approx(0.0).epsilon(1e-12));

  const std::vector<LabeledPartition> pair{test::running_x(), test::running_y()};
  const LabeledPartition z = matrix_of({{1, 0.5, 0}, {0, 0.5, 1}});
  CHECK(frechet_value(pair, z) == doctest::Approx(0.5).epsilon(1e-9));

  Rng rng(7);
  for (int c = 0; c < 10; ++c) {
    const auto sample = random_sample(rng, 3, 3, 4);
    const LabeledPartition probe = random_soft_partition(rng, 3, 4);
    const Permutation p = random_permutation(rng, 3);
    CHECK(frechet_value(sample, probe) ==
          doctest::Approx(frechet_value(sample, p.apply(probe))).epsilon(1e-9));
  }

  CHECK_THROWS_AS(frechet_value(std::vector<LabeledPartition>{}, x), ValidationError);
}

TEST_CASE("alignment mean") {
  const LabeledPartition x = test::running_x();
  const MultipleAlignment same(std::vector<LabeledPartition>{x, x, x});
  CHECK(max_abs_diff(alignment_mean(same), x) == 0.0);

  const MultipleAlignment pair(std::vector<LabeledPartition>{test::running_x(), test::running_y()});
  CHECK(max_abs_diff(alignment_mean(pair), matrix_of({{1, 0.5, 0}, {0, 0.5, 1}})) == 0.0);

  // Crisp members average onto the grid {0, 1/n, ..., 1}.
  Rng rng(9);
  const MultipleAlignment crisp = random_alignment(rng, 4, 3, 5, /*hard=*/true);
  const LabeledPartition mean = alignment_mean(crisp);
  for (Eigen::Index k = 0; k < mean.ell(); ++k) {
    for (Eigen::Index j = 0; j < mean.m(); ++j) {
      const double scaled = mean(k, j) * 4;
      CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-12));
    }
  }
}

TEST_CASE("alignment objective values on the worked pair") {
  const MultipleAlignment pair(std::vector<LabeledPartition>{test::running_x(), test::running_y()});
  CHECK(g_value(pair) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f_value(pair) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(h_value(pair) == doctest::Approx(5.0).epsilon(1e-12));

  const LabeledPartition x = test::running_x();
  const MultipleAlignment same(std::vector<LabeledPartition>{x, x, x});
  CHECK(g_value(same) == doctest::Approx(0.0));
  CHECK(f_value(same) == doctest::Approx(0.0));
  CHECK(h_value(same) == doctest::Approx(3.0 * 3.0));  // n members, m points
}

TEST_CASE("alignment objective identities") {
  Rng rng(41);
  for (int c = 0; c < 200; ++c) {
    const int n = 2 + static_cast<int>(rng.next_below(5));
    const int ell = 2 + static_cast<int>(rng.next_below(3));
    const int m = 2 + static_cast<int>(rng.next_below(6));
    const MultipleAlignment a = random_alignment(rng, n, ell, m, c % 2 == 0);

    const double f = f_value(a);
    const double g = g_value(a);
    const double h = h_value(a);
    CHECK(std::abs(g - 2.0 * f) < 1e-9);

    double norms = 0.0;
    for (int i = 0; i < n; ++i) {
      norms += frobenius_norm(a.member(i)) * frobenius_norm(a.member(i));
    }
    CHECK(std::abs(f - (norms / n - h / n)) < 1e-9);

    const double mean_norm2 = std::pow(frobenius_norm(alignment_mean(a)), 2);
    CHECK(h == doctest::Approx(n * mean_norm2).epsilon(1e-9));
  }
}

TEST_CASE("mean of relabelled copies recovers the partition") {
  Rng rng(53);
  const LabeledPartition x = random_hard_partition(rng, 3, 8);
  const std::vector<LabeledPartition> sample{
      x, random_permutation(rng, 3).apply(x), random_permutation(rng, 3).apply(x)};
  const MeanResult result = mean_partition(sample, {.restarts = 2, .seed = 1});
  CHECK(result.frechet_value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(delta(result.mean, x).distance <= 1e-9);
  CHECK(result.converged);
}

TEST_CASE("identical members converge after one averaging cycle") {
  const LabeledPartition x = test::running_x();
  const std::vector<LabeledPartition> same{x, x, x};
  const MeanResult result = mean_partition(same, {});
  CHECK(result.frechet_value == 0.0);
  CHECK(result.converged);
  CHECK(result.iterations == 1);
}

TEST_CASE("mean of the worked pair") {
  const std::vector<LabeledPartition> pair{test::running_x(), test::running_y()};
  const MeanResult result = mean_partition(pair, {.restarts = 2, .seed = 3});
  CHECK(result.frechet_value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(delta(result.mean, matrix_of({{1, 0.5, 0}, {0, 0.5, 1}})).distance <= 1e-9);
  CHECK(result.converged);
  CHECK(check_stationarity(result));
}

TEST_CASE("solver trace is non-increasing") {
  Rng rng(67);
  for (int c = 0; c < 100; ++c) {
    const int n = 2 + static_cast<int>(rng.next_below(5));
    const auto sample = random_sample(rng, n, 3, 5);
    const MeanResult result = mean_partition(sample, {.restarts = 3, .seed = static_cast<std::uint64_t>(c)});
    for (std::size_t t = 1; t < result.trace.size(); ++t) {
      CHECK(result.trace[t] <= result.trace[t - 1] + 1e-12);
    }
  }
}

TEST_CASE("solver configuration is validated") {
  const std::vector<LabeledPartition> pair{test::running_x(), test::running_y()};
  CHECK_THROWS_AS(mean_partition(pair, {.restarts = 0}), ValidationError);
  CHECK_THROWS_AS(mean_partition(pair, {.max_iters = 0}), ValidationError);
  CHECK_THROWS_AS(mean_partition(pair, {.tol = 0.0}), ValidationError);
  CHECK_THROWS_AS(mean_partition(std::vector<LabeledPartition>{}, {}), ValidationError);
}

TEST_CASE("restarts beyond the sample size run from blended starts") {
  Rng rng(83);
  const auto sample = random_sample(rng, 3, 3, 5);
  const MeanResult result = mean_partition(sample, {.restarts = 8, .seed = 17});
  CHECK(result.restarts_used >= 0);
  CHECK(result.restarts_used < 8);
  CHECK(check_stationarity(result));
}

TEST_CASE("exhaustive mean on the worked pair matches the solver") {
  const std::vector<LabeledPartition> pair{test::running_x(), test::running_y()};
  const MeanResult exact = exhaustive_mean(pair);
  const MeanResult approx = mean_partition(pair, {.restarts = 2, .seed = 5});
  CHECK(exact.frechet_value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(approx.frechet_value == doctest::Approx(exact.frechet_value).epsilon(1e-9));
  CHECK(delta(exact.mean, approx.mean).distance <= 1e-9);
}

TEST_CASE("single-member sample short-circuits") {
  const std::vector<LabeledPartition> one{test::running_x()};
  const MeanResult exact = exhaustive_mean(one);
  CHECK(exact.frechet_value == 0.0);
  CHECK(max_abs_diff(exact.mean, test::running_x()) == 0.0);
  const MeanResult solved = mean_partition(one, {});
  CHECK(solved.frechet_value == 0.0);
  CHECK(check_stationarity(solved));
}

TEST_CASE("exhaustive mean certifies the global optimum") {
  Rng rng(97);
  int attained = 0;
  for (int c = 0; c < 20; ++c) {
    const int n = 2 + static_cast<int>(rng.next_below(3));
    const int ell = 2 + static_cast<int>(rng.next_below(2));
    const int m = 3 + static_cast<int>(rng.next_below(4));
    const auto sample = random_sample(rng, n, ell, m);
    const MeanResult exact = exhaustive_mean(sample);
    const MeanResult approx = mean_partition(sample, {.restarts = 6, .seed = static_cast<std::uint64_t>(c)});
    CHECK(approx.frechet_value >= exact.frechet_value - 1e-9);
    if (approx.frechet_value <= exact.frechet_value + 1e-9) ++attained;

    // The optimal alignment satisfies F = f = g/2.
    CHECK(exact.frechet_value ==
          doctest::Approx(f_value(exact.alignment)).epsilon(1e-9));
    CHECK(exact.frechet_value ==
          doctest::Approx(g_value(exact.alignment) / 2.0).epsilon(1e-9));
  }
  CHECK(attained > 0);
}

TEST_CASE("every alignment's f upper-bounds the Frechet value of its mean") {
  Rng rng(103);
  const auto sample = random_sample(rng, 3, 2, 4);
  const auto perms = all_permutations(2);
  for (const Permutation& p1 : perms) {
    for (const Permutation& p2 : perms) {
      const MultipleAlignment a(std::vector<LabeledPartition>{
          sample[0], p1.apply(sample[1]), p2.apply(sample[2])});
      CHECK(frechet_value(sample, alignment_mean(a)) <= f_value(a) + 1e-9);
    }
  }
}

TEST_CASE("exhaustive minimum of g equals exhaustive minimum of 2f") {
  Rng rng(107);
  const auto sample = random_sample(rng, 3, 2, 4);
  const auto perms = all_permutations(2);
  double min_g = std::numeric_limits<double>::infinity();
  double min_f = std::numeric_limits<double>::infinity();
  for (const Permutation& p1 : perms) {
    for (const Permutation& p2 : perms) {
      const MultipleAlignment a(std::vector<LabeledPartition>{
          sample[0], p1.apply(sample[1]), p2.apply(sample[2])});
      min_g = std::min(min_g, g_value(a));
      min_f = std::min(min_f, f_value(a));
    }
  }
  CHECK(min_g == doctest::Approx(2.0 * min_f).epsilon(1e-9));
  CHECK(g_value(exhaustive_mean(sample).alignment) == doctest::Approx(min_g).epsilon(1e-9));
}

TEST_CASE("exhaustive mean capacity limit") {
  Rng rng(109);
  const auto sample = random_sample(rng, 7, 5, 5);  // 120^6 alignments
  CHECK_THROWS_AS(exhaustive_mean(sample), CapacityError);
}

TEST_CASE("label invariance of the mean objective") {
  Rng rng(113);
  const auto sample = random_sample(rng, 3, 2, 5);
  std::vector<LabeledPartition> relabelled;
  for (const LabeledPartition& x : sample) {
    relabelled.push_back(random_permutation(rng, 2).apply(x));
  }
  const MeanResult a = exhaustive_mean(sample);
  const MeanResult b = exhaustive_mean(relabelled);
  CHECK(a.frechet_value == doctest::Approx(b.frechet_value).epsilon(1e-9));
  CHECK(delta(a.mean, b.mean).distance <= 1e-9);

  // The iterative solver reaches the same objective from either labelling
  // when the restarts cover the tiny instance (ell! * n = 6 starts).
  const MeanResult sa = mean_partition(sample, {.restarts = 8, .seed = 5});
  const MeanResult sb = mean_partition(relabelled, {.restarts = 8, .seed = 5});
  CHECK(sa.frechet_value == doctest::Approx(sb.frechet_value).epsilon(1e-9));
}

TEST_CASE("stationarity check rejects de-aligned results") {
  Rng rng(127);
  const auto sample = random_sample(rng, 4, 3, 6);
  const MeanResult result = mean_partition(sample, {.restarts = 2, .seed = 2});
  REQUIRE(result.converged);
  CHECK(check_stationarity(result));

  // Knock one member out of optimal position with a non-stabilizing
  // permutation; both stationarity conditions must now fail together or
  // alone, so the check returns false.
  std::vector<LabeledPartition> members = result.alignment.members();
  Permutation p = random_permutation(rng, 3);
  while (p.is_identity()) p = random_permutation(rng, 3);
  members[0] = p.apply(members[0]);
  const MeanResult tampered{result.mean, MultipleAlignment(std::move(members)),
                            result.frechet_value, result.iterations, result.converged,
                            result.restarts_used, result.trace};
  CHECK_FALSE(check_stationarity(tampered));
}
