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

#include "meanpart/consensus.hpp"

#include <cmath>
#include <limits>
#include <numeric>
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

}  // namespace

void MultipleAlignment::validate() const {
  if (members_.empty()) throw ValidationError("alignment must not be empty");
  if (source_ids_.size() != members_.size()) {
    throw ValidationError("alignment needs one source id per member");
  }
  for (const LabeledPartition& x : members_) {
    if (x.ell() != members_.front().ell() || x.m() != members_.front().m()) {
      throw ValidationError("alignment members must share dimensions");
    }
  }
}

MultipleAlignment::MultipleAlignment(std::vector<LabeledPartition> members,
                                     std::vector<int> source_ids)
    : members_(std::move(members)), source_ids_(std::move(source_ids)) {
  validate();
}

MultipleAlignment::MultipleAlignment(std::vector<LabeledPartition> members)
    : members_(std::move(members)), source_ids_(members_.size()) {
  std::iota(source_ids_.begin(), source_ids_.end(), 0);
  validate();
}

double frechet_value(std::span<const LabeledPartition> sample, const LabeledPartition& z) {
  check_sample(sample);
  const int n = static_cast<int>(sample.size());
  std::vector<double> squared(n);
  parallel_for(n, [&](int i) {
    const double d = delta(sample[i], z).distance;
    squared[i] = d * d;
  });
  double total = 0.0;
  for (double s : squared) total += s;
  return total / n;
}

LabeledPartition alignment_mean(const MultipleAlignment& a) {
  Matrix sum = Matrix::Zero(a.ell(), a.m());
  for (int i = 0; i < a.size(); ++i) sum += a.member(i).values();
  return LabeledPartition(sum / a.size());
}

double g_value(const MultipleAlignment& a) {
  const int n = a.size();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      total += (a.member(i).values() - a.member(j).values()).squaredNorm();
    }
  }
  return total / (static_cast<double>(n) * n);
}

double f_value(const MultipleAlignment& a) {
  const Matrix mean = alignment_mean(a).values();
  double total = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    total += (a.member(i).values() - mean).squaredNorm();
  }
  return total / a.size();
}

double h_value(const MultipleAlignment& a) {
  const LabeledPartition mean = alignment_mean(a);
  double total = 0.0;
  for (int i = 0; i < a.size(); ++i) total += inner_product(a.member(i), mean);
  return total;
}

namespace {

struct RestartOutcome {
  Matrix mean;
  std::vector<std::vector<int>> tuple;  // permutation mapping per member
  double frechet = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

RestartOutcome run_restart(std::span<const LabeledPartition> sample, Matrix init,
                           int max_iters, double tol) {
  const int n = static_cast<int>(sample.size());

  RestartOutcome out;
  out.mean = std::move(init);

  std::vector<std::vector<int>> prev_maps;
  std::vector<Matrix> aligned(n);
  double prev_f = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= max_iters; ++it) {
    const LabeledPartition current(out.mean);
    std::vector<std::vector<int>> maps(n);
    parallel_for(n, [&](int i) {
      maps[i] = delta(sample[i], current).permutation.mapping();
    });

    if (maps == prev_maps) {
      // Same permutations reproduce the same average: fixed point.
      out.converged = true;
      break;
    }

    parallel_for(n, [&](int i) {
      aligned[i] = Permutation(maps[i]).apply(sample[i].values());
    });
    Matrix sum = Matrix::Zero(sample.front().ell(), sample.front().m());
    for (int i = 0; i < n; ++i) sum += aligned[i];
    out.mean = sum / n;

    double f = 0.0;
    for (int i = 0; i < n; ++i) f += (aligned[i] - out.mean).squaredNorm();
    f /= n;
    out.trace.push_back(f);
    prev_maps = std::move(maps);

    if (prev_f - f < tol) break;
    prev_f = f;
  }

  out.tuple = std::move(prev_maps);
  out.iterations = static_cast<int>(out.trace.size());
  const LabeledPartition mean_partition_rep(out.mean);
  out.frechet = frechet_value(sample, mean_partition_rep);
  return out;
}

MeanResult to_result(std::span<const LabeledPartition> sample, RestartOutcome&& best,
                     int restart_index) {
  const int n = static_cast<int>(sample.size());
  std::vector<LabeledPartition> members;
  members.reserve(n);
  for (int i = 0; i < n; ++i) {
    members.push_back(Permutation(best.tuple[i]).apply(sample[i]));
  }
  return MeanResult{LabeledPartition(std::move(best.mean)),
                    MultipleAlignment(std::move(members)),
                    best.frechet,
                    best.iterations,
                    best.converged,
                    restart_index,
                    std::move(best.trace)};
}

}  // namespace

MeanResult mean_partition(std::span<const LabeledPartition> sample,
                          const SolverConfig& config) {
  check_sample(sample);
  if (config.restarts < 1) throw ValidationError("restarts must be >= 1");
  if (config.max_iters < 1) throw ValidationError("max_iters must be >= 1");
  if (!(config.tol > 0.0)) throw ValidationError("tol must be positive");

  const int n = static_cast<int>(sample.size());
  if (n == 1) {
    std::vector<LabeledPartition> members{sample[0]};
    return MeanResult{sample[0], MultipleAlignment(std::move(members)),
                      0.0,  1, true, 0, {0.0}};
  }

  RestartOutcome best;
  int best_index = -1;
  for (int r = 0; r < config.restarts; ++r) {
    Matrix init;
    if (r < n) {
      init = sample[r].values();
    } else {
      Rng rng(derive_seed(config.seed, "restart", static_cast<std::uint64_t>(r)));
      const auto a = static_cast<int>(rng.next_below(n));
      const auto b = static_cast<int>(rng.next_below(n));
      const double lambda = rng.next_unit();
      init = lambda * sample[a].values() + (1.0 - lambda) * sample[b].values();
    }
    RestartOutcome outcome = run_restart(sample, std::move(init), config.max_iters, config.tol);
    if (best_index < 0 || outcome.frechet < best.frechet) {
      best = std::move(outcome);
      best_index = r;
    }
  }
  return to_result(sample, std::move(best), best_index);
}

MeanResult exhaustive_mean(std::span<const LabeledPartition> sample) {
  check_sample(sample);
  const int n = static_cast<int>(sample.size());
  if (n == 1) {
    std::vector<LabeledPartition> members{sample[0]};
    return MeanResult{sample[0], MultipleAlignment(std::move(members)),
                      0.0, 0, true, 0, {0.0}};
  }

  const int ell = static_cast<int>(sample.front().ell());
  const std::vector<Permutation> perms = all_permutations(ell);
  const double per_member = static_cast<double>(perms.size());
  if ((n - 1) * std::log(per_member) > std::log(1e6) + 1e-12) {
    throw CapacityError("alignment enumeration needs (ell!)^(n-1) <= 1e6");
  }

  // The first member's representation is fixed: g is invariant under
  // relabelling all members simultaneously, so one representative per
  // simultaneous-relabelling class suffices.
  std::vector<Matrix> members(n);
  members[0] = sample[0].values();

  std::vector<int> odometer(n - 1, 0);
  std::vector<int> best_odometer;
  double best_g = std::numeric_limits<double>::infinity();
  for (;;) {
    for (int i = 1; i < n; ++i) {
      members[i] = perms[odometer[i - 1]].apply(sample[i].values());
    }
    double g = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        g += 2.0 * (members[i] - members[j]).squaredNorm();
      }
    }
    g /= static_cast<double>(n) * n;
    if (g < best_g) {
      best_g = g;
      best_odometer = odometer;
    }
    int pos = 0;
    while (pos < n - 1 && ++odometer[pos] == static_cast<int>(perms.size())) {
      odometer[pos++] = 0;
    }
    if (pos == n - 1) break;
  }

  std::vector<LabeledPartition> best_members;
  best_members.reserve(n);
  best_members.push_back(sample[0]);
  for (int i = 1; i < n; ++i) {
    best_members.push_back(perms[best_odometer[i - 1]].apply(sample[i]));
  }
  MultipleAlignment alignment(std::move(best_members));
  LabeledPartition mean = alignment_mean(alignment);
  const double f_opt = f_value(alignment);
  const double frechet = frechet_value(sample, mean);
  if (std::abs(frechet - f_opt) > 1e-9) {
    throw std::logic_error("optimal alignment violates F(mean) == f(alignment): F=" +
                           std::to_string(frechet) + " f=" + std::to_string(f_opt));
  }
  return MeanResult{std::move(mean), std::move(alignment), frechet,
                    0, true, 0, {f_opt}};
}

bool check_stationarity(const MeanResult& result) {
  if (max_abs_diff(result.mean, alignment_mean(result.alignment)) > 1e-9) {
    return false;
  }
  for (int i = 0; i < result.alignment.size(); ++i) {
    const double current = inner_product(result.alignment.member(i), result.mean);
    const double optimal = delta(result.alignment.member(i), result.mean).inner_value;
    if (optimal - current > 1e-9) return false;
  }
  return true;
}

}  // namespace meanpart
