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
#include <random>
#include <string_view>

namespace meanpart {

/// Deterministic random source with a fully specified algorithm.
///
/// Core generator is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard, so streams are reproducible across platforms and compilers.
/// The standard *distributions* are not pinned, so uniform and Gaussian
/// variates are produced here by explicit transforms instead:
///   unit   = (next_u64() >> 11) * 2^-53                      in [0, 1)
///   gauss  = Box-Muller on two unit draws (no cached spare)
///   below  = unbiased rejection sampling on next_u64()
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal variate; consumes exactly two uniforms.
  double next_gaussian();

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

/// Stable sub-seed derivation: mixes a master seed with a component label and
/// an index (FNV-1a over the label, then splitmix64 finalizers). Used so that
/// parallel work items depend only on (seed, label, index), never on
/// scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

}  // namespace meanpart
