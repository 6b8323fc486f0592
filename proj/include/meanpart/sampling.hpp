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

#include "meanpart/partition.hpp"
#include "meanpart/rng.hpp"

namespace meanpart {

/// Columns drawn uniformly from the probability simplex (normalized
/// exponentials), so the partition is continuous and almost surely
/// asymmetric.
LabeledPartition random_soft_partition(Rng& rng, int ell, int m);

/// Uniformly random crisp labelling; clusters may come out empty.
HardLabeling random_hard_labeling(Rng& rng, int ell, int m);

LabeledPartition random_hard_partition(Rng& rng, int ell, int m);

/// Fisher-Yates shuffle of the identity mapping.
Permutation random_permutation(Rng& rng, int ell);

}  // namespace meanpart
