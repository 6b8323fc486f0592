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

#include "meanpart/profile.hpp"

#include <algorithm>
#include <map>

#include "meanpart/errors.hpp"

namespace meanpart {

Profile profile_of(const MultipleAlignment& a, std::string alignment_ref) {
  return Profile{alignment_mean(a), a.size(), std::move(alignment_ref)};
}

BinaryMatrix truncate(const Profile& p, double tau) {
  if (!(tau > 0.5 && tau < 1.0)) {
    throw ValidationError("consensus threshold must lie strictly in (0.5, 1)");
  }
  const Matrix& values = p.values.values();
  BinaryMatrix cut = BinaryMatrix::Zero(values.rows(), values.cols());
  for (Eigen::Index k = 0; k < values.rows(); ++k) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      if (tau <= values(k, j)) cut(k, j) = 1;
    }
  }
  return cut;
}

MotifSet motifs_of(const Profile& p, double tau) {
  const BinaryMatrix cut = truncate(p, tau);
  MotifSet out;
  out.tau = tau;
  out.motifs.assign(cut.rows(), {});
  for (Eigen::Index k = 0; k < cut.rows(); ++k) {
    for (Eigen::Index j = 0; j < cut.cols(); ++j) {
      if (cut(k, j) == 1) {
        out.motifs[k].push_back(static_cast<int>(j));
        out.covered.push_back(static_cast<int>(j));
      }
    }
  }
  std::sort(out.covered.begin(), out.covered.end());
  return out;
}

std::vector<int> uncovered_points(const MotifSet& motifs, int m) {
  std::vector<int> out;
  auto it = motifs.covered.begin();
  for (int j = 0; j < m; ++j) {
    if (it != motifs.covered.end() && *it == j) {
      ++it;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<std::optional<double>> motif_purity(const MotifSet& motifs,
                                                const std::vector<int>& ground_truth) {
  std::vector<std::optional<double>> purity;
  purity.reserve(motifs.motifs.size());
  for (const std::vector<int>& motif : motifs.motifs) {
    if (motif.empty()) {
      purity.push_back(std::nullopt);
      continue;
    }
    std::map<int, int> counts;
    for (int j : motif) {
      if (j < 0 || j >= static_cast<int>(ground_truth.size())) {
        throw ValidationError("motif point index outside ground truth range");
      }
      ++counts[ground_truth[j]];
    }
    int majority = 0;
    for (const auto& [label, count] : counts) majority = std::max(majority, count);
    purity.push_back(static_cast<double>(majority) / motif.size());
  }
  return purity;
}

}  // namespace meanpart
