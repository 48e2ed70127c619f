// Copyright 2026 The sppr Authors.
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

#include "sppr/types.h"

#include <algorithm>

namespace sppr {

SparseVector SparseVector::FromPairs(
    Index dim, std::vector<std::pair<Index, double>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out(dim);
  for (const auto& [i, v] : pairs) {
    if (i < 0 || i >= dim) {
      throw std::invalid_argument("sparse index " + std::to_string(i) +
                                  " out of range");
    }
    if (!out.indices_.empty() && out.indices_.back() == i) {
      throw std::invalid_argument("duplicate sparse index " +
                                  std::to_string(i));
    }
    out.indices_.push_back(i);
    out.values_.push_back(v);
  }
  return out;
}

SparseVector SparseVector::FromDense(std::span<const double> dense) {
  SparseVector out(static_cast<Index>(dense.size()));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.PushBack(static_cast<Index>(i), dense[i]);
  }
  return out;
}

void SparseVector::PushBack(Index i, double v) {
  if (i < 0 || i >= dim_ || (!indices_.empty() && indices_.back() >= i)) {
    throw std::invalid_argument("SparseVector::PushBack: index " +
                                std::to_string(i) + " out of order");
  }
  indices_.push_back(i);
  values_.push_back(v);
}

double SparseVector::at(Index i) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it == indices_.end() || *it != i) return 0.0;
  return values_[it - indices_.begin()];
}

std::vector<double> SparseVector::ToDense() const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    out[indices_[k]] = values_[k];
  }
  return out;
}

std::vector<Index> SparseVector::Support() const {
  std::vector<Index> out;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (values_[k] > 0.0) out.push_back(indices_[k]);
  }
  return out;
}

}  // namespace sppr
