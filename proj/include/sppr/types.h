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

#ifndef SPPR_TYPES_H_
#define SPPR_TYPES_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sppr {

using Index = std::int64_t;

// A vector of dimension `dim` stored as strictly increasing (index, value)
// pairs. Entries not listed are zero; listed entries may still be zero.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(Index dim) : dim_(dim) {}

  // Builds from unsorted pairs. Duplicate indices are rejected.
  static SparseVector FromPairs(Index dim,
                                std::vector<std::pair<Index, double>> pairs);
  // Keeps entries of `dense` whose value is nonzero.
  static SparseVector FromDense(std::span<const double> dense);

  Index dim() const { return dim_; }
  Index nnz() const { return static_cast<Index>(indices_.size()); }
  const std::vector<Index>& indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }

  // Appends an entry; `i` must exceed every stored index.
  void PushBack(Index i, double v);

  // Value at i (zero when absent). O(log nnz).
  double at(Index i) const;

  std::vector<double> ToDense() const;

  // Indices whose stored value is strictly positive.
  std::vector<Index> Support() const;

  bool operator==(const SparseVector&) const = default;

 private:
  Index dim_ = 0;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

// Thrown when a solver cannot produce a result (iteration caps, loss of
// positive curvature, runaway stage counts).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sppr

#endif  // SPPR_TYPES_H_
