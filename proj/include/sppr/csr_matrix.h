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

#ifndef SPPR_CSR_MATRIX_H_
#define SPPR_CSR_MATRIX_H_

#include <span>
#include <vector>

#include "sppr/types.h"

namespace sppr {

struct Triplet {
  Index row;
  Index col;
  double value;
};

// Square symmetric sparse matrix. Each off-diagonal value is supplied once and
// mirrored into both rows, so Q(i, j) and Q(j, i) are the same double. Rows
// are sorted by column; since the matrix is symmetric, row i doubles as
// column i.
class SymmetricCsr {
 public:
  SymmetricCsr() = default;

  // `entries` holds the diagonal and one triangle, in any order and either
  // orientation (i <= j or i >= j per entry). Repeated positions are rejected.
  // Explicit zeros are dropped.
  static SymmetricCsr FromTriangle(Index n, std::span<const Triplet> entries);

  Index size() const { return static_cast<Index>(row_ptr_.size()) - 1; }
  Index nnz() const { return static_cast<Index>(cols_.size()); }
  Index row_nnz(Index i) const { return row_ptr_[i + 1] - row_ptr_[i]; }

  std::span<const Index> row_cols(Index i) const {
    return {cols_.data() + row_ptr_[i], static_cast<std::size_t>(row_nnz(i))};
  }
  std::span<const double> row_values(Index i) const {
    return {values_.data() + row_ptr_[i], static_cast<std::size_t>(row_nnz(i))};
  }

  double diagonal(Index i) const { return diagonal_[i]; }

  // Entry lookup by binary search in row i.
  double at(Index i, Index j) const;

  std::vector<double> ToDense() const;  // row-major n*n

 private:
  std::vector<Index> row_ptr_{0};
  std::vector<Index> cols_;
  std::vector<double> values_;
  std::vector<double> diagonal_;
};

}  // namespace sppr

#endif  // SPPR_CSR_MATRIX_H_
