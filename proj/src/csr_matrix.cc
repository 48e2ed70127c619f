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

#include "sppr/csr_matrix.h"

#include <algorithm>
#include <string>

namespace sppr {

SymmetricCsr SymmetricCsr::FromTriangle(Index n,
                                        std::span<const Triplet> entries) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
  // Canonicalize to (min, max) and reject repeats.
  std::vector<Triplet> canon;
  canon.reserve(entries.size());
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.col < 0 || t.row >= n || t.col >= n) {
      throw std::invalid_argument("matrix entry (" + std::to_string(t.row) +
                                  "," + std::to_string(t.col) +
                                  ") out of range");
    }
    if (t.value == 0.0) continue;
    canon.push_back({std::min(t.row, t.col), std::max(t.row, t.col), t.value});
  }
  std::sort(canon.begin(), canon.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t k = 1; k < canon.size(); ++k) {
    if (canon[k].row == canon[k - 1].row && canon[k].col == canon[k - 1].col) {
      throw std::invalid_argument("repeated matrix entry (" +
                                  std::to_string(canon[k].row) + "," +
                                  std::to_string(canon[k].col) + ")");
    }
  }

  SymmetricCsr m;
  std::vector<Index> count(n, 0);
  for (const Triplet& t : canon) {
    ++count[t.row];
    if (t.row != t.col) ++count[t.col];
  }
  m.row_ptr_.assign(n + 1, 0);
  for (Index i = 0; i < n; ++i) m.row_ptr_[i + 1] = m.row_ptr_[i] + count[i];
  m.cols_.resize(m.row_ptr_.back());
  m.values_.resize(m.row_ptr_.back());
  m.diagonal_.assign(n, 0.0);
  std::vector<Index> fill(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
  auto put = [&](Index r, Index c, double v) {
    m.cols_[fill[r]] = c;
    m.values_[fill[r]] = v;
    ++fill[r];
  };
  for (const Triplet& t : canon) {
    put(t.row, t.col, t.value);
    if (t.row != t.col) {
      put(t.col, t.row, t.value);
    } else {
      m.diagonal_[t.row] = t.value;
    }
  }
  // Sort each row by column, carrying values along.
  std::vector<std::pair<Index, double>> buf;
  for (Index i = 0; i < n; ++i) {
    buf.clear();
    for (Index k = m.row_ptr_[i]; k < m.row_ptr_[i + 1]; ++k) {
      buf.emplace_back(m.cols_[k], m.values_[k]);
    }
    std::sort(buf.begin(), buf.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < buf.size(); ++k) {
      m.cols_[m.row_ptr_[i] + k] = buf[k].first;
      m.values_[m.row_ptr_[i] + k] = buf[k].second;
    }
  }
  return m;
}

double SymmetricCsr::at(Index i, Index j) const {
  auto cols = row_cols(i);
  auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0.0;
  return row_values(i)[it - cols.begin()];
}

std::vector<double> SymmetricCsr::ToDense() const {
  const Index n = size();
  std::vector<double> out(n * n, 0.0);
  for (Index i = 0; i < n; ++i) {
    auto cols = row_cols(i);
    auto vals = row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) out[i * n + cols[k]] = vals[k];
  }
  return out;
}

}  // namespace sppr
