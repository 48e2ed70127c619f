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

#ifndef SPPR_IO_H_
#define SPPR_IO_H_

#include <istream>
#include <stdexcept>
#include <string>

#include "sppr/graph.h"
#include "sppr/types.h"

namespace sppr {

// Bad user input: unreadable file, malformed line, invalid graph.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kEdgeList, kMatrixMarket };

// "edgelist" or "matrixmarket".
GraphFormat ParseGraphFormat(const std::string& name);

// Edge list: one "i j" pair of 0-based ids per line; lines starting with '#'
// or '%' are comments, except "# nodes: N" which fixes the node count
// (otherwise max id + 1).
// Matrix Market: "%%MatrixMarket matrix coordinate pattern symmetric",
// 1-based ids.
// Errors name the line, e.g. "self-loop at line 1".
Graph ParseGraph(std::istream& in, GraphFormat format);
Graph LoadGraph(const std::string& path, GraphFormat format);

// "node weight" per line ('#' comments). Weights must be nonnegative and sum
// to one within 1e-6; they are rescaled to sum to one exactly.
SparseVector ParseDistribution(std::istream& in, Index num_nodes);
SparseVector LoadDistribution(const std::string& path, Index num_nodes);

}  // namespace sppr

#endif  // SPPR_IO_H_
