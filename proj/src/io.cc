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

#include "sppr/io.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace sppr {
namespace {

std::string AtLine(const std::string& what, Index line) {
  return what + " at line " + std::to_string(line);
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool Blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Reads exactly `count` integers from the line; nothing may follow.
bool ReadInts(const std::string& line, int count, long long* out) {
  std::istringstream ss(line);
  for (int k = 0; k < count; ++k) {
    std::string tok;
    if (!(ss >> tok)) return false;
    std::size_t used = 0;
    try {
      out[k] = std::stoll(tok, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != tok.size()) return false;
  }
  std::string rest;
  return !(ss >> rest);
}

// "# nodes: N" (spacing is free).
bool NodesHeader(const std::string& line, Index* n) {
  std::string body = line.substr(1);
  const auto colon = body.find(':');
  if (colon == std::string::npos) return false;
  std::string key = body.substr(0, colon);
  key.erase(std::remove_if(key.begin(), key.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            key.end());
  if (Lower(key) != "nodes") return false;
  long long v;
  if (!ReadInts(body.substr(colon + 1), 1, &v) || v < 1) {
    throw InputError("bad '# nodes:' header");
  }
  *n = v;
  return true;
}

using EdgeList = std::vector<std::pair<Index, Index>>;

Graph Build(Index n, const EdgeList& edges) {
  try {
    return Graph::FromEdges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// Adds an edge, rejecting self-loops and repeats with the line number.
void AddEdge(Index i, Index j, Index line, EdgeList& edges,
             std::set<std::pair<Index, Index>>& seen) {
  if (i == j) throw InputError(AtLine("self-loop", line));
  if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
    throw InputError(AtLine("duplicate edge", line));
  }
  edges.emplace_back(i, j);
}

Graph ParseEdgeList(std::istream& in) {
  EdgeList edges;
  std::set<std::pair<Index, Index>> seen;
  Index declared = -1, max_id = -1, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') {
      Index n;
      if (line[first] == '#' && NodesHeader(line.substr(first), &n)) {
        declared = n;
      }
      continue;
    }
    long long ij[2];
    if (!ReadInts(line, 2, ij)) {
      throw InputError(AtLine("expected two node ids", line_no));
    }
    if (ij[0] < 0 || ij[1] < 0) {
      throw InputError(AtLine("negative node id", line_no));
    }
    AddEdge(ij[0], ij[1], line_no, edges, seen);
    max_id = std::max<Index>(max_id, std::max(ij[0], ij[1]));
  }
  if (declared >= 0 && max_id >= declared) {
    throw InputError("node id " + std::to_string(max_id) +
                     " exceeds the declared node count " +
                     std::to_string(declared));
  }
  const Index n = declared >= 0 ? declared : max_id + 1;
  if (n < 1) throw InputError("graph has no nodes");
  return Build(n, edges);
}

Graph ParseMatrixMarket(std::istream& in) {
  std::string line;
  Index line_no = 0;
  if (!std::getline(in, line)) throw InputError("empty Matrix Market file");
  ++line_no;
  {
    std::istringstream ss(Lower(line));
    std::string banner, object, layout, field, symmetry;
    ss >> banner >> object >> layout >> field >> symmetry;
    if (banner != "%%matrixmarket" || object != "matrix" ||
        layout != "coordinate" || field != "pattern" ||
        symmetry != "symmetric") {
      throw InputError(AtLine(
          "expected '%%MatrixMarket matrix coordinate pattern symmetric'", 1));
    }
  }
  long long size[3];
  bool have_size = false;
  EdgeList edges;
  std::set<std::pair<Index, Index>> seen;
  Index entries = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Blank(line) || line[line.find_first_not_of(" \t")] == '%') continue;
    if (!have_size) {
      if (!ReadInts(line, 3, size) || size[0] != size[1] || size[0] < 1 ||
          size[2] < 0) {
        throw InputError(AtLine("bad size line", line_no));
      }
      have_size = true;
      continue;
    }
    long long ij[2];
    if (!ReadInts(line, 2, ij)) {
      throw InputError(AtLine("expected two node ids", line_no));
    }
    if (ij[0] < 1 || ij[1] < 1 || ij[0] > size[0] || ij[1] > size[0]) {
      throw InputError(AtLine("node id out of range", line_no));
    }
    AddEdge(ij[0] - 1, ij[1] - 1, line_no, edges, seen);
    ++entries;
  }
  if (!have_size) throw InputError("missing size line");
  if (entries != size[2]) {
    throw InputError("size line announces " + std::to_string(size[2]) +
                     " entries, found " + std::to_string(entries));
  }
  return Build(size[0], edges);
}

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  return in;
}

}  // namespace

GraphFormat ParseGraphFormat(const std::string& name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "matrixmarket") return GraphFormat::kMatrixMarket;
  throw InputError("unknown graph format '" + name + "'");
}

Graph ParseGraph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? ParseEdgeList(in)
                                          : ParseMatrixMarket(in);
}

Graph LoadGraph(const std::string& path, GraphFormat format) {
  std::ifstream in = Open(path);
  return ParseGraph(in, format);
}

SparseVector ParseDistribution(std::istream& in, Index num_nodes) {
  std::vector<std::pair<Index, double>> pairs;
  std::set<Index> seen;
  std::string line;
  Index line_no = 0;
  double total = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    long long node;
    double weight;
    std::string rest;
    if (!(ss >> node >> weight) || (ss >> rest)) {
      throw InputError(AtLine("expected 'node weight'", line_no));
    }
    if (node < 0 || node >= num_nodes) {
      throw InputError(AtLine("node out of range", line_no));
    }
    if (!(weight >= 0.0) || !std::isfinite(weight)) {
      throw InputError(AtLine("negative or non-finite weight", line_no));
    }
    if (!seen.insert(node).second) {
      throw InputError(AtLine("repeated node", line_no));
    }
    if (weight > 0.0) pairs.emplace_back(node, weight);
    total += weight;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw InputError("distribution sums to " + std::to_string(total) +
                     ", not 1");
  }
  for (auto& p : pairs) p.second /= total;
  std::sort(pairs.begin(), pairs.end());
  return SparseVector::FromPairs(num_nodes, pairs);
}

SparseVector LoadDistribution(const std::string& path, Index num_nodes) {
  std::ifstream in = Open(path);
  return ParseDistribution(in, num_nodes);
}

}  // namespace sppr
