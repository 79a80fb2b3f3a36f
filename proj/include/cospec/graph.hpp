// Copyright 2026 The cospec Authors
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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

/// Undirected graph held as a symmetric 0/1 adjacency matrix. The optional
/// partition lists consecutive vertex block sizes in vertex order.
struct Graph {
  IntMatrix adj;
  bool loops_allowed = false;
  std::vector<std::size_t> partition;

  Graph() = default;
  explicit Graph(IntMatrix a, std::vector<std::size_t> blocks = {}, bool loops = false)
      : adj(std::move(a)), loops_allowed(loops), partition(std::move(blocks)) {
    if (!adj.is_symmetric()) throw PreconditionError("Graph: adjacency matrix is not symmetric");
    if (!adj.is_binary()) throw PreconditionError("Graph: adjacency matrix is not 0/1");
    if (!loops_allowed && !adj.has_zero_diagonal()) throw PreconditionError("Graph: loop on a simple graph");
    if (!partition.empty() &&
        std::accumulate(partition.begin(), partition.end(), std::size_t{0}) != adj.rows()) {
      throw PreconditionError("Graph: partition does not cover the vertex set");
    }
  }

  std::size_t order() const { return adj.rows(); }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i; j < order(); ++j) e += adj(i, j) != 0;
    return e;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order(), 0);
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j) d[i] += static_cast<std::size_t>(adj(i, j));
    return d;
  }

  std::size_t max_degree() const {
    const auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }

  bool has_isolated_vertex() const {
    const auto d = degrees();
    return std::find(d.begin(), d.end(), std::size_t{0}) != d.end();
  }

  /// Block index of every vertex; all zeros when no partition is recorded.
  std::vector<std::size_t> block_of_vertex() const {
    std::vector<std::size_t> b(order(), 0);
    std::size_t v = 0;
    for (std::size_t k = 0; k < partition.size(); ++k)
      for (std::size_t t = 0; t < partition[k]; ++t) b[v++] = k;
    return b;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj == b.adj && a.partition == b.partition; }
};

/// Bipartite graph with biadjacency v: rows first, then columns.
inline Graph bipartite_graph(const IntMatrix& v) {
  const std::size_t m = v.rows(), n = v.cols();
  IntMatrix a(m + n, m + n);
  a.set_block(0, m, v);
  a.set_block(m, 0, v.transposed());
  return Graph(std::move(a), {m, n});
}

/// Constant degrees of the two sides of a biregular bipartite graph.
struct Biregular {
  std::size_t row_degree = 0;  // every vertex of the first side
  std::size_t col_degree = 0;  // every vertex of the second side
  friend bool operator==(const Biregular&, const Biregular&) = default;
};

/// Side degrees when the biadjacency matrix has constant row sums and
/// constant column sums, std::nullopt otherwise.
inline std::optional<Biregular> biregular_degrees(const IntMatrix& v) {
  if (v.rows() == 0 || v.cols() == 0) return std::nullopt;
  const auto rs = v.row_sums();
  const auto cs = v.col_sums();
  if (std::adjacent_find(rs.begin(), rs.end(), std::not_equal_to<>()) != rs.end()) return std::nullopt;
  if (std::adjacent_find(cs.begin(), cs.end(), std::not_equal_to<>()) != cs.end()) return std::nullopt;
  return Biregular{static_cast<std::size_t>(rs.front()), static_cast<std::size_t>(cs.front())};
}

/// Side degrees of a bipartite graph with a two-block partition; throws
/// when the graph is not bipartite along that partition or not biregular.
inline Biregular validate_biregular(const Graph& g) {
  if (g.partition.size() != 2) throw PreconditionError("validate_biregular: need a two-block partition");
  const std::size_t m = g.partition[0], n = g.partition[1];
  if (!g.adj.block(0, 0, m, m).is_zero() || !g.adj.block(m, m, n, n).is_zero()) {
    throw PreconditionError("validate_biregular: graph is not bipartite along its partition");
  }
  const auto deg = biregular_degrees(g.adj.block(0, m, m, n));
  if (!deg) throw PreconditionError("validate_biregular: side degrees are not constant");
  return *deg;
}

}  // namespace cospec
