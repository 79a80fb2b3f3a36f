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

// The three unfolding constructions. Each builder returns a pair of simple
// graphs on the same vertex count together with their canonical partitions.
// Vertex order is the natural order of the partitioned tensor product.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "cospec/charpoly.hpp"
#include "cospec/error.hpp"
#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

enum class Construction { kReflexive = 1, kSemiReflexive = 2, kTripartite = 3 };

inline std::string to_string(Construction c) {
  switch (c) {
    case Construction::kReflexive: return "reflexive-bipartite";
    case Construction::kSemiReflexive: return "semi-reflexive-bipartite";
    case Construction::kTripartite: return "tripartite";
  }
  return "unknown";
}

/// Seed data of a construction. Which fields are set depends on the kind:
/// reflexive uses v, a, b, d; semi-reflexive uses u, x, b; tripartite uses
/// pqr and b.
struct UnfoldingSeed {
  std::optional<IntMatrix> v, u, x, a, d;
  IntMatrix b;
  std::optional<std::array<std::size_t, 3>> pqr;
  friend bool operator==(const UnfoldingSeed&, const UnfoldingSeed&) = default;
};

struct UnfoldingPair {
  Graph left;
  Graph right;
  Construction construction;
  UnfoldingSeed seed;
  bool degenerate = false;  // B is the zero matrix

  std::size_t order() const { return left.order(); }
};

namespace detail {

inline void require_binary(const IntMatrix& m, const char* what) {
  if (!m.is_binary()) throw PreconditionError(std::string(what) + " must be a 0/1 matrix");
}

inline void require_simple_adjacency(const IntMatrix& m, const char* what) {
  require_binary(m, what);
  if (!m.is_symmetric()) throw PreconditionError(std::string(what) + " must be symmetric");
  if (!m.has_zero_diagonal()) throw PreconditionError(std::string(what) + " must have a zero diagonal");
}

inline Graph graph_from(const PartitionedMatrix<>& pm) { return Graph(pm.matrix, pm.row_blocks); }

}  // namespace detail

/// Unfolding with respect to a reflexive bipartite graph with biadjacency v:
///   left  = [[I_m (x) A, V (x) B  ], [V^T (x) B^T, I_n (x) D]]
///   right = [[I_m (x) D, V (x) B^T], [V^T (x) B,   I_n (x) A]]
inline UnfoldingPair build_reflexive_unfolding(const IntMatrix& v, const IntMatrix& a, const IntMatrix& b,
                                               const IntMatrix& d) {
  detail::require_binary(v, "V");
  detail::require_binary(b, "B");
  detail::require_simple_adjacency(a, "A");
  detail::require_simple_adjacency(d, "D");
  if (b.rows() != a.rows() || b.cols() != d.rows()) {
    throw PreconditionError("reflexive unfolding: B must be p x q for A p x p and D q x q");
  }
  const std::size_t m = v.rows(), n = v.cols();
  const Block2 l({{{IntMatrix::identity(m), v}, {v.transposed(), IntMatrix::identity(n)}}});
  const Block2 h({{{a, b}, {b.transposed(), d}}});
  const Block2 h_sharp({{{d, b.transposed()}, {b, a}}});
  UnfoldingPair pair{detail::graph_from(ptp2(l, h)), detail::graph_from(ptp2(l, h_sharp)),
                     Construction::kReflexive, UnfoldingSeed{}, b.is_zero()};
  pair.seed.v = v;
  pair.seed.a = a;
  pair.seed.b = b;
  pair.seed.d = d;
  return pair;
}

/// Unfolding of the semi-reflexive bipartite graph [[0, B], [B^T, I_p]]
/// with respect to L = [[0, U], [U^T, X]]; the right graph uses the partial
/// transpose [[0, B^T], [B, I_p]].
inline UnfoldingPair build_semireflexive_unfolding(const IntMatrix& u, const IntMatrix& x, const IntMatrix& b) {
  detail::require_binary(u, "U");
  detail::require_binary(b, "B");
  if (!b.square()) throw PreconditionError("semi-reflexive unfolding: B must be square");
  detail::require_simple_adjacency(x, "X");
  if (x.rows() != u.cols()) throw PreconditionError("semi-reflexive unfolding: X must be n x n for U m x n");
  const std::size_t m = u.rows(), p = b.rows();
  const Block2 l({{{IntMatrix::zeros(m, m), u}, {u.transposed(), x}}});
  const Block2 h({{{IntMatrix::zeros(p, p), b}, {b.transposed(), IntMatrix::identity(p)}}});
  const IntMatrix h_tau_flat = partial_transpose(h.flatten(), p);
  const Block2 h_tau = Block2::split(h_tau_flat, {p, p}, {p, p});
  UnfoldingPair pair{detail::graph_from(ptp2(l, h)), detail::graph_from(ptp2(l, h_tau)),
                     Construction::kSemiReflexive, UnfoldingSeed{}, b.is_zero()};
  pair.seed.u = u;
  pair.seed.x = x;
  pair.seed.b = b;
  return pair;
}

/// L(p,q,r): the complete tripartite pattern with J blocks off the diagonal.
inline Block3 complete_tripartite_pattern(std::size_t p, std::size_t q, std::size_t r) {
  const std::array<std::size_t, 3> s{p, q, r};
  Block3::Grid g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      g[i][j] = i == j ? IntMatrix::zeros(s[i], s[j]) : IntMatrix::ones(s[i], s[j]);
  return Block3(std::move(g));
}

/// [[0, B, B], [B^T, 0, B], [B^T, B^T, 0]].
inline Block3 tripartite_seed(const IntMatrix& b) {
  const std::size_t n = b.rows();
  const IntMatrix z = IntMatrix::zeros(n, n), bt = b.transposed();
  return Block3({{{z, b, b}, {bt, z, b}, {bt, bt, z}}});
}

/// Unfolding of the tripartite graph tripartite_seed(B) with respect to
/// L(p,q,r); the right graph uses the partial transpose of the seed.
inline UnfoldingPair build_tripartite_unfolding(std::size_t p, std::size_t q, std::size_t r, const IntMatrix& b) {
  if (p == 0 || q == 0 || r == 0) throw PreconditionError("tripartite unfolding: p, q, r must be positive");
  detail::require_binary(b, "B");
  if (!b.square()) throw PreconditionError("tripartite unfolding: B must be square");
  const std::size_t n = b.rows();
  const Block3 l = complete_tripartite_pattern(p, q, r);
  const Block3 seed = tripartite_seed(b);
  const Block3 seed_tau = Block3::split(partial_transpose(seed.flatten(), n), {n, n, n}, {n, n, n});
  UnfoldingPair pair{detail::graph_from(ptp3(l, seed)), detail::graph_from(ptp3(l, seed_tau)),
                     Construction::kTripartite, UnfoldingSeed{}, b.is_zero()};
  pair.seed.b = b;
  pair.seed.pqr = std::array<std::size_t, 3>{p, q, r};
  return pair;
}

/// Rebuilds a pair from a recorded seed.
inline UnfoldingPair build_unfolding(Construction kind, const UnfoldingSeed& s) {
  auto need = [](const std::optional<IntMatrix>& m, const char* name) -> const IntMatrix& {
    if (!m) throw PreconditionError(std::string("seed is missing ") + name);
    return *m;
  };
  switch (kind) {
    case Construction::kReflexive:
      return build_reflexive_unfolding(need(s.v, "V"), need(s.a, "A"), s.b, need(s.d, "D"));
    case Construction::kSemiReflexive:
      return build_semireflexive_unfolding(need(s.u, "U"), need(s.x, "X"), s.b);
    case Construction::kTripartite:
      if (!s.pqr) throw PreconditionError("seed is missing pqr");
      return build_tripartite_unfolding((*s.pqr)[0], (*s.pqr)[1], (*s.pqr)[2], s.b);
  }
  throw PreconditionError("unknown construction");
}

/// True when m has a zero row and also a zero column.
inline bool has_zero_row_and_column(const IntMatrix& m) {
  const auto rs = m.row_sums();
  const auto cs = m.col_sums();
  return std::find(rs.begin(), rs.end(), 0) != rs.end() && std::find(cs.begin(), cs.end(), 0) != cs.end();
}

/// Structural hypotheses of the isomorphism results, evaluated on the seed.
/// Side degrees follow the convention l = row sum, k = column sum of the
/// biadjacency (V or U).
struct HypothesisReport {
  Construction construction{};
  bool b_zero = false;
  bool b_nondegenerate = false;  // no simultaneous zero row and zero column

  // Reflexive and semi-reflexive.
  std::optional<std::size_t> k, l;
  bool biregular = false;

  // Reflexive.
  bool m_equals_n = false;
  bool k_ne_l = false;
  bool v_nondegenerate = false;
  bool a_d_cospectral = false;

  // Semi-reflexive.
  std::size_t gx_max_degree = 0;
  bool gx_has_isolated = false;
  bool condition1 = false;  // l <= k and G_X has no isolated vertex
  bool condition2 = false;  // l > k and maxdeg(G_X) == l - k - 1

  // Tripartite.
  bool p_equals_r = false;
  bool p_lt_q_lt_r = false;
  bool p_plus_q_lt_r = false;
};

inline HypothesisReport check_hypotheses(const UnfoldingPair& pair) {
  HypothesisReport h;
  const auto& s = pair.seed;
  h.construction = pair.construction;
  h.b_zero = s.b.is_zero();
  h.b_nondegenerate = !has_zero_row_and_column(s.b);

  auto record_biregular = [&h](const IntMatrix& bi) {
    if (bi.is_zero()) return;
    if (auto deg = biregular_degrees(bi)) {
      h.biregular = true;
      h.l = deg->row_degree;
      h.k = deg->col_degree;
    }
  };

  switch (pair.construction) {
    case Construction::kReflexive: {
      record_biregular(*s.v);
      h.m_equals_n = s.v->rows() == s.v->cols();
      h.k_ne_l = h.biregular && *h.k != *h.l;
      h.v_nondegenerate = !has_zero_row_and_column(*s.v);
      h.a_d_cospectral = cospectral(*s.a, *s.d);
      break;
    }
    case Construction::kSemiReflexive: {
      record_biregular(*s.u);
      const Graph gx(*s.x);
      h.gx_max_degree = gx.max_degree();
      h.gx_has_isolated = gx.has_isolated_vertex();
      if (h.biregular) {
        h.condition1 = *h.l <= *h.k && !h.gx_has_isolated;
        h.condition2 = *h.l > *h.k && h.gx_max_degree + *h.k + 1 == *h.l;
      }
      break;
    }
    case Construction::kTripartite: {
      const auto [p, q, r] = *s.pqr;
      h.p_equals_r = p == r;
      h.p_lt_q_lt_r = p < q && q < r;
      h.p_plus_q_lt_r = p + q < r;
      break;
    }
  }
  return h;
}

}  // namespace cospec
