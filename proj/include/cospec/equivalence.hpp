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

// Decidable equivalence checks: permutation equivalence and similarity of a
// matrix with its transpose (PET / PST), graph isomorphism, and isomorphism
// restricted to maps that send canonical partition blocks onto blocks.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/graph.hpp"
#include "cospec/iso_search.hpp"
#include "cospec/matrix.hpp"
#include "cospec/unfolding.hpp"

namespace cospec {

struct SearchLimits {
  std::size_t max_matrix_dim = 8;      // PET / PST / permutation equivalence
  std::size_t max_graph_vertices = 24;  // graph isomorphism
};

enum class WitnessKind { kPermEquivalence, kPermSimilarity, kGraphIso, kPartitionIso };

/// Permutations certifying a matrix equation. For every kind,
///   target(i, j) == source(row_perm[i], col_perm[j]),
/// i.e. P^T source Q == target with P(row_perm[i], i) = Q(col_perm[j], j) = 1.
/// Similarity and isomorphism witnesses have row_perm == col_perm. A
/// partition witness also records which source block each target block
/// came from.
struct PermWitness {
  WitnessKind kind{};
  Permutation row_perm;
  Permutation col_perm;
  std::vector<std::size_t> block_map;  // target block -> source block

  /// Re-checks the defining equation entry by entry.
  bool replays(const IntMatrix& source, const IntMatrix& target) const {
    if (source.rows() != target.rows() || source.cols() != target.cols()) return false;
    if (!is_permutation(row_perm, source.rows()) || !is_permutation(col_perm, source.cols())) return false;
    for (std::size_t i = 0; i < target.rows(); ++i)
      for (std::size_t j = 0; j < target.cols(); ++j)
        if (target(i, j) != source(row_perm[i], col_perm[j])) return false;
    return true;
  }
};

/// Permutations (P, Q) with P^T source Q == target, for same-shape matrices.
inline std::optional<PermWitness> perm_equivalent(const IntMatrix& source, const IntMatrix& target,
                                                  const SearchLimits& limits = {}) {
  if (source.rows() != target.rows() || source.cols() != target.cols()) return std::nullopt;
  if (std::max(source.rows(), source.cols()) > limits.max_matrix_dim) {
    throw CapExceeded("permutation equivalence: matrix exceeds " + std::to_string(limits.max_matrix_dim) +
                      " rows/columns");
  }
  // Rows and columns become the two color classes of a directed bipartite
  // graph; an isomorphism splits into a row map and a column map.
  const std::size_t r = source.rows(), c = source.cols();
  auto lift = [r, c](const IntMatrix& m) {
    IntMatrix g(r + c, r + c);
    g.set_block(0, r, m);
    return g;
  };
  std::vector<std::int64_t> colors(r + c, 0);
  std::fill(colors.begin() + static_cast<std::ptrdiff_t>(r), colors.end(), 1);
  auto sigma = find_colored_isomorphism(lift(source), lift(target), colors, colors);
  if (!sigma) return std::nullopt;
  PermWitness w{WitnessKind::kPermEquivalence, {}, {}, {}};
  w.row_perm.assign(sigma->begin(), sigma->begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t j = 0; j < c; ++j) w.col_perm.push_back((*sigma)[r + j] - r);
  return w;
}

/// Row-sum multiset differs from column-sum multiset. Sound but incomplete
/// certificate that b is not PET.
inline bool quick_non_pet(const IntMatrix& b) {
  if (!b.square()) throw PreconditionError("quick_non_pet: matrix is not square");
  auto rs = b.row_sums();
  auto cs = b.col_sums();
  std::sort(rs.begin(), rs.end());
  std::sort(cs.begin(), cs.end());
  return rs != cs;
}

/// P, Q with P^T b Q == b^T, or std::nullopt after an exhaustive search.
inline std::optional<PermWitness> is_pet(const IntMatrix& b, const SearchLimits& limits = {}) {
  if (!b.square()) throw PreconditionError("is_pet: matrix is not square");
  if (b.rows() > limits.max_matrix_dim) throw CapExceeded("is_pet: matrix exceeds size cap");
  if (quick_non_pet(b)) return std::nullopt;
  return perm_equivalent(b, b.transposed(), limits);
}

/// P with P^T b P == b^T, or std::nullopt after an exhaustive search.
inline std::optional<PermWitness> is_pst(const IntMatrix& b, const SearchLimits& limits = {}) {
  if (!b.square()) throw PreconditionError("is_pst: matrix is not square");
  if (b.rows() > limits.max_matrix_dim) throw CapExceeded("is_pst: matrix exceeds size cap");
  const std::vector<std::int64_t> colors(b.rows(), 0);
  auto sigma = find_colored_isomorphism(b, b.transposed(), colors, colors);
  if (!sigma) return std::nullopt;
  return PermWitness{WitnessKind::kPermSimilarity, *sigma, *sigma, {}};
}

/// P with P^T A(g1) P == A(g2). std::nullopt proves non-isomorphism.
inline std::optional<PermWitness> graph_isomorphic(const Graph& g1, const Graph& g2, const SearchLimits& limits = {}) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > limits.max_graph_vertices) {
    throw CapExceeded("graph_isomorphic: graph exceeds " + std::to_string(limits.max_graph_vertices) + " vertices");
  }
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  const std::vector<std::int64_t> colors(g1.order(), 0);
  auto sigma = find_colored_isomorphism(g1.adj, g2.adj, colors, colors);
  if (!sigma) return std::nullopt;
  return PermWitness{WitnessKind::kGraphIso, *sigma, *sigma, {}};
}

/// Isomorphism left -> right that maps every canonical block of the left
/// graph onto a whole block of the right graph. All size-compatible block
/// matchings are tried in lexicographic order, including swaps.
inline std::optional<PermWitness> partition_respecting_iso(const UnfoldingPair& pair, const SearchLimits& limits = {}) {
  const Graph& g1 = pair.left;
  const Graph& g2 = pair.right;
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > limits.max_graph_vertices) throw CapExceeded("partition_respecting_iso: graph exceeds size cap");
  const std::size_t nb = g1.partition.size();
  if (nb == 0 || g2.partition.size() != nb) {
    throw PreconditionError("partition_respecting_iso: both graphs need partitions with the same block count");
  }
  const auto blocks1 = g1.block_of_vertex();
  const auto blocks2 = g2.block_of_vertex();
  std::vector<std::int64_t> colors1(blocks1.begin(), blocks1.end());

  // match[b2] = b1: right block b2 is the image of left block b1.
  std::vector<std::size_t> match(nb);
  for (std::size_t i = 0; i < nb; ++i) match[i] = i;
  do {
    bool sizes_ok = true;
    for (std::size_t b2 = 0; b2 < nb; ++b2) sizes_ok &= g2.partition[b2] == g1.partition[match[b2]];
    if (!sizes_ok) continue;
    std::vector<std::int64_t> colors2(g2.order());
    for (std::size_t v = 0; v < g2.order(); ++v) colors2[v] = static_cast<std::int64_t>(match[blocks2[v]]);
    if (auto sigma = find_colored_isomorphism(g1.adj, g2.adj, colors1, colors2)) {
      return PermWitness{WitnessKind::kPartitionIso, *sigma, *sigma, match};
    }
  } while (std::next_permutation(match.begin(), match.end()));
  return std::nullopt;
}

enum class SimilarityKind { kOrthogonal, kInvolutory, kBoth, kNeither };

struct SimilarityCheck {
  bool orthogonal = false;       // Q^T Q == I
  bool involutory = false;       // Q^2 == I
  bool relation_holds = false;   // Q^T B Q == B^T (orthogonal) or Q^{-1} B Q == B^T (involutory)
  SimilarityKind kind = SimilarityKind::kNeither;
  double residual = 0.0;         // max abs error of the accepted relation
};

/// Verifies a user-supplied real similarity Q between b and b^T. The
/// artifact never searches for Q.
inline SimilarityCheck verify_similarity_witness(const IntMatrix& b, const RealMatrix& q, double tol = 1e-9) {
  if (!b.square() || !q.square() || q.rows() != b.rows()) {
    throw PreconditionError("verify_similarity_witness: Q must be square and match B");
  }
  const std::size_t n = b.rows();
  RealMatrix bd(n, n), btd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bd(i, j) = static_cast<double>(b(i, j));
      btd(i, j) = static_cast<double>(b(j, i));
    }
  auto max_dev = [](const RealMatrix& x, const RealMatrix& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) d = std::max(d, std::abs(x(i, j) - y(i, j)));
    return d;
  };
  const RealMatrix eye = RealMatrix::identity(n);

  SimilarityCheck out;
  out.orthogonal = max_dev(q.transposed() * q, eye) <= tol;
  out.involutory = max_dev(q * q, eye) <= tol;

  double best = std::numeric_limits<double>::infinity();
  if (out.orthogonal) best = std::min(best, max_dev(q.transposed() * bd * q, btd));
  if (out.involutory) best = std::min(best, max_dev(q * bd * q, btd));  // Q^{-1} == Q
  out.residual = best;
  out.relation_holds = best <= tol;
  out.kind = out.orthogonal && out.involutory ? SimilarityKind::kBoth
             : out.orthogonal                 ? SimilarityKind::kOrthogonal
             : out.involutory                 ? SimilarityKind::kInvolutory
                                              : SimilarityKind::kNeither;
  return out;
}

/// Compares perm-equivalence of (c (x) a, c (x) b) with that of (a, b); the
/// cancellation law says these always agree when c is non-zero and a does
/// not have both a zero row and a zero column.
inline bool hammack_property_test(const IntMatrix& c, const IntMatrix& a, const IntMatrix& b,
                                  const SearchLimits& limits = {}) {
  if (c.is_zero()) throw PreconditionError("hammack_property_test: C must be non-zero");
  if (!a.square()) throw PreconditionError("hammack_property_test: A must be square");
  if (has_zero_row_and_column(a)) throw PreconditionError("hammack_property_test: A has a zero row and a zero column");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("hammack_property_test: A and B differ in shape");
  const bool small = perm_equivalent(a, b, limits).has_value();
  const bool big = perm_equivalent(kron(c, a), kron(c, b), limits).has_value();
  return small == big;
}

}  // namespace cospec
