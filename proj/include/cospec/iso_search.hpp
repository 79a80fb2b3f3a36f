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

// Exhaustive isomorphism search between two vertex-colored matrices with
// integer entries (directed, loops and weights allowed). The search runs
// individualization and refinement: a shared color refinement is applied to
// both sides, then a vertex of the smallest non-singleton cell of the target
// is matched against every same-colored source vertex in index order.
// A std::nullopt result is a proof that no isomorphism exists.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

using Permutation = std::vector<std::size_t>;

namespace detail {

class ColoredIsomorphism {
 public:
  ColoredIsomorphism(const IntMatrix& source, const IntMatrix& target) : src_(source), dst_(target), n_(source.rows()) {}

  /// Finds sigma with target(i,j) == source(sigma[i], sigma[j]) and
  /// target_colors[i] == source_colors[sigma[i]].
  std::optional<Permutation> run(std::vector<std::int64_t> source_colors, std::vector<std::int64_t> target_colors) {
    nodes_ = 0;
    return search(std::move(source_colors), std::move(target_colors));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  using Signature = std::vector<std::int64_t>;

  Signature signature(const IntMatrix& m, const std::vector<std::int64_t>& colors, std::size_t v) const {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> nbr;
    for (std::size_t u = 0; u < n_; ++u) {
      if (u == v) continue;
      const auto out = m(v, u), in = m(u, v);
      if (out != 0 || in != 0) nbr.emplace_back(colors[u], out, in);
    }
    std::sort(nbr.begin(), nbr.end());
    Signature s;
    s.reserve(2 + 3 * nbr.size());
    s.push_back(colors[v]);
    s.push_back(m(v, v));
    for (const auto& [c, o, i] : nbr) {
      s.push_back(c);
      s.push_back(o);
      s.push_back(i);
    }
    return s;
  }

  static std::size_t count_colors(const std::vector<std::int64_t>& c) {
    std::vector<std::int64_t> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  // Joint refinement to the coarsest stable coloring; false when the color
  // class sizes of the two sides diverge.
  bool refine(std::vector<std::int64_t>& cs, std::vector<std::int64_t>& ct) const {
    std::size_t classes = count_colors(cs);
    while (true) {
      std::vector<Signature> ss(n_), st(n_);
      std::map<Signature, std::int64_t> ids;
      for (std::size_t v = 0; v < n_; ++v) {
        ss[v] = signature(src_, cs, v);
        st[v] = signature(dst_, ct, v);
        ids.emplace(ss[v], 0);
        ids.emplace(st[v], 0);
      }
      std::int64_t next = 0;
      for (auto& [sig, id] : ids) id = next++;
      std::vector<std::int64_t> hs(ids.size(), 0), ht(ids.size(), 0);
      for (std::size_t v = 0; v < n_; ++v) {
        cs[v] = ids[ss[v]];
        ct[v] = ids[st[v]];
        ++hs[cs[v]];
        ++ht[ct[v]];
      }
      if (hs != ht) return false;
      const std::size_t now = count_colors(cs);
      if (now == classes) return true;
      classes = now;
    }
  }

  std::optional<Permutation> search(std::vector<std::int64_t> cs, std::vector<std::int64_t> ct) {
    ++nodes_;
    if (!refine(cs, ct)) return std::nullopt;

    std::map<std::int64_t, std::size_t> cell_size;
    for (auto c : ct) ++cell_size[c];
    std::optional<std::int64_t> pick;
    std::size_t best = n_ + 1;
    for (const auto& [c, sz] : cell_size)
      if (sz > 1 && sz < best) best = sz, pick = c;

    if (!pick) {
      // Discrete coloring: the map is forced.
      Permutation sigma(n_);
      std::vector<std::size_t> by_color(n_);
      for (std::size_t v = 0; v < n_; ++v) by_color[cs[v]] = v;
      for (std::size_t i = 0; i < n_; ++i) sigma[i] = by_color[ct[i]];
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (dst_(i, j) != src_(sigma[i], sigma[j])) return std::nullopt;
      return sigma;
    }

    std::size_t w = 0;
    while (ct[w] != *pick) ++w;
    const std::int64_t fresh = static_cast<std::int64_t>(n_) + 1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (cs[v] != *pick) continue;
      auto cs2 = cs, ct2 = ct;
      cs2[v] = fresh;
      ct2[w] = fresh;
      if (auto r = search(std::move(cs2), std::move(ct2))) return r;
    }
    return std::nullopt;
  }

  const IntMatrix& src_;
  const IntMatrix& dst_;
  std::size_t n_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// sigma with target(i,j) == source(sigma[i], sigma[j]), colors preserved.
/// Equivalently P^T source P == target for P(sigma[i], i) = 1.
inline std::optional<Permutation> find_colored_isomorphism(const IntMatrix& source, const IntMatrix& target,
                                                           std::vector<std::int64_t> source_colors,
                                                           std::vector<std::int64_t> target_colors) {
  if (!source.square() || !target.square()) throw PreconditionError("isomorphism search: matrices must be square");
  if (source.rows() != target.rows()) return std::nullopt;
  if (source_colors.size() != source.rows() || target_colors.size() != target.rows()) {
    throw PreconditionError("isomorphism search: one color per vertex required");
  }
  if (source.rows() == 0) return Permutation{};
  detail::ColoredIsomorphism engine(source, target);
  return engine.run(std::move(source_colors), std::move(target_colors));
}

/// Permutation matrix with P(perm[i], i) = 1.
inline IntMatrix permutation_matrix(const Permutation& perm) {
  IntMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1;
  return p;
}

inline bool is_permutation(const Permutation& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : perm) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace cospec
