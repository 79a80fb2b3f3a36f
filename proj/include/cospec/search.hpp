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

// Bulk search over small 0/1 seed matrices B for cospectral non-isomorphic
// unfolding pairs.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/report.hpp"
#include "cospec/unfolding.hpp"

namespace cospec {

/// Lexicographically largest row-major form of b under simultaneous row and
/// column permutation.
inline IntMatrix canonical_form(const IntMatrix& b) {
  if (!b.square()) throw PreconditionError("canonical_form: matrix is not square");
  const std::size_t n = b.rows();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntMatrix best = b;
  IntMatrix cand(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cand(i, j) = b(perm[i], perm[j]);
    if (std::lexicographical_compare(best.entries().begin(), best.entries().end(), cand.entries().begin(),
                                     cand.entries().end())) {
      best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// The fixed part of a search: everything in the seed except B.
struct SearchTemplate {
  Construction kind{};
  UnfoldingSeed base;
};

inline SearchTemplate template_from_json(Construction kind, const Json& j) {
  SearchTemplate t{kind, {}};
  switch (kind) {
    case Construction::kReflexive:
      detail::require_keys(j, {"V", "A", "D"}, {"V", "A", "D"}, "reflexive template");
      t.base.v = matrix_from_json(j["V"], "V");
      t.base.a = matrix_from_json(j["A"], "A");
      t.base.d = matrix_from_json(j["D"], "D");
      break;
    case Construction::kSemiReflexive:
      detail::require_keys(j, {"U", "X"}, {"U", "X"}, "semi-reflexive template");
      t.base.u = matrix_from_json(j["U"], "U");
      t.base.x = matrix_from_json(j["X"], "X");
      break;
    case Construction::kTripartite:
      detail::require_keys(j, {"pqr"}, {"pqr"}, "tripartite template");
      t.base.pqr = detail::pqr_from_json(j["pqr"]);
      break;
  }
  return t;
}

inline Json template_to_json(const SearchTemplate& t) {
  Json j = seed_to_json(t.base);
  j.erase("B");
  return j;
}

struct SearchOptions {
  std::size_t max_b = 3;
  unsigned threads = 1;
  SearchLimits limits;
  /// Only symmetric B are enumerated.
  bool symmetric_only = false;
};

inline constexpr std::size_t kMaxSearchB = 4;

struct Catalog {
  SearchTemplate tmpl;
  std::size_t max_b = 0;
  std::size_t examined = 0;      // seeds built and certified
  std::size_t cospectral = 0;
  std::vector<PairReport> entries;  // cospectral and non-isomorphic
};

/// Every B to try, in lexicographic order (size first, then row-major).
/// Square seeds keep one representative per simultaneous-permutation orbit;
/// the reflexive construction uses the p x q shape fixed by A and D and no
/// deduplication, since relabeling B alone changes the pair there.
inline std::vector<IntMatrix> enumerate_seeds(const SearchTemplate& t, const SearchOptions& opts) {
  if (opts.max_b > kMaxSearchB) throw CapExceeded("search: max_b above " + std::to_string(kMaxSearchB));
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  if (t.kind == Construction::kReflexive) {
    const std::size_t p = t.base.a->rows(), q = t.base.d->rows();
    if (p > opts.max_b || q > opts.max_b) throw CapExceeded("search: A and D fix a B larger than max_b");
    shapes.emplace_back(p, q);
  } else {
    for (std::size_t k = 1; k <= opts.max_b; ++k) shapes.emplace_back(k, k);
  }
  std::vector<IntMatrix> out;
  for (const auto& [p, q] : shapes) {
    const std::size_t cells = p * q;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      IntMatrix b(p, q);
      for (std::size_t c = 0; c < cells; ++c) b(c / q, c % q) = static_cast<std::int64_t>((mask >> (cells - 1 - c)) & 1);
      if (opts.symmetric_only && !b.is_symmetric()) continue;
      if (t.kind != Construction::kReflexive && !(canonical_form(b) == b)) continue;
      out.push_back(std::move(b));
    }
  }
  return out;
}

inline std::size_t projected_vertices(const SearchTemplate& t, std::size_t p, std::size_t q) {
  switch (t.kind) {
    case Construction::kReflexive: return t.base.v->rows() * p + t.base.v->cols() * q;
    case Construction::kSemiReflexive: return (t.base.u->rows() + t.base.u->cols()) * p;
    case Construction::kTripartite: return ((*t.base.pqr)[0] + (*t.base.pqr)[1] + (*t.base.pqr)[2]) * p;
  }
  return 0;
}

/// Builds and certifies every enumerated seed, keeping the cospectral
/// non-isomorphic pairs. Output order does not depend on thread count.
inline Catalog run_search(const SearchTemplate& t, const SearchOptions& opts) {
  const auto seeds = enumerate_seeds(t, opts);
  for (const auto& b : seeds) {
    if (projected_vertices(t, b.rows(), b.cols()) > opts.limits.max_graph_vertices) {
      throw CapExceeded("search: pairs would exceed " + std::to_string(opts.limits.max_graph_vertices) + " vertices");
    }
  }
  std::vector<std::optional<PairReport>> results(seeds.size());
  std::vector<char> cospectral_flags(seeds.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      UnfoldingSeed s = t.base;
      s.b = seeds[i];
      PairReport r = certify(build_unfolding(t.kind, s), opts.limits);
      cospectral_flags[i] = r.cospectral;
      if (r.cospectral && r.isomorphic == IsoVerdict::kNo) results[i] = std::move(r);
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(seeds.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < n_threads; ++k) pool.emplace_back(worker);
    worker();
  }
  Catalog c{t, opts.max_b, seeds.size(), 0, {}};
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    c.cospectral += cospectral_flags[i] != 0;
    if (results[i]) c.entries.push_back(std::move(*results[i]));
  }
  return c;
}

inline Json catalog_to_json(const Catalog& c) {
  Json j = Json::object();
  j["construction"] = static_cast<int>(c.tmpl.kind);
  j["construction_name"] = to_string(c.tmpl.kind);
  j["template"] = template_to_json(c.tmpl);
  j["max_b"] = c.max_b;
  j["examined"] = c.examined;
  j["cospectral"] = c.cospectral;
  j["count"] = c.entries.size();
  Json entries = Json::array();
  for (const auto& r : c.entries) entries.push_back(report_to_json(r));
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace cospec
