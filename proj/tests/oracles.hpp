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

// Slow, independent reference computations used only by the tests. None of
// these share code paths with the library routines they check.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cospec/matrix.hpp"

namespace cospec::oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Poly = std::vector<BigInt>;      // lowest degree first
using QPoly = std::vector<Rational>;   // lowest degree first

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// det(xI - M) by the Leibniz expansion with polynomial entries. Returned
/// leading coefficient first, to match CharPoly. Use for n <= 8.
inline std::vector<BigInt> leibniz_char_poly(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(n + 1, 0);
  do {
    Poly term{1};
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = perm[i];
      Poly entry = i == j ? Poly{BigInt(-m(i, j)), 1} : Poly{BigInt(-m(i, j))};
      term = poly_mul(term, entry);
    }
    const int s = permutation_sign(perm);
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += s * term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {total.rbegin(), total.rend()};
}

/// Exact determinant by fraction-free Bareiss elimination.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det(tI - M) at an integer point.
inline BigInt char_poly_at(const IntMatrix& m, std::int64_t t) {
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? BigInt(t) : BigInt(0)) - m(i, j);
  return bareiss_det(std::move(a));
}

/// Entry of the partitioned tensor product computed straight from the
/// block index arithmetic; blocks given as (left grid, right grid).
template <std::size_t N>
IntMatrix naive_partitioned_tensor(const std::array<std::array<IntMatrix, N>, N>& l,
                                   const std::array<std::array<IntMatrix, N>, N>& h) {
  std::array<std::size_t, N> rh{}, cw{};
  for (std::size_t i = 0; i < N; ++i) rh[i] = l[i][0].rows() * h[i][0].rows();
  for (std::size_t j = 0; j < N; ++j) cw[j] = l[0][j].cols() * h[0][j].cols();
  const std::size_t R = std::accumulate(rh.begin(), rh.end(), std::size_t{0});
  const std::size_t C = std::accumulate(cw.begin(), cw.end(), std::size_t{0});
  IntMatrix out(R, C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) {
      std::size_t bi = 0, rr = r;
      while (rr >= rh[bi]) rr -= rh[bi++];
      std::size_t bj = 0, cc = c;
      while (cc >= cw[bj]) cc -= cw[bj++];
      const IntMatrix& x = l[bi][bj];
      const IntMatrix& y = h[bi][bj];
      out(r, c) = x(rr / y.rows(), cc / y.cols()) * y(rr % y.rows(), cc % y.cols());
    }
  return out;
}

// --- Real roots of an integer polynomial via exact Sturm sequences --------

inline void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    if (a.empty()) a.push_back(0);
    trim(a);
  }
  return a;
}

inline QPoly qpoly_div(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {0};
  QPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    if (a.empty()) break;
  }
  return q;
}

// Scales p by a positive rational so its coefficients are coprime integers.
inline void make_primitive(QPoly& p) {
  BigInt l = 1, g = 0;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  for (auto& c : p) {
    c *= l;
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
  }
  if (g > 1)
    for (auto& c : p) c /= g;
}

inline QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {0};
  QPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
  return d;
}

inline bool is_zero(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    QPoly r = qpoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline int sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const Rational v = eval(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Distinct real roots of a polynomial (leading coefficient first), each
/// isolated by bisection to an interval narrower than width.
inline std::vector<double> distinct_real_roots(const std::vector<BigInt>& leading_first, double width = 1e-12) {
  QPoly p;
  for (auto it = leading_first.rbegin(); it != leading_first.rend(); ++it) p.emplace_back(*it);
  trim(p);
  const QPoly sqfree = qpoly_div(p, qpoly_gcd(p, derivative(p)));
  std::vector<QPoly> chain{sqfree, derivative(sqfree)};
  for (auto& c : chain) make_primitive(c);
  while (!is_zero(chain.back()) && chain.back().size() > 1) {
    QPoly r = qpoly_mod(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (is_zero(r)) break;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  // Cauchy bound.
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < sqfree.size(); ++i) {
    Rational c = sqfree[i] / sqfree.back();
    if (c < 0) c = -c;
    const Rational candidate = 1 + c;
    if (candidate > bound) bound = candidate;
  }
  std::vector<double> roots;
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  const Rational w(width);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int count = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (count == 0) continue;
    if (count == 1 && hi - lo < w) {
      roots.push_back(static_cast<double>((lo + hi) / 2));
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// --- Brute-force permutation searches --------------------------------------

inline bool brute_perm_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<std::size_t> r(a.rows()), c(a.cols());
  std::iota(r.begin(), r.end(), 0);
  do {
    std::iota(c.begin(), c.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < a.rows() && ok; ++i)
        for (std::size_t j = 0; j < a.cols() && ok; ++j) ok = b(i, j) == a(r[i], c[j]);
      if (ok) return true;
    } while (std::next_permutation(c.begin(), c.end()));
  } while (std::next_permutation(r.begin(), r.end()));
  return false;
}

inline bool brute_perm_similar(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.rows() && ok; ++i)
      for (std::size_t j = 0; j < a.cols() && ok; ++j) ok = b(i, j) == a(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// --- Random generators ---------------------------------------------------

inline IntMatrix random_binary(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::bernoulli_distribution coin(0.5);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(rng);
  return m;
}

inline IntMatrix random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline IntMatrix random_simple_adjacency(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = coin(rng);
  return m;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// target(i,j) = m(p[i], p[j]).
inline IntMatrix relabel(const IntMatrix& m, const std::vector<std::size_t>& p) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(p[i], p[j]);
  return out;
}

/// All 0/1 matrices of a shape, in lexicographic row-major order.
inline std::vector<IntMatrix> all_binary(std::size_t r, std::size_t c) {
  std::vector<IntMatrix> out;
  const std::size_t cells = r * c;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    IntMatrix m(r, c);
    for (std::size_t k = 0; k < cells; ++k) m(k / c, k % c) = static_cast<std::int64_t>((mask >> (cells - 1 - k)) & 1);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace cospec::oracle
