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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of det(xI - M), leading coefficient first.
///
/// coeffs[k] multiplies x^(n-k); coeffs[0] is always 1 and coeffs[1] is
/// -trace(M).
struct CharPoly {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  /// Value at an integer point, by Horner's rule.
  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (const auto& c : coeffs) acc = acc * x + c;
    return acc;
  }

  /// x^4 - 3x^2 + 1 style rendering for logs.
  std::string to_string() const {
    std::string out;
    const std::size_t n = degree();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const BigInt& c = coeffs[k];
      if (c == 0) continue;
      const std::size_t e = n - k;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (mag != 1 || e == 0) out += mag.str();
      if (e >= 1) out += "x";
      if (e >= 2) out += "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence over
/// arbitrary-precision integers. Every division in the recurrence is exact
/// for integer input.
template <typename T>
CharPoly char_poly(const Matrix<T>& m) {
  if (!m.square()) throw PreconditionError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = BigInt(m(i, j));

  CharPoly p;
  p.coeffs.assign(n + 1, BigInt(0));
  p.coeffs[0] = 1;

  // work = M_k, the adjugate-series matrix; M_1 = I.
  std::vector<BigInt> work(n * n, BigInt(0));
  std::vector<BigInt> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) work[i * n + i] = 1;

  for (std::size_t k = 1; k <= n; ++k) {
    // prod = A * M_k
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (a[i * n + t] == 0 || work[t * n + j] == 0) continue;
          s += a[i * n + t] * work[t * n + j];
        }
        prod[i * n + j] = std::move(s);
      }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod[i * n + i];
    const BigInt kk(k);
    if (tr % kk != 0) throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
    p.coeffs[k] = -(tr / kk);
    if (k == n) break;
    work = prod;
    for (std::size_t i = 0; i < n; ++i) work[i * n + i] += p.coeffs[k];
  }
  return p;
}

/// Exact cospectrality test. Matrices of different order are never cospectral.
template <typename T>
bool cospectral(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.square() || !b.square()) throw PreconditionError("cospectral: matrix is not square");
  if (a.rows() != b.rows()) return false;
  return char_poly(a) == char_poly(b);
}

}  // namespace cospec
