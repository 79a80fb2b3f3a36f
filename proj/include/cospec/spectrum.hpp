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

// Floating-point spectra. Diagnostic only; CharPoly is the exact certificate.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  int sweeps = 0;
  double off_norm = 0.0;
};

struct JacobiOptions {
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method.
template <typename T>
Spectrum spectrum_approx(const Matrix<T>& m, JacobiOptions opts = {}) {
  if (!m.is_symmetric()) throw PreconditionError("spectrum_approx: matrix is not symmetric");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<double>(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  Spectrum out;
  out.off_norm = off();
  while (out.off_norm > opts.tolerance && out.sweeps < opts.max_sweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    ++out.sweeps;
    out.off_norm = off();
  }
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

}  // namespace cospec
