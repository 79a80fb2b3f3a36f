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

// graph6 encoding of simple undirected graphs: a size header followed by the
// upper triangle, column by column, packed into 6-bit chunks offset by 63.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/error.hpp"
#include "cospec/graph.hpp"

namespace cospec::graph6 {

namespace detail {

inline void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735ULL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw PreconditionError("graph6: graph too large");
  }
}

inline int chunk(char ch) {
  const int v = static_cast<unsigned char>(ch) - 63;
  if (v < 0 || v > 63) throw PreconditionError("graph6: byte out of range");
  return v;
}

}  // namespace detail

inline std::string encode(const Graph& g) {
  if (g.loops_allowed && !g.adj.has_zero_diagonal()) throw PreconditionError("graph6: loops are not representable");
  const std::size_t n = g.order();
  std::string out;
  detail::put_size(out, n);
  int acc = 0, bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adj(i, j) != 0 ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode(std::string_view s) {
  if (s.empty()) throw PreconditionError("graph6: empty string");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (s[0] != 126) {
    n = static_cast<std::uint64_t>(detail::chunk(s[0]));
    pos = 1;
  } else if (s.size() >= 2 && s[1] != 126) {
    if (s.size() < 4) throw PreconditionError("graph6: truncated size header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(detail::chunk(s[k]));
    pos = 4;
  } else {
    if (s.size() < 8) throw PreconditionError("graph6: truncated size header");
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::uint64_t>(detail::chunk(s[k]));
    pos = 8;
  }
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t needed = (pairs + 5) / 6;
  if (s.size() - pos != needed) throw PreconditionError("graph6: body length does not match vertex count");
  IntMatrix a(n, n);
  std::uint64_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int v = detail::chunk(s[pos + bit / 6]);
      if ((v >> (5 - bit % 6)) & 1) a(i, j) = a(j, i) = 1;
    }
  return Graph(std::move(a));
}

}  // namespace cospec::graph6
