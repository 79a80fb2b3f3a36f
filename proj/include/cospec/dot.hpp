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

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "cospec/graph.hpp"

namespace cospec {

/// Graphviz rendering with one fill color per canonical partition block.
inline std::string to_dot(const Graph& g, const std::string& name) {
  static constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                          "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
  const auto blocks = g.block_of_vertex();
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"" << v << "\", fillcolor=\"" << kPalette[blocks[v] % kPalette.size()]
       << "\", group=" << blocks[v] << "];\n";
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adj(i, j) != 0) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cospec
