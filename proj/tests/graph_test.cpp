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

#include <gtest/gtest.h>

#include "cospec/graph.hpp"
#include "fixtures.hpp"

namespace cospec {
namespace {

TEST(GraphTest, RejectsNonSimpleAdjacency) {
  EXPECT_THROW(Graph(fixtures::reflexive_b()), PreconditionError);
  EXPECT_THROW(Graph(IntMatrix::identity(2)), PreconditionError);
  EXPECT_THROW(Graph(IntMatrix{{0, 2}, {2, 0}}), PreconditionError);
  EXPECT_NO_THROW(Graph(IntMatrix::identity(2), {}, true));
  EXPECT_THROW(Graph(fixtures::swap2(), {3}), PreconditionError);
}

TEST(GraphTest, DegreesAndEdges) {
  const Graph g(IntMatrix{{0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}, {1, 3});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 1, 1, 0}));
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_TRUE(g.has_isolated_vertex());
  EXPECT_EQ(g.block_of_vertex(), (std::vector<std::size_t>{0, 1, 1, 1}));
}

TEST(BiregularTest, StarIsBiregular) {
  for (std::size_t n : {2, 3, 5}) {
    const auto deg = validate_biregular(bipartite_graph(IntMatrix::ones(1, n)));
    EXPECT_EQ(deg.row_degree, n);
    EXPECT_EQ(deg.col_degree, 1u);
  }
}

TEST(BiregularTest, CompleteBipartite) {
  EXPECT_EQ(validate_biregular(bipartite_graph(IntMatrix::ones(2, 2))), (Biregular{2, 2}));
}

TEST(BiregularTest, UnevenColumnsAreRejected) {
  const IntMatrix v{{1, 1, 0}, {0, 1, 1}};
  EXPECT_EQ(v.col_sums(), (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_FALSE(biregular_degrees(v).has_value());
  EXPECT_THROW(validate_biregular(bipartite_graph(v)), PreconditionError);
}

TEST(BiregularTest, NeedsBipartitePartition) {
  const Graph triangle(IntMatrix::ones(3, 3) - IntMatrix::identity(3), {1, 2});
  EXPECT_THROW(validate_biregular(triangle), PreconditionError);
  EXPECT_THROW(validate_biregular(Graph(fixtures::swap2())), PreconditionError);
}

}  // namespace
}  // namespace cospec
