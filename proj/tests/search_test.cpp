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

#include "cospec/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace cospec {
namespace {

SearchTemplate complete_template() {
  SearchTemplate t{Construction::kSemiReflexive, {}};
  t.base.u = fixtures::complete_u();
  t.base.x = fixtures::complete_x();
  return t;
}

SearchTemplate tripartite_template(std::size_t p, std::size_t q, std::size_t r) {
  SearchTemplate t{Construction::kTripartite, {}};
  t.base.pqr = std::array<std::size_t, 3>{p, q, r};
  return t;
}

bool contains_seed(const Catalog& c, const IntMatrix& b) {
  for (const auto& e : c.entries)
    if (e.seed.b == b) return true;
  return false;
}

TEST(CanonicalFormTest, OrbitRepresentative) {
  EXPECT_EQ(canonical_form(fixtures::row_pair_b()), fixtures::row_pair_b());
  EXPECT_EQ(canonical_form(IntMatrix{{0, 0}, {1, 1}}), fixtures::row_pair_b());
  EXPECT_EQ(canonical_form(IntMatrix{{0, 0}, {0, 1}}), (IntMatrix{{1, 0}, {0, 0}}));
  EXPECT_THROW(canonical_form(fixtures::reflexive_v()), PreconditionError);
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = oracle::random_binary(rng, 4, 4);
    const auto perm = oracle::random_permutation(rng, 4);
    EXPECT_EQ(canonical_form(b), canonical_form(oracle::relabel(b, perm)));
  }
}

TEST(EnumerateTest, OneSeedPerOrbit) {
  SearchOptions opts;
  opts.max_b = 3;
  const auto seeds = enumerate_seeds(complete_template(), opts);
  // 2 + 10 + 104 orbits of binary matrices under simultaneous permutation.
  EXPECT_EQ(seeds.size(), 2u + 10u + 104u);
  for (std::size_t i = 1; i < seeds.size(); ++i) EXPECT_LE(seeds[i - 1].rows(), seeds[i].rows());
  for (const auto& b : seeds) EXPECT_EQ(canonical_form(b), b);
}

TEST(EnumerateTest, ReflexiveUsesFixedShape) {
  SearchTemplate t{Construction::kReflexive, {}};
  t.base.v = fixtures::reflexive_v();
  t.base.a = fixtures::swap2();
  t.base.d = IntMatrix(1, 1);
  SearchOptions opts;
  opts.max_b = 2;
  const auto seeds = enumerate_seeds(t, opts);
  ASSERT_EQ(seeds.size(), 4u);
  for (const auto& b : seeds) {
    EXPECT_EQ(b.rows(), 2u);
    EXPECT_EQ(b.cols(), 1u);
  }
}

TEST(SearchTest, SemiReflexiveCatalog) {
  SearchOptions opts;
  opts.max_b = 2;
  const auto c = run_search(complete_template(), opts);
  EXPECT_EQ(c.examined, 12u);
  EXPECT_EQ(c.cospectral, c.examined);
  EXPECT_TRUE(contains_seed(c, fixtures::row_pair_b()));
  for (const auto& e : c.entries) {
    EXPECT_TRUE(e.cospectral);
    EXPECT_EQ(e.isomorphic, IsoVerdict::kNo);
    EXPECT_FALSE(e.b_pet.value());
  }
}

TEST(SearchTest, TripartiteCatalog) {
  SearchOptions opts;
  opts.max_b = 2;
  const auto c = run_search(tripartite_template(1, 1, 2), opts);
  EXPECT_TRUE(contains_seed(c, fixtures::row_pair_b()));
}

TEST(SearchTest, SymmetricOnlyFindsNothing) {
  SearchOptions opts;
  opts.max_b = 3;
  opts.symmetric_only = true;
  const auto c = run_search(complete_template(), opts);
  EXPECT_GT(c.examined, 0u);
  EXPECT_TRUE(c.entries.empty());
}

TEST(SearchTest, OutputIndependentOfThreadCount) {
  SearchOptions one;
  one.max_b = 3;
  SearchOptions many = one;
  many.threads = 6;
  const auto a = catalog_to_json(run_search(tripartite_template(1, 1, 2), one)).dump();
  const auto b = catalog_to_json(run_search(tripartite_template(1, 1, 2), many)).dump();
  EXPECT_EQ(a, b);
}

TEST(SearchTest, EntriesRecertify) {
  SearchOptions opts;
  opts.max_b = 2;
  const Json catalog = catalog_to_json(run_search(complete_template(), opts));
  ASSERT_FALSE(catalog["entries"].empty());
  for (const auto& e : catalog["entries"]) {
    EXPECT_EQ(report_to_json(recertify(e)).dump(), e.dump());
  }
}

TEST(SearchTest, Caps) {
  SearchOptions opts;
  opts.max_b = 5;
  EXPECT_THROW(run_search(complete_template(), opts), CapExceeded);
  opts.max_b = 4;
  EXPECT_THROW(run_search(tripartite_template(2, 2, 3), opts), CapExceeded);  // 7 * 4 vertices
}

TEST(TemplateJsonTest, RoundTripAndErrors) {
  const auto t = complete_template();
  const auto j = template_to_json(t);
  EXPECT_FALSE(j.contains("B"));
  EXPECT_EQ(template_from_json(Construction::kSemiReflexive, j).base, t.base);
  EXPECT_THROW(template_from_json(Construction::kSemiReflexive, Json::parse(R"({"U": [[1]], "X": [[0]], "B": [[1]]})")),
               SchemaError);
}

}  // namespace
}  // namespace cospec
