// Copyright 2026 The minbrace Authors
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

#include <algorithm>
#include <numeric>
#include <random>

#include "canon.hpp"
#include "minbrace/error.hpp"
#include "minbrace/families.hpp"
#include "minbrace/graph.hpp"
#include "minbrace/iso.hpp"
#include "oracles.hpp"

namespace minbrace {
namespace {

// Random relabelling inside each class, optionally swapping the classes.
BipartiteGraph shuffle(const BipartiteGraph& g, std::mt19937& rng, bool swap) {
  std::vector<std::uint32_t> pa(g.size_a()), pb(g.size_b());
  std::iota(pa.begin(), pa.end(), 0);
  std::iota(pb.begin(), pb.end(), 0);
  std::shuffle(pa.begin(), pa.end(), rng);
  std::shuffle(pb.begin(), pb.end(), rng);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const Edge& e : g.edges()) {
    if (swap) {
      edges.emplace_back(pb[e.b], pa[e.a]);
    } else {
      edges.emplace_back(pa[e.a], pb[e.b]);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return swap ? BipartiteGraph::build(g.size_b(), g.size_a(), edges)
              : BipartiteGraph::build(g.size_a(), g.size_b(), edges);
}

BipartiteGraph with_random_parallels(const BipartiteGraph& g,
                                     std::mt19937& rng) {
  BipartiteGraph out = g;
  for (const Edge& e : g.edges()) {
    if (rng() % 4 == 0) out = add_edge(out, e.a, e.b);
  }
  return out;
}

TEST(Canonical, InvariantUnderRelabellingAndSwap) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t na = 2 + rng() % 5;
    std::size_t nb = (trial % 2) ? na : 2 + rng() % 5;
    auto g = oracle::random_connected(rng, na, nb, 0.4);
    if (trial % 3 == 0) g = with_random_parallels(g, rng);
    auto form = canonical_form(g);
    for (bool swap : {false, true}) {
      auto h = shuffle(g, rng, swap);
      EXPECT_EQ(canonical_form(h), form) << serialize_graph(g);
    }
  }
}

TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937 rng(5);
  int same = 0, differ = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::size_t m = (trial % 4 == 0) ? n + 1 : n;
    auto g = oracle::random_connected(rng, n, m, 0.35);
    auto h = oracle::random_connected(rng, n, m, 0.35);
    if (g.size() != h.size()) h = shuffle(g, rng, n == m && trial % 2);
    bool expected = oracle::isomorphic(g, h);
    EXPECT_EQ(canonical_form(g) == canonical_form(h), expected)
        << serialize_graph(g) << serialize_graph(h);
    EXPECT_EQ(are_isomorphic(g, h), expected);
    (expected ? same : differ)++;
  }
  EXPECT_GT(same, 20);
  EXPECT_GT(differ, 20);
}

TEST(Canonical, MultigraphsAreDistinguishedByMultiplicity) {
  auto c4 = make({Family::kC4, 4});
  auto doubled = add_edge(c4, c4.edge(0).a, c4.edge(0).b);
  EXPECT_NE(canonical_form(c4), canonical_form(doubled));
  auto other = add_edge(c4, c4.edge(3).a, c4.edge(3).b);
  EXPECT_EQ(canonical_form(doubled), canonical_form(other));
}

TEST(Canonical, HexRoundTripAndGraphOf) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_connected(rng, 2 + rng() % 5, 2 + rng() % 5, 0.4);
    auto form = canonical_form(g);
    EXPECT_EQ(CanonicalForm::from_hex(form.hex()), form);
    auto back = graph_of(form);
    EXPECT_TRUE(oracle::isomorphic(back, g) ||
                oracle::isomorphic(shuffle(back, rng, true), g));
    EXPECT_EQ(canonical_form(back), form);
  }
}

TEST(Canonical, SmallerClassBecomesRows) {
  std::mt19937 rng(1);
  auto g = oracle::random_connected(rng, 5, 3, 0.5);
  auto form = canonical_form(g);
  EXPECT_EQ(form.rows(), 3u);
  EXPECT_EQ(form.cols(), 5u);
}

TEST(Canonical, DisconnectedRejectedButMatrixFormWorks) {
  std::pair<std::uint32_t, std::uint32_t> e[] = {{0, 0}, {1, 1}};
  auto g = BipartiteGraph::build(2, 2, e);
  EXPECT_THROW(canonical_form(g), Error);
  std::pair<std::uint32_t, std::uint32_t> f[] = {{0, 1}, {1, 0}};
  auto h = BipartiteGraph::build(2, 2, f);
  EXPECT_EQ(canonical_matrix_form(g), canonical_matrix_form(h));
}

TEST(Canonical, HexParsingRejectsGarbage) {
  EXPECT_THROW(CanonicalForm::from_hex("0g"), Error);
  EXPECT_THROW(CanonicalForm::from_hex("030"), Error);
}

TEST(Canonical, DenseAndGeneralPathsAgree) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 6;
    auto g = oracle::random_connected(rng, n, n, 0.45);
    auto cells = detail::dense_cells(g);
    EXPECT_EQ(detail::canonical_form_dense(n, n, cells.data()),
              canonical_form(g));
  }
}

TEST(Canonical, FamilyMembersAreNotConfused) {
  // B8 is the cube: prism and biwheel of order eight coincide.
  EXPECT_TRUE(are_isomorphic(make({Family::kPrism, 8}),
                             make({Family::kBiwheel, 8})));
  EXPECT_FALSE(are_isomorphic(make({Family::kM10, 10}),
                              make({Family::kQ10, 10})));
  EXPECT_FALSE(are_isomorphic(make({Family::kPrism, 16}),
                              make({Family::kBiwheel, 16})));
}

}  // namespace
}  // namespace minbrace
