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

#include <random>
#include <set>

#include "minbrace/enumerate.hpp"
#include "minbrace/families.hpp"
#include "minbrace/matching.hpp"
#include "oracles.hpp"

namespace minbrace {
namespace {

const std::vector<BipartiteGraph>& small_graphs() {
  static const auto graphs = brute_force_graphs(8, 1);
  return graphs;
}

TEST(Matching, MaximumMatchingIsAMatching) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_connected(rng, 2 + rng() % 6, 2 + rng() % 6, 0.3);
    auto m = maximum_matching(g);
    std::set<std::uint32_t> as, bs;
    for (EdgeId id : m.edges) {
      EXPECT_TRUE(as.insert(g.edge(id).a).second);
      EXPECT_TRUE(bs.insert(g.edge(id).b).second);
    }
    EXPECT_TRUE(std::is_sorted(m.edges.begin(), m.edges.end()));
    EXPECT_EQ(m.perfect, g.balanced() && m.edges.size() == g.size_a());
  }
}

TEST(Matching, PerfectMatchingAgreesWithOracle) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto g = oracle::random_connected(rng, n, n, 0.2);
    EXPECT_EQ(has_perfect_matching(g), !oracle::perfect_matchings(g).empty())
        << serialize_graph(g);
  }
}

TEST(Matching, AllowedEdgesAgreeWithOracle) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 4;
    auto g = oracle::random_connected(rng, n, n, 0.35);
    std::set<EdgeId> covered;
    for (const auto& m : oracle::perfect_matchings(g)) {
      covered.insert(m.begin(), m.end());
    }
    auto allowed = allowed_edges(g);
    ASSERT_EQ(allowed.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(allowed[i], covered.count(g.edges()[i].id) > 0);
    }
  }
}

TEST(Matching, MatchingCoveredAgreesWithOracleOnAllSmallGraphs) {
  int covered = 0;
  for (const auto& g : small_graphs()) {
    bool expected = oracle::matching_covered(g);
    EXPECT_EQ(is_matching_covered(g), expected) << serialize_graph(g);
    covered += expected;
  }
  EXPECT_GT(covered, 10);
}

TEST(Matching, BraceAgreesWithOracleOnAllSmallGraphs) {
  int braces = 0;
  for (const auto& g : small_graphs()) {
    bool expected = oracle::brace(g);
    EXPECT_EQ(is_brace(g), expected) << serialize_graph(g);
    braces += expected;
  }
  // K2, C4, K3,3, and at order eight every simple brace.
  EXPECT_EQ(braces, 1 + 1 + 1 + 5);
}

TEST(Matching, BraceAgreesWithOracleOnMultigraphs) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 4;
    auto g = oracle::random_connected(rng, n, n, 0.6);
    for (const Edge& e : g.edges()) {
      if (rng() % 3 == 0) g = add_edge(g, e.a, e.b);
    }
    EXPECT_EQ(is_brace(g), oracle::brace(g)) << serialize_graph(g);
    EXPECT_EQ(is_matching_covered(g), oracle::matching_covered(g));
  }
}

TEST(Matching, BraceMatchesSurplusCharacterization) {
  // Order six and up: a brace is a connected balanced graph in which every
  // Z inside one class with 1 <= |Z| <= n - 2 has surplus at least two.
  for (const auto& g : small_graphs()) {
    if (g.order() < 6) continue;
    const std::uint32_t n = static_cast<std::uint32_t>(g.size_a());
    bool ok = true;
    for (Side side : {Side::A, Side::B}) {
      for (std::uint32_t mask = 1; mask < (1u << n) && ok; ++mask) {
        std::vector<Vertex> z;
        for (std::uint32_t i = 0; i < n; ++i) {
          if (mask >> i & 1u) z.push_back({side, i});
        }
        if (z.size() + 2 > n) continue;
        ok = surplus(g, z) >= 2;
      }
    }
    EXPECT_EQ(is_brace(g), ok) << serialize_graph(g);
  }
}

TEST(Matching, KnownGraphs) {
  EXPECT_TRUE(is_brace(make({Family::kK33, 6})));
  EXPECT_TRUE(is_brace(make({Family::kM10, 10})));
  auto q10 = make({Family::kQ10, 10});
  EXPECT_TRUE(is_matching_covered(q10));
  EXPECT_FALSE(is_brace(q10));
  std::pair<std::uint32_t, std::uint32_t> path[] = {{0, 0}, {1, 0}, {1, 1}};
  auto p4 = BipartiteGraph::build(2, 2, path);
  EXPECT_TRUE(has_perfect_matching(p4));
  EXPECT_FALSE(is_matching_covered(p4));
}

TEST(Matching, SurplusOfSingleVertexIsDegreeMinusOne) {
  auto g = make({Family::kBiwheel, 10});
  Vertex v[] = {vertex_a(4)};
  EXPECT_EQ(surplus(g, v), static_cast<int>(g.neighbors(v[0]).size()) - 1);
}

}  // namespace
}  // namespace minbrace
