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
#include <set>

#include "minbrace/edges.hpp"
#include "minbrace/enumerate.hpp"
#include "minbrace/error.hpp"
#include "minbrace/families.hpp"
#include "minbrace/iso.hpp"
#include "minbrace/matching.hpp"
#include "oracles.hpp"

namespace minbrace {
namespace {

const Corpus& corpus10() {
  static const Corpus c = generate_braces({10, false, 1, false});
  return c;
}

EdgeId find_id(const BipartiteGraph& g, std::uint32_t a, std::uint32_t b) {
  for (const Edge& e : g.edges()) {
    if (e.a == a && e.b == b) return e.id;
  }
  ADD_FAILURE() << "no edge " << a << " " << b;
  return 0;
}

TEST(EdgeLadder, AgreesWithDefinitionsOnCorpus) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < corpus10().size(); ++i) {
    auto g = corpus10().graph(i);
    if (g.order() < 6) continue;
    auto classes = classify_edges(g);
    ASSERT_EQ(classes.size(), g.size());
    for (const auto& c : classes) {
      auto minus = delete_edge(g, c.edge);
      auto h = retract(minus);
      const Edge& e = g.edge(c.edge);
      int cubic = (g.degree(vertex_a(e.a)) == 3) + (g.degree(vertex_b(e.b)) == 3);
      EXPECT_EQ(c.removable, oracle::matching_covered(minus));
      EXPECT_EQ(c.thin, oracle::brace(h));
      EXPECT_EQ(c.strictly_thin, oracle::brace(h) && h.is_simple());
      EXPECT_EQ(c.index, cubic);
      EXPECT_EQ(c.superfluous, oracle::brace(minus));
      // superfluous => strictly thin of index 0 => thin => removable
      EXPECT_TRUE(!c.superfluous || (c.strictly_thin && c.index == 0));
      EXPECT_TRUE(!c.strictly_thin || c.thin);
      EXPECT_TRUE(!c.thin || c.removable);
      EXPECT_EQ(c.removable, is_removable(g, c.edge));
      EXPECT_EQ(c.thin, is_thin(g, c.edge));
      EXPECT_EQ(c.strictly_thin, is_strictly_thin(g, c.edge));
      EXPECT_EQ(c.index, edge_index(g, c.edge));
      EXPECT_EQ(c.superfluous, is_superfluous(g, c.edge));
      ++checked;
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(EdgeLadder, K33EdgesAreThinButNotStrictlyThin) {
  auto k33 = make({Family::kK33, 6});
  for (const auto& c : classify_edges(k33)) {
    EXPECT_TRUE(c.removable);
    EXPECT_TRUE(c.thin);
    EXPECT_FALSE(c.strictly_thin);
    EXPECT_EQ(c.index, 2);
    EXPECT_FALSE(c.superfluous);
  }
}

TEST(EdgeLadder, B8EdgesAreThin) {
  for (const auto& c : classify_edges(make({Family::kBiwheel, 8}))) {
    EXPECT_TRUE(c.thin);
    EXPECT_FALSE(c.strictly_thin);
  }
}

TEST(EdgeLadder, B10EdgesAreRemovable) {
  for (const auto& c : classify_edges(make({Family::kBiwheel, 10}))) {
    EXPECT_TRUE(c.removable);
  }
}

TEST(EdgeLadder, C4EdgesAreNotRemovable) {
  auto c4 = make({Family::kC4, 4});
  for (const Edge& e : c4.edges()) EXPECT_FALSE(is_removable(c4, e.id));
}

TEST(EdgeLadder, McCuaigBracesHaveNoStrictlyThinEdge) {
  for (const auto& g : mccuaig_members(12)) {
    if (g.order() < 6) continue;
    for (const auto& c : classify_edges(g)) {
      EXPECT_FALSE(c.strictly_thin) << serialize_graph(g);
    }
  }
}

TEST(EdgeLadder, Q10PlusEdgeFromY0ToX1) {
  auto g = make({Family::kQ10Plus, 10});
  EdgeId e = find_id(g, 1, 0);
  EXPECT_TRUE(is_strictly_thin(g, e));
  EXPECT_EQ(edge_index(g, e), 1);
  EXPECT_FALSE(is_superfluous(g, e));
  EXPECT_TRUE(are_isomorphic(retract(delete_edge(g, e)),
                             make({Family::kB8Plus, 8})));
}

TEST(Superfluous, B8PlusHasExactlyOne) {
  auto g = make({Family::kB8Plus, 8});
  std::vector<EdgeId> found;
  for (const Edge& e : g.edges()) {
    if (is_superfluous(g, e.id)) found.push_back(e.id);
  }
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], g.next_edge_id() - 1);  // the added edge
  EXPECT_FALSE(non_superfluous_certificate(g, found[0]).has_value());
  EXPECT_FALSE(is_minimal_brace(g));
}

TEST(Superfluous, Q10PlusHasNone) {
  auto g = make({Family::kQ10Plus, 10});
  for (const Edge& e : g.edges()) EXPECT_FALSE(is_superfluous(g, e.id));
  EXPECT_TRUE(is_minimal_brace(g));
}

TEST(Superfluous, CubicBraceHasNone) {
  auto g = make({Family::kM10, 10});
  for (const Edge& e : g.edges()) {
    EXPECT_FALSE(is_superfluous(g, e.id));
    EXPECT_EQ(edge_index(g, e.id), 2);
  }
}

// A1, A2, B1, B2 partition the classes, |B1| = |A1| + 1, and e is the only
// edge from A1 to B2.
void expect_valid_certificate(const BipartiteGraph& g, EdgeId e,
                              const NonSuperfluousCertificate& c) {
  std::set<std::uint32_t> a(c.a1.begin(), c.a1.end());
  a.insert(c.a2.begin(), c.a2.end());
  std::set<std::uint32_t> b(c.b1.begin(), c.b1.end());
  b.insert(c.b2.begin(), c.b2.end());
  EXPECT_EQ(a.size(), g.size_a());
  EXPECT_EQ(c.a1.size() + c.a2.size(), g.size_a());
  EXPECT_EQ(b.size(), g.size_b());
  EXPECT_EQ(c.b1.size() + c.b2.size(), g.size_b());
  EXPECT_EQ(c.b1.size(), c.a1.size() + 1);
  std::vector<EdgeId> crossing;
  for (const Edge& x : g.edges()) {
    bool in_a1 = std::count(c.a1.begin(), c.a1.end(), x.a) > 0;
    bool in_b2 = std::count(c.b2.begin(), c.b2.end(), x.b) > 0;
    if (in_a1 && in_b2) crossing.push_back(x.id);
  }
  ASSERT_EQ(crossing.size(), 1u);
  EXPECT_EQ(crossing[0], e);
}

TEST(Superfluous, CertificatesOnCorpus) {
  for (std::size_t i = 0; i < corpus10().size(); ++i) {
    auto g = corpus10().graph(i);
    if (g.order() < 6) continue;
    for (const Edge& e : g.edges()) {
      auto c = non_superfluous_certificate(g, e.id);
      EXPECT_EQ(c.has_value(), !is_superfluous(g, e.id));
      if (c) expect_valid_certificate(g, e.id, *c);
    }
  }
}

TEST(Superfluous, Q10PlusCertificateShape) {
  auto g = make({Family::kQ10Plus, 10});
  EdgeId e = find_id(g, 1, 3);  // the edge added to Q10
  auto c = non_superfluous_certificate(g, e);
  ASSERT_TRUE(c.has_value());
  expect_valid_certificate(g, e, *c);
  EXPECT_EQ(c->a1.size(), 2u);
  EXPECT_EQ(c->b1.size(), 3u);
}

TEST(Superfluous, K33CertificateHasSingletonA1) {
  auto g = make({Family::kK33, 6});
  for (const Edge& e : g.edges()) {
    auto c = non_superfluous_certificate(g, e.id);
    ASSERT_TRUE(c.has_value());
    expect_valid_certificate(g, e.id, *c);
    EXPECT_EQ(c->a1.size(), 1u);
  }
}

TEST(Minimal, AgreesWithDefinitionOnCorpus) {
  for (std::size_t i = 0; i < corpus10().size(); ++i) {
    auto g = corpus10().graph(i);
    bool expected = true;
    if (g.order() >= 6) {
      for (const Edge& e : g.edges()) {
        if (oracle::brace(delete_edge(g, e.id))) expected = false;
      }
    }
    EXPECT_EQ(is_minimal_brace(g), expected) << serialize_graph(g);
  }
}

TEST(Minimal, KnownValues) {
  EXPECT_TRUE(is_minimal_brace(make({Family::kK2, 2})));
  EXPECT_TRUE(is_minimal_brace(make({Family::kC4, 4})));
  EXPECT_FALSE(is_minimal_brace(make({Family::kB8Plus, 8})));
  EXPECT_TRUE(is_minimal_brace(make({Family::kQ12, 12})));
  EXPECT_FALSE(is_minimal_brace(make({Family::kQ10, 10})));  // not a brace
  auto doubled = add_edge(make({Family::kK33, 6}), 0, 0);
  EXPECT_FALSE(is_minimal_brace(doubled));
}

TEST(EdgeLadder, PreconditionsAreChecked) {
  auto c4 = make({Family::kC4, 4});
  EXPECT_THROW(classify_edges(c4), Error);
  EXPECT_THROW(is_thin(make({Family::kQ10, 10}), 0), Error);
  EXPECT_THROW(is_thin(make({Family::kK33, 6}), 99), Error);
}

TEST(EdgeLadder, NoncubicVertices) {
  auto g = make({Family::kQ10Plus, 10});
  auto v = noncubic_vertices(g);
  std::vector<Vertex> expected = {vertex_a(1), vertex_b(3)};
  EXPECT_EQ(v, expected);
}

}  // namespace
}  // namespace minbrace
