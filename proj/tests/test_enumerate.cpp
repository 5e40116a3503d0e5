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

#include <functional>
#include <map>
#include <set>

#include "minbrace/edges.hpp"
#include "minbrace/enumerate.hpp"
#include "minbrace/error.hpp"
#include "minbrace/expand.hpp"
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

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(Generate, CountsPerOrder) {
  std::map<std::size_t, std::size_t> count;
  for (const auto& r : corpus10().records()) ++count[r.order];
  std::map<std::size_t, std::size_t> expected = {
      {2, 1}, {4, 1}, {6, 1}, {8, 5}, {10, 53}};
  EXPECT_EQ(count, expected);
}

TEST(Generate, MatchesBruteForceUpToEight) {
  std::set<CanonicalForm> oracle_braces;
  for (const auto& g : brute_force_graphs(8, 1)) {
    if (oracle::brace(g)) oracle_braces.insert(canonical_form(g));
  }
  std::set<CanonicalForm> generated;
  for (const auto& r : corpus10().records()) {
    if (r.order <= 8) generated.insert(r.form);
  }
  EXPECT_EQ(generated, oracle_braces);
}

TEST(Generate, RecordsAreSortedSimpleBraces) {
  const auto& records = corpus10().records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i > 0) {
      const auto& p = records[i - 1];
      EXPECT_TRUE(p.order < r.order || (p.order == r.order && p.form < r.form));
    }
    auto g = corpus10().graph(i);
    EXPECT_EQ(g.order(), r.order);
    EXPECT_EQ(g.size(), r.size);
    EXPECT_TRUE(g.is_simple());
    EXPECT_TRUE(is_brace(g));
    EXPECT_EQ(corpus10().find(r.form), std::optional<std::size_t>(i));
  }
}

TEST(Generate, ProvenanceIsAnExpansionOfTheParent) {
  const auto& records = corpus10().records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.origin == Origin::kSeed) {
      EXPECT_FALSE(r.parent.has_value());
      EXPECT_TRUE(is_mccuaig(corpus10().graph(i)));
      continue;
    }
    ASSERT_TRUE(r.parent.has_value());
    ASSERT_NE(*r.parent, i);
    std::size_t steps = 0;
    for (auto k = r.parent; k; k = records[*k].parent) {
      ASSERT_LT(++steps, records.size()) << "provenance cycle";
    }
    int index = r.origin == Origin::kIndexZero  ? 0
                : r.origin == Origin::kIndexOne ? 1
                                                : 2;
    const auto& p = records[*r.parent];
    EXPECT_EQ(r.order, p.order + 2 * static_cast<std::size_t>(index));
    bool found = false;
    for_each_expansion(corpus10().graph(*r.parent), r.order,
                       1u << index, [&](const Expansion& x) {
                         if (!found && x.graph.is_simple() &&
                             canonical_form(x.graph) == r.form) {
                           found = true;
                         }
                       });
    EXPECT_TRUE(found) << r.form.hex();
  }
}

TEST(Generate, OutputDoesNotDependOnWorkers) {
  auto one = generate_braces({10, false, 1, false});
  auto three = generate_braces({10, false, 3, false});
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].form, three[i].form);
    EXPECT_EQ(one[i].origin, three[i].origin);
    EXPECT_EQ(one[i].parent, three[i].parent);
  }
}

TEST(Generate, InvariantCheckingMode) {
  auto c = generate_braces({8, false, 2, true});
  EXPECT_EQ(c.size(), 8u);
}

TEST(Generate, Guardrails) {
  EXPECT_EQ(code_of([] { generate_braces({9, false, 1, false}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { generate_braces({16, false, 1, false}); }),
            ErrorCode::kGuardrail);
  EXPECT_EQ(code_of([] { generate_braces({18, false, 1, false}); }),
            ErrorCode::kGuardrail);
  EXPECT_EQ(code_of([] { brute_force_graphs(12, 3); }), ErrorCode::kGuardrail);
}

TEST(Corpus, Lookup) {
  const auto& c = corpus10();
  EXPECT_EQ(c.max_order(), 10u);
  EXPECT_EQ(c.of_order(8).size(), 5u);
  auto k33 = c.find(canonical_form(make({Family::kK33, 6})));
  ASSERT_TRUE(k33.has_value());
  EXPECT_EQ(c[*k33].order, 6u);
  EXPECT_FALSE(c.find(canonical_form(make_q10())).has_value());
  EXPECT_EQ(origin_name(Origin::kIndexTwo), "index2");
}

TEST(BruteForce, SortedDistinctAndFiltered) {
  auto graphs = brute_force_graphs(8, 3);
  std::set<CanonicalForm> seen;
  std::size_t prev = 0;
  for (const auto& g : graphs) {
    EXPECT_TRUE(g.is_connected());
    EXPECT_TRUE(g.is_simple());
    EXPECT_TRUE(g.balanced());
    for (Vertex v : g.vertices()) EXPECT_GE(g.degree(v), 3u);
    EXPECT_TRUE(seen.insert(canonical_form(g)).second);
    EXPECT_GE(g.order(), prev);
    prev = g.order();
  }
}

TEST(BruteForce, ConnectedCountsAtSmallOrders) {
  // Connected balanced bipartite graphs up to isomorphism and class swap.
  std::map<std::size_t, std::size_t> count;
  for (const auto& g : brute_force_graphs(6, 1)) ++count[g.order()];
  EXPECT_EQ(count[2], 1u);
  EXPECT_EQ(count[4], 2u);  // P4 and C4
}

TEST(Minimal, CountsPerOrder) {
  auto corpus = generate_braces({12, false, 1, false});
  std::map<std::size_t, std::size_t> count;
  for (std::size_t i : minimal_braces(corpus, 12)) ++count[corpus[i].order];
  std::map<std::size_t, std::size_t> expected = {
      {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 3}, {12, 9}};
  EXPECT_EQ(count, expected);
  auto parallel = minimal_braces(corpus, 12, 3);
  EXPECT_EQ(parallel, minimal_braces(corpus, 12));
}

TEST(Verify, HarnessPassesAtTwelve) {
  auto corpus = generate_braces({12, false, 1, false});
  auto report = verify_all(corpus, 12);
  for (const auto& item : report.items) {
    EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
  }
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.items.size(), 7u);
}

}  // namespace
}  // namespace minbrace
