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

#include "minbrace/edges.hpp"
#include "minbrace/error.hpp"
#include "minbrace/families.hpp"
#include "minbrace/iso.hpp"
#include "minbrace/matching.hpp"

namespace minbrace {
namespace {

TEST(Families, BiwheelSizes) {
  for (std::size_t n = 4; n <= 8; ++n) {
    auto g = make_biwheel(2 * n);
    EXPECT_EQ(g.size(), 4 * n - 4);
    EXPECT_TRUE(g.is_simple());
    EXPECT_TRUE(is_brace(g));
    EXPECT_TRUE(is_minimal_brace(g));
  }
}

TEST(Families, LadderSizesAreCubic) {
  for (std::size_t n : {4u, 6u, 8u}) {
    auto g = make_prism(2 * n);
    EXPECT_EQ(g.size(), 3 * n);
    EXPECT_TRUE(g.is_cubic());
    EXPECT_TRUE(is_brace(g));
  }
  for (std::size_t n : {3u, 5u, 7u}) {
    auto g = make_moebius(2 * n);
    EXPECT_EQ(g.size(), 3 * n);
    EXPECT_TRUE(g.is_cubic());
    EXPECT_TRUE(is_brace(g));
  }
}

TEST(Families, QSizesAndMinimality) {
  for (std::size_t n = 6; n <= 9; ++n) {
    auto q = make_q(2 * n);
    EXPECT_EQ(q.order(), 2 * n);
    EXPECT_EQ(q.size(), 5 * n - 10);
    EXPECT_TRUE(q.is_simple());
    EXPECT_TRUE(is_minimal_brace(q));
    EXPECT_FALSE(is_mccuaig(q));
  }
  EXPECT_TRUE(are_isomorphic(make_q(12), make({Family::kQ12, 12})));
}

TEST(Families, SmallGraphs) {
  EXPECT_EQ(make({Family::kK2, 2}).size(), 1u);
  EXPECT_EQ(make({Family::kC4, 4}).size(), 4u);
  EXPECT_EQ(make({Family::kK33, 6}).size(), 9u);
  EXPECT_TRUE(are_isomorphic(make({Family::kK33, 6}), make_moebius(6)));
  EXPECT_TRUE(are_isomorphic(make_prism(8), make_biwheel(8)));
  EXPECT_TRUE(are_isomorphic(make({Family::kB12, 12}), make_biwheel(12)));
  EXPECT_TRUE(are_isomorphic(make({Family::kM10, 10}), make_moebius(10)));
}

TEST(Families, Q10AndItsPlus) {
  auto q10 = make_q10();
  EXPECT_TRUE(q10.is_cubic());
  EXPECT_EQ(q10.size(), 15u);
  EXPECT_FALSE(is_brace(q10));
  auto plus = make_q10_plus();
  EXPECT_EQ(plus.size(), 16u);
  EXPECT_TRUE(is_minimal_brace(plus));
  EXPECT_FALSE(is_mccuaig(plus));
}

TEST(Families, B8PlusIsBraceButNotMinimal) {
  auto g = make_b8_plus();
  EXPECT_EQ(g.size(), 13u);
  EXPECT_TRUE(is_brace(g));
  EXPECT_FALSE(is_minimal_brace(g));
}

TEST(Families, ParameterChecks) {
  EXPECT_THROW(make_biwheel(6), Error);
  EXPECT_THROW(make_biwheel(9), Error);
  EXPECT_THROW(make_prism(10), Error);
  EXPECT_THROW(make_moebius(8), Error);
  EXPECT_THROW(make_q(10), Error);
}

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::kK2, Family::kC4, Family::kK33, Family::kB8Plus,
                   Family::kM10, Family::kQ10, Family::kQ10Plus, Family::kQ12,
                   Family::kB12, Family::kBiwheel, Family::kPrism,
                   Family::kMoebius, Family::kQ}) {
    auto parsed = parse_family(family_name(f));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, f);
  }
  EXPECT_FALSE(parse_family("Petersen").has_value());
  EXPECT_TRUE(is_parameterized(Family::kQ));
  EXPECT_FALSE(is_parameterized(Family::kM10));
}

TEST(McCuaig, MembersUpToTwelve) {
  // K2, C4, K3,3, B8, B10, M10, B12, P12.
  auto members = mccuaig_members(12);
  EXPECT_EQ(members.size(), 8u);
  for (const auto& g : members) {
    EXPECT_TRUE(is_mccuaig(g));
    EXPECT_TRUE(is_minimal_brace(g));
  }
  EXPECT_EQ(mccuaig_members(14).size(), 10u);  // adds B14 and M14
}

TEST(McCuaig, Membership) {
  EXPECT_TRUE(is_mccuaig(make_prism(16)));
  EXPECT_TRUE(is_mccuaig(make_moebius(14)));
  EXPECT_FALSE(is_mccuaig(make_q(14)));
  EXPECT_FALSE(is_mccuaig(make_b8_plus()));
  EXPECT_FALSE(is_mccuaig(add_edge(make({Family::kC4, 4}), 0, 0)));
}

}  // namespace
}  // namespace minbrace
