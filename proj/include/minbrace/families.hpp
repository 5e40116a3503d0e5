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

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "minbrace/graph.hpp"

namespace minbrace {

enum class Family {
  kK2,
  kC4,
  kK33,
  kB8Plus,
  kM10,
  kQ10,
  kQ10Plus,
  kQ12,
  kB12,
  kBiwheel,
  kPrism,
  kMoebius,
  kQ,
};

struct FamilySpec {
  Family family = Family::kK2;
  std::size_t order = 0;  // total vertex count; used by the four ladders
};

std::string_view family_name(Family f);
/// Accepts the names family_name produces.
std::optional<Family> parse_family(std::string_view name);
bool is_parameterized(Family f);

/// Ladder parameters, with order = 2n:
///   biwheel  n >= 4
///   prism    n even, n >= 4
///   moebius  n odd, n >= 3
///   Q        n >= 6
BipartiteGraph make(const FamilySpec& spec);

BipartiteGraph make_biwheel(std::size_t order);
BipartiteGraph make_prism(std::size_t order);
BipartiteGraph make_moebius(std::size_t order);
BipartiteGraph make_q(std::size_t order);

/// The noncubic-joining edge of B8 added to form B8+ joins the two hubs,
/// A3 and B3. Q10+ adds x1 y3 to Q10.
BipartiteGraph make_b8_plus();
BipartiteGraph make_q10();
BipartiteGraph make_q10_plus();

/// Members of the McCuaig family (K2, C4, prisms, Moebius ladders and
/// biwheels) of order at most max_order, ascending by order.
std::vector<BipartiteGraph> mccuaig_members(std::size_t max_order);

/// Isomorphic to K2, C4, or a prism, Moebius ladder or biwheel of its order.
bool is_mccuaig(const BipartiteGraph& g);

}  // namespace minbrace
