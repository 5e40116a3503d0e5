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

#include <span>
#include <vector>

#include "minbrace/graph.hpp"

namespace minbrace {

struct Matching {
  std::vector<EdgeId> edges;  // ascending id, pairwise disjoint
  bool perfect = false;
};

/// Hopcroft-Karp maximum matching. Among parallel edges the one with the
/// smallest id is reported.
Matching maximum_matching(const BipartiteGraph& g);

bool has_perfect_matching(const BipartiteGraph& g);

/// One flag per edge (in edges() order): true iff the edge lies in some
/// perfect matching. All false when g has no perfect matching.
std::vector<bool> allowed_edges(const BipartiteGraph& g);

/// Connected, balanced, and every edge lies in a perfect matching.
bool is_matching_covered(const BipartiteGraph& g);

/// Balanced, connected, matching covered, and 2-extendable. Order six and up
/// is decided by removing every pair of A-vertices together with every pair
/// of B-vertices and asking for a perfect matching of what is left; smaller
/// graphs are braces exactly when their underlying simple graph is K2 or C4.
bool is_brace(const BipartiteGraph& g);

/// |N(Z)| - |Z| for a nonempty Z inside one color class.
int surplus(const BipartiteGraph& g, std::span<const Vertex> z);

}  // namespace minbrace
