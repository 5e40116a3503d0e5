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

#include <functional>
#include <optional>
#include <vector>

#include "minbrace/graph.hpp"
#include "minbrace/iso.hpp"

namespace minbrace {

/// Structural tight-cut test for a bipartite matching covered graph: X is
/// odd, its majority exceeds its minority by one, and no edge joins the two
/// minority parts.
bool is_tight_cut(const BipartiteGraph& g, const Shore& x);

/// Order in which candidate sets Z are scanned by the surplus search. The
/// default visits subsets of class A by increasing bitmask, then class B.
using SubsetOrder = std::function<void(std::vector<std::uint64_t>& masks)>;

/// Looks for a nonempty Z inside one class, 1 <= |Z| <= n - 2, with
/// |N(Z)| = |Z| + 1, and returns the tight shore Z + N(Z). Nothing is
/// returned exactly when g is a brace. Needs order six or more.
std::optional<Shore> find_nontrivial_tight_cut(const BipartiteGraph& g);
std::optional<Shore> find_nontrivial_tight_cut(const BipartiteGraph& g,
                                               const SubsetOrder& order);

struct DecompositionStep {
  Shore shore;
  std::size_t piece_order = 0;  // order of the graph that was cut
};

struct DecompositionResult {
  std::vector<BipartiteGraph> leaves;  // discovery order
  std::vector<DecompositionStep> trace;

  /// Canonical forms of the simple graphs underlying the leaves, sorted.
  std::vector<CanonicalForm> leaf_forms() const;
};

DecompositionResult tight_cut_decomposition(const BipartiteGraph& g);
DecompositionResult tight_cut_decomposition(const BipartiteGraph& g,
                                            const SubsetOrder& order);

/// The simple graph underlying g, keeping the smallest id of each bundle.
BipartiteGraph underlying_simple(const BipartiteGraph& g);

}  // namespace minbrace
