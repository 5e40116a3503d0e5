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

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "minbrace/graph.hpp"

namespace minbrace {

/// A partition of the edges at a vertex into two sides of two or more.
struct EdgeSplit {
  std::vector<EdgeId> first;
  std::vector<EdgeId> second;
};

/// Every unordered split of the edges at v. The side holding the smallest
/// edge id is always `first`, so mirror images appear once.
std::vector<EdgeSplit> legal_splits(const BipartiteGraph& g, Vertex v);

struct Expansion {
  BipartiteGraph graph;
  EdgeId edge = 0;  // the edge joining the new structure
  int index = 0;
};

/// H + ab. H must be a simple brace; a and b nonadjacent.
Expansion expand_index_zero(const BipartiteGraph& h, Vertex a, Vertex b);

/// Splits a into a1 (original position), a2 (appended) and the middle
/// vertex b0, then joins b0 to w. a and w lie in one class, a noncubic.
Expansion expand_index_one(const BipartiteGraph& h, Vertex a, Vertex w,
                           const EdgeSplit& split);

/// Splits a (middle b0) and b (middle a0) and joins a0 to b0.
Expansion expand_index_two(const BipartiteGraph& h, Vertex a, Vertex b,
                           const EdgeSplit& split_a, const EdgeSplit& split_b);

/// Adds a0 (last in A) and b0 (last in B) with edges a0b1, a0b2, b0a1, b0a2
/// and a0b0. S must be stable with two vertices in each class.
BipartiteGraph stable_extension(const BipartiteGraph& j,
                                std::span<const Vertex> s);

/// Stable sets {a1, a2, b1, b2} meeting each class twice, as
/// (a1, a2, b1, b2) with a1 < a2 and b1 < b2, in lexicographic order.
std::vector<std::array<Vertex, 4>> stable_quadruples(const BipartiteGraph& g);

constexpr std::size_t kNoOrderCap = std::numeric_limits<std::size_t>::max();

/// Calls visit for every single expansion of H of order at most max_order,
/// in a fixed order: index zero, then one, then two. Nothing is deduplicated
/// or checked; H must be a simple brace.
void for_each_expansion(const BipartiteGraph& h, std::size_t max_order,
                        const std::function<void(const Expansion&)>& visit);

/// Bit i of `indices` enables expansions of index i.
void for_each_expansion(const BipartiteGraph& h, std::size_t max_order,
                        unsigned indices,
                        const std::function<void(const Expansion&)>& visit);

/// All single expansions of H, deduplicated by canonical form and sorted by
/// it.
std::vector<BipartiteGraph> all_expansions(const BipartiteGraph& h,
                                           std::size_t max_order = kNoOrderCap);

struct MppCertificate {
  EdgeId e = 0;
  int index = 0;
  std::vector<EdgeId> f;  // ids shared by G, retract(G - e) and J
  BipartiteGraph j;       // retract(G - e) - F
  /// One outer vertex for index one, two adjacent ones for index two; empty
  /// when F is.
  std::vector<Vertex> witness;
  bool stable_ext = false;
};

/// Narrow minimality-preserving pair for a minimal brace outside the
/// McCuaig family. Strictly thin edges of index one come first, then index
/// two, each by ascending id; F deletes superfluous edges of retract(G - e)
/// by ascending id, rescanning after each deletion.
MppCertificate find_mpp(const BipartiteGraph& g);

/// Same search for one given strictly thin edge; skips the minimality and
/// family checks on G.
MppCertificate mpp_for_edge(const BipartiteGraph& g, EdgeId e);

enum class NarrowCheck {
  kOk,
  kMalformed,
  kNotStrictlyThin,
  kIndexMismatch,
  kNotMinimal,
  kJMismatch,
  kTooManyDeleted,
  kNotLocal,
  kCubicity,
  kNotStableExtension,
  kArithmetic,
};

std::string_view to_string(NarrowCheck c);

/// Re-derives every claim of the certificate from G.
NarrowCheck verify_narrow(const BipartiteGraph& g, const MppCertificate& cert);

}  // namespace minbrace
