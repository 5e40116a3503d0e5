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

#include <optional>
#include <vector>

#include "minbrace/graph.hpp"

namespace minbrace {

// Edge classification in braces:
//   superfluous  => strictly thin of index 0
//   strictly thin => thin => removable

bool is_removable(const BipartiteGraph& g, EdgeId e);

/// retract(G - e) is a brace. G must be a brace of order six or more.
bool is_thin(const BipartiteGraph& g, EdgeId e);

/// retract(G - e) is a simple brace. G must be a simple brace of order six
/// or more.
bool is_strictly_thin(const BipartiteGraph& g, EdgeId e);

/// Number of cubic ends of e.
int edge_index(const BipartiteGraph& g, EdgeId e);

/// G - e is a brace. G must be a simple brace.
bool is_superfluous(const BipartiteGraph& g, EdgeId e);

struct EdgeClassification {
  EdgeId edge = 0;
  bool removable = false;
  bool thin = false;
  bool strictly_thin = false;
  int index = 0;
  bool superfluous = false;
};

/// Full ladder for every edge, ascending id. G must be a simple brace of
/// order six or more.
std::vector<EdgeClassification> classify_edges(const BipartiteGraph& g);

/// Partitions (A1, A2) of A and (B1, B2) of B with |B1| = |A1| + 1 such that
/// e is the only edge from A1 to B2.
struct NonSuperfluousCertificate {
  std::vector<std::uint32_t> a1, a2, b1, b2;
};

/// Empty when e is superfluous. G must be a simple brace of order six or
/// more.
std::optional<NonSuperfluousCertificate> non_superfluous_certificate(
    const BipartiteGraph& g, EdgeId e);

/// Brace, simple, and no edge is superfluous. Only edges joining two
/// noncubic vertices are tested, since no other edge can be superfluous.
bool is_minimal_brace(const BipartiteGraph& g);

/// Noncubic vertices, ascending.
std::vector<Vertex> noncubic_vertices(const BipartiteGraph& g);

}  // namespace minbrace
