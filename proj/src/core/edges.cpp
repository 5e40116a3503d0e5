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

#include "minbrace/edges.hpp"

#include "minbrace/cuts.hpp"
#include "minbrace/error.hpp"
#include "minbrace/matching.hpp"

namespace minbrace {

namespace {

void require_brace(const BipartiteGraph& g, bool simple, const char* op) {
  if (g.order() < 6 || !is_brace(g) || (simple && !g.is_simple())) {
    fail(ErrorCode::kPrecondition,
         std::string(op) + " needs a " + (simple ? "simple " : "") +
             "brace of order six or more");
  }
}

bool noncubic(const BipartiteGraph& g, Vertex v) { return g.degree(v) >= 4; }

}  // namespace

bool is_removable(const BipartiteGraph& g, EdgeId e) {
  return is_matching_covered(delete_edge(g, e));
}

bool is_thin(const BipartiteGraph& g, EdgeId e) {
  require_brace(g, false, "is_thin");
  return is_brace(retract(delete_edge(g, e)));
}

bool is_strictly_thin(const BipartiteGraph& g, EdgeId e) {
  require_brace(g, true, "is_strictly_thin");
  auto h = retract(delete_edge(g, e));
  return h.is_simple() && is_brace(h);
}

int edge_index(const BipartiteGraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return (g.degree(vertex_a(edge.a)) == 3) + (g.degree(vertex_b(edge.b)) == 3);
}

bool is_superfluous(const BipartiteGraph& g, EdgeId e) {
  g.edge(e);
  if (!g.is_simple() || !is_brace(g)) {
    fail(ErrorCode::kPrecondition, "is_superfluous needs a simple brace");
  }
  return is_brace(delete_edge(g, e));
}

std::vector<EdgeClassification> classify_edges(const BipartiteGraph& g) {
  require_brace(g, true, "classify_edges");
  std::vector<EdgeClassification> out;
  for (const Edge& edge : g.edges()) {
    EdgeClassification c;
    c.edge = edge.id;
    auto minus = delete_edge(g, edge.id);
    c.removable = is_matching_covered(minus);
    auto h = retract(minus);
    c.thin = c.removable && is_brace(h);
    c.strictly_thin = c.thin && h.is_simple();
    c.index = edge_index(g, edge.id);
    c.superfluous = is_brace(minus);
    out.push_back(c);
  }
  return out;
}

std::optional<NonSuperfluousCertificate> non_superfluous_certificate(
    const BipartiteGraph& g, EdgeId e) {
  require_brace(g, true, "non_superfluous_certificate");
  auto minus = delete_edge(g, e);
  if (!is_matching_covered(minus)) {
    // Cannot happen in a brace of order six or more, where every edge is
    // removable.
    fail(ErrorCode::kPrecondition, "G - e is not matching covered");
  }
  auto shore = find_nontrivial_tight_cut(minus);
  if (!shore) return std::nullopt;
  Side minority = opposite(*shore->majority_side());
  NonSuperfluousCertificate cert;
  auto split = [&](Side s, std::vector<std::uint32_t>& in,
                   std::vector<std::uint32_t>& out) {
    for (std::uint32_t i = 0; i < g.class_size(s); ++i) {
      (shore->contains({s, i}) ? in : out).push_back(i);
    }
  };
  if (minority == Side::A) {
    // Z inside A: A1 = Z and B1 = N(Z).
    split(Side::A, cert.a1, cert.a2);
    split(Side::B, cert.b1, cert.b2);
  } else {
    // Z inside B: B2 = Z, A2 = N(Z), and the complements form A1 and B1.
    split(Side::A, cert.a2, cert.a1);
    split(Side::B, cert.b2, cert.b1);
  }
  return cert;
}

bool is_minimal_brace(const BipartiteGraph& g) {
  if (!g.is_simple() || !is_brace(g)) return false;
  if (g.order() <= 4) return true;
  for (const Edge& edge : g.edges()) {
    if (noncubic(g, vertex_a(edge.a)) && noncubic(g, vertex_b(edge.b)) &&
        is_brace(delete_edge(g, edge.id))) {
      return false;
    }
  }
  return true;
}

std::vector<Vertex> noncubic_vertices(const BipartiteGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (noncubic(g, v)) out.push_back(v);
  }
  return out;
}

}  // namespace minbrace
