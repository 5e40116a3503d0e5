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

#include "minbrace/expand.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "minbrace/edges.hpp"
#include "minbrace/error.hpp"
#include "minbrace/families.hpp"
#include "minbrace/iso.hpp"
#include "minbrace/matching.hpp"

namespace minbrace {

namespace {

void require_simple_brace(const BipartiteGraph& h, const char* op) {
  if (!h.is_simple() || !is_brace(h)) {
    fail(ErrorCode::kPrecondition, std::string(op) + " needs a simple brace");
  }
}

void require_vertex(const BipartiteGraph& h, Vertex v) {
  if (!h.contains(v)) {
    fail(ErrorCode::kInvalidArgument, "no vertex " + to_string(v));
  }
}

void require_noncubic(const BipartiteGraph& h, Vertex v) {
  if (h.degree(v) < 4) {
    fail(ErrorCode::kInvalidArgument,
         "expansion needs a noncubic vertex, " + to_string(v) + " has degree " +
             std::to_string(h.degree(v)));
  }
}

Expansion join(const BipartiteGraph& g, Vertex u, Vertex v, int index) {
  Expansion out;
  out.edge = g.next_edge_id();
  out.graph = add_edge(g, u, v);
  out.index = index;
  return out;
}

Expansion index_one_unchecked(const BipartiteGraph& h, Vertex a, Vertex w,
                              const EdgeSplit& split) {
  auto s = bi_split(h, a, split.first, split.second);
  return join(s.graph, s.middle, w, 1);
}

Expansion index_two_unchecked(const BipartiteGraph& h, Vertex a, Vertex b,
                              const EdgeSplit& split_a,
                              const EdgeSplit& split_b) {
  auto sa = bi_split(h, a, split_a.first, split_a.second);
  auto sb = bi_split(sa.graph, b, split_b.first, split_b.second);
  return join(sb.graph, sb.middle, sa.middle, 2);
}

void require_simple_result(const Expansion& x) {
  if (!x.graph.is_simple()) {
    fail(ErrorCode::kPrecondition, "expansion result is not simple");
  }
}

std::vector<Vertex> outer_vertices(const BipartiteGraph& minus) {
  std::vector<Vertex> out;
  for (Vertex v : minus.vertices()) {
    if (minus.degree(v) != 2) continue;
    for (EdgeId id : minus.incident(v)) out.push_back(minus.edge(id).other(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool incident_to(const Edge& f, Vertex v) { return f.touches(v); }

// Every member of F has an end in {u, w}. The edge uw itself qualifies: a
// superfluous edge may join the two outer vertices.
bool meets_pair(const Edge& f, Vertex u, Vertex w) {
  return f.touches(u) || f.touches(w);
}

bool vertices_adjacent(const BipartiteGraph& g, Vertex u, Vertex w) {
  if (u.side == w.side) return false;
  Vertex a = u.side == Side::A ? u : w;
  Vertex b = u.side == Side::A ? w : u;
  return g.adjacent(a.index, b.index);
}

bool witness_holds(const BipartiteGraph& minus, std::span<const Vertex> outer,
                   int index, std::span<const Edge> f,
                   std::span<const Vertex> witness) {
  auto is_outer = [&](Vertex v) {
    return std::find(outer.begin(), outer.end(), v) != outer.end();
  };
  if (index == 1) {
    if (witness.size() != 1 || !is_outer(witness[0])) return false;
    return std::all_of(f.begin(), f.end(), [&](const Edge& x) {
      return incident_to(x, witness[0]);
    });
  }
  if (witness.size() != 2 || !is_outer(witness[0]) || !is_outer(witness[1]) ||
      !vertices_adjacent(minus, witness[0], witness[1])) {
    return false;
  }
  return std::all_of(f.begin(), f.end(), [&](const Edge& x) {
    return meets_pair(x, witness[0], witness[1]);
  });
}

std::vector<Vertex> find_witness(const BipartiteGraph& minus, int index,
                                 std::span<const Edge> f) {
  auto outer = outer_vertices(minus);
  if (index == 1) {
    for (Vertex v : outer) {
      Vertex one[] = {v};
      if (witness_holds(minus, outer, 1, f, one)) return {v};
    }
    return {};
  }
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (std::size_t k = i + 1; k < outer.size(); ++k) {
      Vertex two[] = {outer[i], outer[k]};
      if (witness_holds(minus, outer, 2, f, two)) return {outer[i], outer[k]};
    }
  }
  return {};
}

bool is_some_stable_extension(const BipartiteGraph& g,
                              const BipartiteGraph& j) {
  if (g.order() != j.order() + 2 || g.size() != j.size() + 5) return false;
  auto target = canonical_form(g);
  for (const auto& s : stable_quadruples(j)) {
    if (canonical_form(stable_extension(j, s)) == target) return true;
  }
  return false;
}

std::vector<Edge> edges_of(const BipartiteGraph& g, std::span<const EdgeId> ids) {
  std::vector<Edge> out;
  for (EdgeId id : ids) out.push_back(g.edge(id));
  return out;
}

}  // namespace

std::vector<EdgeSplit> legal_splits(const BipartiteGraph& g, Vertex v) {
  require_vertex(g, v);
  std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
  std::sort(inc.begin(), inc.end());
  const std::size_t d = inc.size();
  std::vector<EdgeSplit> out;
  if (d < 4) return out;
  // Bit 0 (the smallest id) always sits in `first`.
  for (std::uint32_t mask = 1; mask < (1u << d); mask += 2) {
    std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    if (k < 2 || d - k < 2) continue;
    EdgeSplit s;
    for (std::size_t i = 0; i < d; ++i) {
      ((mask >> i) & 1u ? s.first : s.second).push_back(inc[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Expansion expand_index_zero(const BipartiteGraph& h, Vertex a, Vertex b) {
  require_vertex(h, a);
  require_vertex(h, b);
  if (a.side == b.side) {
    fail(ErrorCode::kInvalidArgument, "index zero expansion needs vertices in "
                                      "opposite classes");
  }
  if (vertices_adjacent(h, a, b)) {
    fail(ErrorCode::kInvalidArgument,
         to_string(a) + " and " + to_string(b) + " are already adjacent");
  }
  require_simple_brace(h, "expand_index_zero");
  auto out = join(h, a, b, 0);
  require_simple_result(out);
  return out;
}

Expansion expand_index_one(const BipartiteGraph& h, Vertex a, Vertex w,
                           const EdgeSplit& split) {
  require_vertex(h, a);
  require_vertex(h, w);
  if (a.side != w.side) {
    fail(ErrorCode::kInvalidArgument,
         "index one expansion needs a and w in the same class");
  }
  if (a == w) {
    fail(ErrorCode::kInvalidArgument, "index one expansion needs w != a");
  }
  require_noncubic(h, a);
  require_simple_brace(h, "expand_index_one");
  auto out = index_one_unchecked(h, a, w, split);
  require_simple_result(out);
  return out;
}

Expansion expand_index_two(const BipartiteGraph& h, Vertex a, Vertex b,
                           const EdgeSplit& split_a, const EdgeSplit& split_b) {
  require_vertex(h, a);
  require_vertex(h, b);
  if (a.side == b.side) {
    fail(ErrorCode::kInvalidArgument,
         "index two expansion needs vertices in opposite classes");
  }
  require_noncubic(h, a);
  require_noncubic(h, b);
  require_simple_brace(h, "expand_index_two");
  auto out = index_two_unchecked(h, a, b, split_a, split_b);
  require_simple_result(out);
  return out;
}

BipartiteGraph stable_extension(const BipartiteGraph& j,
                                std::span<const Vertex> s) {
  if (s.size() != 4) {
    fail(ErrorCode::kInvalidArgument, "stable extension needs four vertices");
  }
  std::vector<std::uint32_t> as, bs;
  for (Vertex v : s) {
    require_vertex(j, v);
    (v.side == Side::A ? as : bs).push_back(v.index);
  }
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  if (as.size() != 2 || bs.size() != 2 || as[0] == as[1] || bs[0] == bs[1]) {
    fail(ErrorCode::kInvalidArgument,
         "stable extension needs two distinct vertices in each class");
  }
  for (auto a : as) {
    for (auto b : bs) {
      if (j.adjacent(a, b)) {
        fail(ErrorCode::kInvalidArgument, "the four vertices are not stable");
      }
    }
  }
  const auto a0 = static_cast<std::uint32_t>(j.size_a());
  const auto b0 = static_cast<std::uint32_t>(j.size_b());
  std::vector<Edge> edges(j.edges().begin(), j.edges().end());
  EdgeId id = j.next_edge_id();
  edges.push_back({id++, a0, bs[0]});
  edges.push_back({id++, a0, bs[1]});
  edges.push_back({id++, as[0], b0});
  edges.push_back({id++, as[1], b0});
  edges.push_back({id++, a0, b0});
  return BipartiteGraph::from_edges(j.size_a() + 1, j.size_b() + 1,
                                    std::move(edges));
}

std::vector<std::array<Vertex, 4>> stable_quadruples(const BipartiteGraph& g) {
  std::vector<std::array<Vertex, 4>> out;
  const auto na = static_cast<std::uint32_t>(g.size_a());
  const auto nb = static_cast<std::uint32_t>(g.size_b());
  for (std::uint32_t a1 = 0; a1 < na; ++a1) {
    for (std::uint32_t a2 = a1 + 1; a2 < na; ++a2) {
      for (std::uint32_t b1 = 0; b1 < nb; ++b1) {
        if (g.adjacent(a1, b1) || g.adjacent(a2, b1)) continue;
        for (std::uint32_t b2 = b1 + 1; b2 < nb; ++b2) {
          if (g.adjacent(a1, b2) || g.adjacent(a2, b2)) continue;
          out.push_back({vertex_a(a1), vertex_a(a2), vertex_b(b1),
                         vertex_b(b2)});
        }
      }
    }
  }
  return out;
}

void for_each_expansion(const BipartiteGraph& h, std::size_t max_order,
                        const std::function<void(const Expansion&)>& visit) {
  for_each_expansion(h, max_order, 7u, visit);
}

void for_each_expansion(const BipartiteGraph& h, std::size_t max_order,
                        unsigned indices,
                        const std::function<void(const Expansion&)>& visit) {
  const auto na = static_cast<std::uint32_t>(h.size_a());
  const auto nb = static_cast<std::uint32_t>(h.size_b());
  if ((indices & 1u) && h.order() <= max_order) {
    for (std::uint32_t a = 0; a < na; ++a) {
      for (std::uint32_t b = 0; b < nb; ++b) {
        if (!h.adjacent(a, b)) visit(join(h, vertex_a(a), vertex_b(b), 0));
      }
    }
  }
  std::vector<Vertex> noncubic;
  std::map<Vertex, std::vector<EdgeSplit>> splits;
  for (Vertex v : h.vertices()) {
    if (h.degree(v) >= 4) {
      noncubic.push_back(v);
      splits[v] = legal_splits(h, v);
    }
  }
  if ((indices & 2u) && h.order() + 2 <= max_order) {
    for (Vertex a : noncubic) {
      for (const auto& split : splits[a]) {
        auto s = bi_split(h, a, split.first, split.second);
        for (std::uint32_t i = 0; i < h.class_size(a.side); ++i) {
          if (i == a.index) continue;
          visit(join(s.graph, s.middle, {a.side, i}, 1));
        }
      }
    }
  }
  if ((indices & 4u) && h.order() + 4 <= max_order) {
    for (Vertex a : noncubic) {
      if (a.side != Side::A) continue;
      for (Vertex b : noncubic) {
        if (b.side != Side::B) continue;
        for (const auto& sa : splits[a]) {
          auto first = bi_split(h, a, sa.first, sa.second);
          for (const auto& sb : splits[b]) {
            auto second = bi_split(first.graph, b, sb.first, sb.second);
            visit(join(second.graph, second.middle, first.middle, 2));
          }
        }
      }
    }
  }
}

std::vector<BipartiteGraph> all_expansions(const BipartiteGraph& h,
                                           std::size_t max_order) {
  require_simple_brace(h, "all_expansions");
  std::map<CanonicalForm, BipartiteGraph> seen;
  for_each_expansion(h, max_order, [&](const Expansion& x) {
    if (!x.graph.is_simple()) return;
    seen.try_emplace(canonical_form(x.graph), x.graph);
  });
  std::vector<BipartiteGraph> out;
  out.reserve(seen.size());
  for (auto& [form, graph] : seen) out.push_back(std::move(graph));
  return out;
}

MppCertificate mpp_for_edge(const BipartiteGraph& g, EdgeId e) {
  MppCertificate cert;
  cert.e = e;
  cert.index = edge_index(g, e);
  auto minus = delete_edge(g, e);
  BipartiteGraph h = retract(minus);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& f : h.edges()) {
      if (h.degree(vertex_a(f.a)) < 4 || h.degree(vertex_b(f.b)) < 4) continue;
      auto reduced = delete_edge(h, f.id);
      if (is_brace(reduced)) {
        cert.f.push_back(f.id);
        h = std::move(reduced);
        changed = true;
        break;
      }
    }
  }
  cert.j = std::move(h);
  if (!cert.f.empty()) {
    cert.witness = find_witness(minus, cert.index, edges_of(g, cert.f));
  }
  if (cert.index == 1 && cert.f.size() == 2) {
    cert.stable_ext = is_some_stable_extension(g, cert.j);
  }
  return cert;
}

MppCertificate find_mpp(const BipartiteGraph& g) {
  if (!is_minimal_brace(g)) {
    fail(ErrorCode::kPrecondition, "find_mpp needs a minimal brace");
  }
  if (is_mccuaig(g)) {
    fail(ErrorCode::kPrecondition,
         "find_mpp needs a graph outside the McCuaig family");
  }
  std::optional<MppCertificate> first;
  for (int index : {1, 2}) {
    for (const Edge& edge : g.edges()) {
      if (edge_index(g, edge.id) != index) continue;
      if (!is_strictly_thin(g, edge.id)) continue;
      auto cert = mpp_for_edge(g, edge.id);
      if (verify_narrow(g, cert) == NarrowCheck::kOk) return cert;
      if (!first) first = std::move(cert);
    }
  }
  if (!first) {
    fail(ErrorCode::kPrecondition, "no strictly thin edge found");
  }
  return *first;
}

std::string_view to_string(NarrowCheck c) {
  switch (c) {
    case NarrowCheck::kOk: return "ok";
    case NarrowCheck::kMalformed: return "malformed";
    case NarrowCheck::kNotStrictlyThin: return "not_strictly_thin";
    case NarrowCheck::kIndexMismatch: return "index_mismatch";
    case NarrowCheck::kNotMinimal: return "not_minimal";
    case NarrowCheck::kJMismatch: return "j_mismatch";
    case NarrowCheck::kTooManyDeleted: return "too_many_deleted";
    case NarrowCheck::kNotLocal: return "not_local";
    case NarrowCheck::kCubicity: return "cubicity";
    case NarrowCheck::kNotStableExtension: return "not_stable_extension";
    case NarrowCheck::kArithmetic: return "arithmetic";
  }
  return "unknown";
}

NarrowCheck verify_narrow(const BipartiteGraph& g, const MppCertificate& cert) {
  if (!g.has_edge(cert.e)) return NarrowCheck::kMalformed;
  {
    auto sorted = cert.f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return NarrowCheck::kMalformed;
    }
  }
  if (g.order() < 6 || !g.is_simple() || !is_brace(g)) {
    return NarrowCheck::kNotStrictlyThin;
  }
  auto minus = delete_edge(g, cert.e);
  auto h = retract(minus);
  if (!h.is_simple() || !is_brace(h)) return NarrowCheck::kNotStrictlyThin;
  const int index = edge_index(g, cert.e);
  if (index != cert.index || index < 1) return NarrowCheck::kIndexMismatch;
  for (EdgeId id : cert.f) {
    if (!h.has_edge(id)) return NarrowCheck::kMalformed;
  }
  auto j = delete_edges(h, cert.f);
  if (!is_minimal_brace(j)) return NarrowCheck::kNotMinimal;
  if (!cert.j.is_connected() || !are_isomorphic(j, cert.j)) {
    return NarrowCheck::kJMismatch;
  }
  if (cert.f.size() > static_cast<std::size_t>(index) + 1) {
    return NarrowCheck::kTooManyDeleted;
  }
  auto outer = outer_vertices(minus);
  auto f = edges_of(g, cert.f);
  if (!f.empty() && !witness_holds(minus, outer, index, f, cert.witness)) {
    return NarrowCheck::kNotLocal;
  }
  for (const Edge& x : f) {
    for (Vertex end : {vertex_a(x.a), vertex_b(x.b)}) {
      bool cubic = minus.degree(end) == 3;
      bool is_outer = std::find(outer.begin(), outer.end(), end) != outer.end();
      if (cubic != is_outer) return NarrowCheck::kCubicity;
    }
  }
  if ((index == 1 && f.size() == 2) || cert.stable_ext) {
    if (!cert.stable_ext || !is_some_stable_extension(g, j)) {
      return NarrowCheck::kNotStableExtension;
    }
  }
  const auto n_g = static_cast<long>(g.order() / 2);
  const auto n_j = static_cast<long>(j.order() / 2);
  const auto m_g = static_cast<long>(g.size());
  const auto m_j = static_cast<long>(j.size());
  if (n_j != n_g - index ||
      m_j != m_g - 1 - 2 * index - static_cast<long>(f.size())) {
    return NarrowCheck::kArithmetic;
  }
  return NarrowCheck::kOk;
}

}  // namespace minbrace
