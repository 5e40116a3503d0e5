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

#include "minbrace/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "minbrace/error.hpp"

namespace minbrace {

std::string to_string(Vertex v) {
  return (v.side == Side::A ? "A" : "B") + std::to_string(v.index);
}

BipartiteGraph BipartiteGraph::build(
    std::size_t size_a, std::size_t size_b,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  EdgeId id = 0;
  for (const auto& [a, b] : edge_list) edges.push_back({id++, a, b});
  return from_edges(size_a, size_b, std::move(edges));
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t size_a,
                                          std::size_t size_b,
                                          std::vector<Edge> edges) {
  BipartiteGraph g;
  g.size_a_ = size_a;
  g.size_b_ = size_b;
  for (const Edge& e : edges) {
    if (e.a >= size_a || e.b >= size_b) {
      fail(ErrorCode::kInvalidArgument,
           "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
               ") out of range for classes of size " + std::to_string(size_a) +
               " and " + std::to_string(size_b));
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      fail(ErrorCode::kInvalidArgument,
           "duplicate edge id " + std::to_string(edges[i].id));
    }
  }
  g.next_id_ = edges.empty() ? 0 : edges.back().id + 1;
  g.edges_ = std::move(edges);
  g.index_incidence();
  return g;
}

void BipartiteGraph::index_incidence() {
  inc_a_.assign(size_a_, {});
  inc_b_.assign(size_b_, {});
  for (const Edge& e : edges_) {
    inc_a_[e.a].push_back(e.id);
    inc_b_[e.b].push_back(e.id);
  }
}

const Edge* BipartiteGraph::find_edge(EdgeId id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return nullptr;
  return &*it;
}

const Edge& BipartiteGraph::edge(EdgeId id) const {
  const Edge* e = find_edge(id);
  if (e == nullptr) {
    fail(ErrorCode::kInvalidArgument, "unknown edge id " + std::to_string(id));
  }
  return *e;
}

std::span<const EdgeId> BipartiteGraph::incident(Vertex v) const {
  if (!contains(v)) {
    fail(ErrorCode::kInvalidArgument, "unknown vertex " + to_string(v));
  }
  return v.side == Side::A ? inc_a_[v.index] : inc_b_[v.index];
}

std::vector<std::uint32_t> BipartiteGraph::neighbors(Vertex v) const {
  std::vector<std::uint32_t> out;
  for (EdgeId id : incident(v)) out.push_back(edge(id).other(v).index);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t BipartiteGraph::multiplicity(std::uint32_t a,
                                         std::uint32_t b) const {
  std::size_t count = 0;
  for (EdgeId id : incident(vertex_a(a))) count += edge(id).b == b ? 1 : 0;
  return count;
}

bool BipartiteGraph::is_simple() const {
  std::vector<std::uint32_t> seen;
  for (std::uint32_t a = 0; a < size_a_; ++a) {
    seen.clear();
    for (EdgeId id : inc_a_[a]) seen.push_back(edge(id).b);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      return false;
    }
  }
  return true;
}

bool BipartiteGraph::is_connected() const {
  if (order() == 0) return false;
  std::vector<char> seen_a(size_a_, 0), seen_b(size_b_, 0);
  std::vector<Vertex> stack;
  Vertex start = size_a_ > 0 ? vertex_a(0) : vertex_b(0);
  (start.side == Side::A ? seen_a : seen_b)[0] = 1;
  stack.push_back(start);
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId id : incident(v)) {
      Vertex w = edge(id).other(v);
      auto& seen = w.side == Side::A ? seen_a : seen_b;
      if (!seen[w.index]) {
        seen[w.index] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

bool BipartiteGraph::is_cubic() const {
  for (const auto& inc : inc_a_) {
    if (inc.size() != 3) return false;
  }
  for (const auto& inc : inc_b_) {
    if (inc.size() != 3) return false;
  }
  return true;
}

std::vector<Vertex> BipartiteGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(order());
  for (std::uint32_t i = 0; i < size_a_; ++i) out.push_back(vertex_a(i));
  for (std::uint32_t i = 0; i < size_b_; ++i) out.push_back(vertex_b(i));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Shore::Shore(std::vector<std::uint32_t> a_part,
             std::vector<std::uint32_t> b_part)
    : a_(normalized(std::move(a_part))), b_(normalized(std::move(b_part))) {}

Shore Shore::of(std::span<const Vertex> vertices) {
  std::vector<std::uint32_t> a, b;
  for (Vertex v : vertices) (v.side == Side::A ? a : b).push_back(v.index);
  return Shore(std::move(a), std::move(b));
}

bool Shore::contains(Vertex v) const {
  auto p = part(v.side);
  return std::binary_search(p.begin(), p.end(), v.index);
}

std::vector<Vertex> Shore::vertices() const {
  std::vector<Vertex> out;
  for (auto i : a_) out.push_back(vertex_a(i));
  for (auto i : b_) out.push_back(vertex_b(i));
  return out;
}

std::optional<Side> Shore::majority_side() const {
  if (a_.size() == b_.size()) return std::nullopt;
  return a_.size() > b_.size() ? Side::A : Side::B;
}

bool Shore::has_tight_shape() const {
  std::size_t hi = std::max(a_.size(), b_.size());
  std::size_t lo = std::min(a_.size(), b_.size());
  return hi == lo + 1;
}

bool Shore::is_proper(const BipartiteGraph& g) const {
  if (size() == 0 || size() >= g.order()) return false;
  for (auto i : a_) {
    if (i >= g.size_a()) return false;
  }
  for (auto i : b_) {
    if (i >= g.size_b()) return false;
  }
  return true;
}

bool Shore::is_trivial(const BipartiteGraph& g) const {
  return size() == 1 || size() + 1 == g.order();
}

Shore Shore::complement(const BipartiteGraph& g) const {
  std::vector<std::uint32_t> a, b;
  for (std::uint32_t i = 0; i < g.size_a(); ++i) {
    if (!std::binary_search(a_.begin(), a_.end(), i)) a.push_back(i);
  }
  for (std::uint32_t i = 0; i < g.size_b(); ++i) {
    if (!std::binary_search(b_.begin(), b_.end(), i)) b.push_back(i);
  }
  return Shore(std::move(a), std::move(b));
}

std::vector<EdgeId> cut_edges(const BipartiteGraph& g, const Shore& x) {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (x.contains(vertex_a(e.a)) != x.contains(vertex_b(e.b))) {
      out.push_back(e.id);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BipartiteGraph delete_edge(const BipartiteGraph& g, EdgeId e) {
  EdgeId one[] = {e};
  return delete_edges(g, one);
}

BipartiteGraph delete_edges(const BipartiteGraph& g,
                            std::span<const EdgeId> es) {
  for (EdgeId id : es) g.edge(id);
  std::vector<Edge> kept;
  kept.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (std::find(es.begin(), es.end(), e.id) == es.end()) kept.push_back(e);
  }
  return BipartiteGraph::from_edges(g.size_a(), g.size_b(), std::move(kept));
}

BipartiteGraph add_edge(const BipartiteGraph& g, Vertex u, Vertex v) {
  if (u.side == v.side) {
    fail(ErrorCode::kInvalidArgument, "endpoints " + to_string(u) + " and " +
                                          to_string(v) +
                                          " lie in the same class");
  }
  if (u.side == Side::B) std::swap(u, v);
  return add_edge(g, u.index, v.index);
}

BipartiteGraph add_edge(const BipartiteGraph& g, std::uint32_t a,
                        std::uint32_t b) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({g.next_edge_id(), a, b});
  return BipartiteGraph::from_edges(g.size_a(), g.size_b(), std::move(edges));
}

Contraction contract_shore(const BipartiteGraph& g, const Shore& x) {
  if (!x.is_proper(g)) {
    fail(ErrorCode::kInvalidArgument,
         "contraction needs a nonempty proper shore");
  }
  auto major = x.majority_side();
  if (!major || x.size() % 2 == 0) {
    fail(ErrorCode::kInvalidArgument,
         "contraction is defined for odd shores only");
  }
  Contraction out;
  std::uint32_t next_a = 0, next_b = 0;
  out.vertex_map.a.resize(g.size_a());
  out.vertex_map.b.resize(g.size_b());
  for (std::uint32_t i = 0; i < g.size_a(); ++i) {
    if (!x.contains(vertex_a(i))) out.vertex_map.a[i] = next_a++;
  }
  for (std::uint32_t i = 0; i < g.size_b(); ++i) {
    if (!x.contains(vertex_b(i))) out.vertex_map.b[i] = next_b++;
  }
  std::uint32_t& slot = *major == Side::A ? next_a : next_b;
  out.contracted = {*major, slot++};
  for (auto i : x.part(Side::A)) out.vertex_map.a[i] = out.contracted.index;
  for (auto i : x.part(Side::B)) out.vertex_map.b[i] = out.contracted.index;
  // The minority part of X has no vertex left in its class, so the images of
  // its vertices are placeholders and any edge with both ends in X is lost.
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    bool in_a = x.contains(vertex_a(e.a));
    bool in_b = x.contains(vertex_b(e.b));
    if (in_a && in_b) {
      out.lost.push_back(e.id);
      continue;
    }
    if (in_a != in_b) {
      Side inside = in_a ? Side::A : Side::B;
      if (inside != *major) {
        // An edge from the minority part leaving X cannot be kept in a
        // bipartite contraction.
        fail(ErrorCode::kInvalidArgument,
             "edge " + std::to_string(e.id) +
                 " leaves the minority part of the shore");
      }
    }
    edges.push_back(
        {e.id, out.vertex_map.a[e.a], out.vertex_map.b[e.b]});
  }
  out.graph =
      BipartiteGraph::from_edges(next_a, next_b, std::move(edges));
  return out;
}

Contraction bicontract(const BipartiteGraph& g, Vertex v) {
  auto inc = g.incident(v);
  if (inc.size() != 2) {
    fail(ErrorCode::kInvalidArgument,
         "bicontraction needs a vertex of degree two, " + to_string(v) +
             " has degree " + std::to_string(inc.size()));
  }
  Vertex n1 = g.edge(inc[0]).other(v);
  Vertex n2 = g.edge(inc[1]).other(v);
  if (n1 == n2) {
    fail(ErrorCode::kInvalidArgument,
         "both edges at " + to_string(v) + " go to the same neighbour");
  }
  Vertex three[] = {v, n1, n2};
  return contract_shore(g, Shore::of(three));
}

std::vector<Vertex> bicontractible_vertices(const BipartiteGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    auto inc = g.incident(v);
    if (inc.size() == 2 &&
        g.edge(inc[0]).other(v) != g.edge(inc[1]).other(v)) {
      out.push_back(v);
    }
  }
  return out;
}

BipartiteGraph retract(const BipartiteGraph& g) {
  BipartiteGraph cur = g;
  while (cur.order() > 2) {
    auto candidates = bicontractible_vertices(cur);
    if (candidates.empty()) break;
    cur = bicontract(cur, candidates.front()).graph;
  }
  return cur;
}

Split bi_split(const BipartiteGraph& g, Vertex v, std::span<const EdgeId> part1,
               std::span<const EdgeId> part2) {
  auto inc = g.incident(v);
  if (inc.size() < 4) {
    fail(ErrorCode::kInvalidArgument,
         "bi-splitting needs a noncubic vertex, " + to_string(v) +
             " has degree " + std::to_string(inc.size()));
  }
  if (part1.size() < 2 || part2.size() < 2) {
    fail(ErrorCode::kInvalidArgument,
         "each side of a bi-split needs at least two edges");
  }
  std::vector<EdgeId> given(part1.begin(), part1.end());
  given.insert(given.end(), part2.begin(), part2.end());
  std::sort(given.begin(), given.end());
  std::vector<EdgeId> expected(inc.begin(), inc.end());
  std::sort(expected.begin(), expected.end());
  if (given != expected) {
    fail(ErrorCode::kInvalidArgument,
         "split parts must partition the edges at " + to_string(v));
  }

  Split out;
  std::size_t na = g.size_a(), nb = g.size_b();
  out.first = v;
  if (v.side == Side::A) {
    out.second = vertex_a(static_cast<std::uint32_t>(na++));
    out.middle = vertex_b(static_cast<std::uint32_t>(nb++));
  } else {
    out.second = vertex_b(static_cast<std::uint32_t>(nb++));
    out.middle = vertex_a(static_cast<std::uint32_t>(na++));
  }
  std::vector<Edge> edges;
  edges.reserve(g.size() + 2);
  for (const Edge& e : g.edges()) {
    Edge moved = e;
    if (std::find(part2.begin(), part2.end(), e.id) != part2.end()) {
      (v.side == Side::A ? moved.a : moved.b) = out.second.index;
    }
    edges.push_back(moved);
  }
  auto link = [&](Vertex end, EdgeId id) {
    Vertex a = end.side == Side::A ? end : out.middle;
    Vertex b = end.side == Side::A ? out.middle : end;
    edges.push_back({id, a.index, b.index});
  };
  out.first_link = g.next_edge_id();
  out.second_link = g.next_edge_id() + 1;
  link(out.first, out.first_link);
  link(out.second, out.second_link);
  out.graph = BipartiteGraph::from_edges(na, nb, std::move(edges));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint32_t parse_count(std::string_view w, std::size_t line) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) {
    fail(ErrorCode::kParse, "line " + std::to_string(line) +
                                ": expected a nonnegative integer, got '" +
                                std::string(w) + "'");
  }
  return value;
}

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t na = 0, nb = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    auto w = words(line);
    if (!have_header) {
      if (w.size() != 3 || w[0] != "bipartite") {
        fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": expected 'bipartite <nA> <nB>'");
      }
      na = parse_count(w[1], line_no);
      nb = parse_count(w[2], line_no);
      have_header = true;
      continue;
    }
    if (w.size() != 2) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected an edge 'a b'");
    }
    std::uint32_t a = parse_count(w[0], line_no);
    std::uint32_t b = parse_count(w[1], line_no);
    if (a >= na || b >= nb) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": edge (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ") out of range");
    }
    pairs.emplace_back(a, b);
  }
  if (!have_header) fail(ErrorCode::kParse, "missing 'bipartite' header");
  return BipartiteGraph::build(na, nb, pairs);
}

std::string serialize_graph(const BipartiteGraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(g.size());
  for (const Edge& e : g.edges()) pairs.emplace_back(e.a, e.b);
  std::sort(pairs.begin(), pairs.end());
  std::string out = "bipartite " + std::to_string(g.size_a()) + " " +
                    std::to_string(g.size_b()) + "\n";
  for (auto [a, b] : pairs) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

}  // namespace minbrace
