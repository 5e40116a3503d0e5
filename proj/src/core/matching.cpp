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

#include "minbrace/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "bitgraph.hpp"
#include "minbrace/error.hpp"

namespace minbrace {

namespace {

constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        pair_a_(g.size_a(), kNil),
        pair_b_(g.size_b(), kNil),
        via_a_(g.size_a(), kNil),
        dist_(g.size_a(), kInf) {}

  void run() {
    while (bfs()) {
      for (std::uint32_t a = 0; a < g_.size_a(); ++a) {
        if (pair_a_[a] == kNil) dfs(a);
      }
    }
  }

  std::vector<EdgeId> matched_edges() const {
    std::vector<EdgeId> out;
    for (std::uint32_t a = 0; a < g_.size_a(); ++a) {
      if (via_a_[a] != kNil) out.push_back(via_a_[a]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool bfs() {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t a = 0; a < g_.size_a(); ++a) {
      if (pair_a_[a] == kNil) {
        dist_[a] = 0;
        q.push(a);
      } else {
        dist_[a] = kInf;
      }
    }
    while (!q.empty()) {
      std::uint32_t a = q.front();
      q.pop();
      for (EdgeId id : g_.incident(vertex_a(a))) {
        std::uint32_t b = g_.edge(id).b;
        std::uint32_t next = pair_b_[b];
        if (next == kNil) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[a] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t a) {
    for (EdgeId id : g_.incident(vertex_a(a))) {
      std::uint32_t b = g_.edge(id).b;
      std::uint32_t next = pair_b_[b];
      if (next == kNil || (dist_[next] == dist_[a] + 1 && dfs(next))) {
        pair_a_[a] = b;
        pair_b_[b] = a;
        via_a_[a] = id;
        return true;
      }
    }
    dist_[a] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::uint32_t> pair_a_;
  std::vector<std::uint32_t> pair_b_;
  std::vector<EdgeId> via_a_;
  std::vector<std::uint32_t> dist_;
};

/// Tarjan's strongly connected components, iterative.
std::vector<std::uint32_t> strong_components(
    const std::vector<std::vector<std::uint32_t>>& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<std::uint32_t> index(n, kNil), low(n, 0), comp(n, kNil);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t counter = 0, ncomp = 0;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kNil) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < adj[v].size()) {
        std::uint32_t w = adj[v][pos++];
        if (index[w] == kNil) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) {
        auto parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  hk.run();
  Matching m;
  m.edges = hk.matched_edges();
  m.perfect = g.balanced() && 2 * m.edges.size() == g.order();
  return m;
}

bool has_perfect_matching(const BipartiteGraph& g) {
  if (!g.balanced()) return false;
  return maximum_matching(g).perfect;
}

std::vector<bool> allowed_edges(const BipartiteGraph& g) {
  std::vector<bool> out(g.size(), false);
  Matching m = maximum_matching(g);
  if (!m.perfect) return out;
  // Orient non-matching edges A -> B and matching edges B -> A. A
  // non-matching edge lies in some perfect matching iff it closes an
  // alternating cycle, i.e. both ends share a strong component.
  const auto na = static_cast<std::uint32_t>(g.size_a());
  std::vector<std::vector<std::uint32_t>> adj(g.order());
  for (const Edge& e : g.edges()) {
    bool matched = std::binary_search(m.edges.begin(), m.edges.end(), e.id);
    if (matched) {
      adj[na + e.b].push_back(e.a);
    } else {
      adj[e.a].push_back(na + e.b);
    }
  }
  auto comp = strong_components(adj);
  std::size_t i = 0;
  for (const Edge& e : g.edges()) {
    bool matched = std::binary_search(m.edges.begin(), m.edges.end(), e.id);
    out[i++] = matched || comp[e.a] == comp[na + e.b];
  }
  return out;
}

bool is_matching_covered(const BipartiteGraph& g) {
  if (g.order() < 2 || !g.balanced() || !g.is_connected()) return false;
  auto allowed = allowed_edges(g);
  return std::all_of(allowed.begin(), allowed.end(),
                     [](bool x) { return x; });
}

bool is_brace(const BipartiteGraph& g) {
  if (!is_matching_covered(g)) return false;
  if (g.order() <= 4) return true;  // K2 or C4 underneath, possibly doubled
  auto bits = detail::BitGraph::of(g);
  const std::uint32_t n = bits.na;
  // Braces of order six or more are 3-connected.
  for (std::uint32_t i = 0; i < n; ++i) {
    if (detail::popcount(bits.row[i]) < 3 ||
        detail::popcount(bits.col[i]) < 3) {
      return false;
    }
  }
  detail::MaskMatcher matcher(bits);
  for (std::uint32_t a1 = 0; a1 < n; ++a1) {
    for (std::uint32_t a2 = a1 + 1; a2 < n; ++a2) {
      detail::Mask drop_a = detail::bit(a1) | detail::bit(a2);
      for (std::uint32_t b1 = 0; b1 < n; ++b1) {
        for (std::uint32_t b2 = b1 + 1; b2 < n; ++b2) {
          if (!matcher.perfect_without(drop_a,
                                       detail::bit(b1) | detail::bit(b2))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

int surplus(const BipartiteGraph& g, std::span<const Vertex> z) {
  if (z.empty()) fail(ErrorCode::kInvalidArgument, "surplus of an empty set");
  Side side = z.front().side;
  std::vector<std::uint32_t> members, nbrs;
  for (Vertex v : z) {
    if (v.side != side) {
      fail(ErrorCode::kInvalidArgument,
           "surplus needs a set inside one color class");
    }
    members.push_back(v.index);
    for (auto w : g.neighbors(v)) nbrs.push_back(w);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  return static_cast<int>(nbrs.size()) - static_cast<int>(members.size());
}

}  // namespace minbrace
