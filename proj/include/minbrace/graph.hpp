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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minbrace {

enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side opposite(Side s) noexcept {
  return s == Side::A ? Side::B : Side::A;
}

/// A vertex is addressed by its color class and its position inside that
/// class. Positions are dense: surgeries that remove vertices renumber the
/// survivors in their original relative order.
struct Vertex {
  Side side = Side::A;
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex vertex_a(std::uint32_t i) { return {Side::A, i}; }
constexpr Vertex vertex_b(std::uint32_t i) { return {Side::B, i}; }

std::string to_string(Vertex v);

using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  std::uint32_t a = 0;  // index in class A
  std::uint32_t b = 0;  // index in class B

  Vertex end(Side s) const { return s == Side::A ? vertex_a(a) : vertex_b(b); }
  Vertex other(Vertex v) const {
    return v.side == Side::A ? vertex_b(b) : vertex_a(a);
  }
  bool touches(Vertex v) const {
    return v.side == Side::A ? a == v.index : b == v.index;
  }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free bipartite multigraph with stable edge identifiers.
///
/// Values are immutable once built; every surgery in this header returns a
/// fresh graph. Edge ids survive the removal of other edges and the
/// contraction of shores that do not swallow them, so an edge of a retract
/// can be traced back to the edge of the original graph carrying the same id.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Edge ids are assigned 0, 1, 2, ... in input order.
  static BipartiteGraph build(
      std::size_t size_a, std::size_t size_b,
      std::span<const std::pair<std::uint32_t, std::uint32_t>> edge_list);

  /// Takes edges with caller-chosen ids; ids must be unique.
  static BipartiteGraph from_edges(std::size_t size_a, std::size_t size_b,
                                   std::vector<Edge> edges);

  std::size_t size_a() const noexcept { return size_a_; }
  std::size_t size_b() const noexcept { return size_b_; }
  std::size_t class_size(Side s) const noexcept {
    return s == Side::A ? size_a_ : size_b_;
  }
  std::size_t order() const noexcept { return size_a_ + size_b_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool balanced() const noexcept { return size_a_ == size_b_; }

  /// Sorted by ascending id.
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge* find_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const { return find_edge(id) != nullptr; }
  /// One more than the largest id in use (0 for an edgeless graph).
  EdgeId next_edge_id() const noexcept { return next_id_; }

  bool contains(Vertex v) const noexcept {
    return v.index < class_size(v.side);
  }
  std::span<const EdgeId> incident(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident(v).size(); }
  /// Distinct neighbours, ascending.
  std::vector<std::uint32_t> neighbors(Vertex v) const;
  std::size_t multiplicity(std::uint32_t a, std::uint32_t b) const;
  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    return multiplicity(a, b) > 0;
  }

  bool is_simple() const;
  bool is_connected() const;
  bool is_cubic() const;
  std::vector<Vertex> vertices() const;

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.size_a_ == y.size_a_ && x.size_b_ == y.size_b_ &&
           x.edges_ == y.edges_;
  }

 private:
  void index_incidence();

  std::size_t size_a_ = 0;
  std::size_t size_b_ = 0;
  std::vector<Edge> edges_;
  EdgeId next_id_ = 0;
  std::vector<std::vector<EdgeId>> inc_a_;
  std::vector<std::vector<EdgeId>> inc_b_;
};

/// A vertex subset X describing the cut ∂(X).
class Shore {
 public:
  Shore() = default;
  Shore(std::vector<std::uint32_t> a_part, std::vector<std::uint32_t> b_part);
  static Shore of(std::span<const Vertex> vertices);

  /// Sorted, duplicate free.
  std::span<const std::uint32_t> part(Side s) const {
    return s == Side::A ? a_ : b_;
  }
  std::size_t size() const noexcept { return a_.size() + b_.size(); }
  bool contains(Vertex v) const;
  std::vector<Vertex> vertices() const;

  /// Class holding the larger share of X, when the two shares differ.
  std::optional<Side> majority_side() const;
  /// True when |X| is odd and the majority exceeds the minority by exactly one.
  bool has_tight_shape() const;
  bool is_trivial(const BipartiteGraph& g) const;
  bool is_proper(const BipartiteGraph& g) const;
  Shore complement(const BipartiteGraph& g) const;

  friend bool operator==(const Shore&, const Shore&) = default;

 private:
  std::vector<std::uint32_t> a_;
  std::vector<std::uint32_t> b_;
};

/// Edges of ∂(X), ascending id.
std::vector<EdgeId> cut_edges(const BipartiteGraph& g, const Shore& x);

// ---------------------------------------------------------------------------
// Surgeries.

BipartiteGraph delete_edge(const BipartiteGraph& g, EdgeId e);
BipartiteGraph delete_edges(const BipartiteGraph& g, std::span<const EdgeId> es);
/// The new edge receives id g.next_edge_id().
BipartiteGraph add_edge(const BipartiteGraph& g, Vertex u, Vertex v);
BipartiteGraph add_edge(const BipartiteGraph& g, std::uint32_t a,
                        std::uint32_t b);

/// Maps every vertex of the input graph to its image in a derived graph.
struct VertexMap {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;

  Vertex operator()(Vertex v) const {
    return {v.side, v.side == Side::A ? a.at(v.index) : b.at(v.index)};
  }
};

struct Contraction {
  BipartiteGraph graph;
  Vertex contracted;         // the vertex X collapsed into
  VertexMap vertex_map;      // vertices of X map to `contracted`
  std::vector<EdgeId> lost;  // edges with both ends in X
};

/// G/(X -> x). X must be a proper odd shore; x joins the majority class and
/// is appended after the surviving vertices of that class. Edges of ∂(X) keep
/// their ids, parallel edges included.
Contraction contract_shore(const BipartiteGraph& g, const Shore& x);

/// Bicontraction of a degree-two vertex with two distinct neighbours.
Contraction bicontract(const BipartiteGraph& g, Vertex v);

/// Vertices of degree two with two distinct neighbours, ascending.
std::vector<Vertex> bicontractible_vertices(const BipartiteGraph& g);

/// Bicontracts degree-two vertices (smallest first) until none is left, or
/// until only two vertices remain.
BipartiteGraph retract(const BipartiteGraph& g);

struct Split {
  BipartiteGraph graph;
  Vertex first;   // keeps the original position and part1
  Vertex second;  // appended to the same class, carries part2
  Vertex middle;  // appended to the opposite class, degree two
  EdgeId first_link = 0;
  EdgeId second_link = 0;
};

/// Replaces the noncubic vertex v by first-middle-second, distributing ∂(v)
/// between first (part1) and second (part2), each receiving at least two
/// edges.
Split bi_split(const BipartiteGraph& g, Vertex v, std::span<const EdgeId> part1,
               std::span<const EdgeId> part2);

// ---------------------------------------------------------------------------
// Text format: "bipartite <nA> <nB>" followed by one "a b" line per edge.

BipartiteGraph parse_graph(std::string_view text);
/// Edge lines sorted by (a, b); ids are not written.
std::string serialize_graph(const BipartiteGraph& g);

}  // namespace minbrace
