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

#include "minbrace/cuts.hpp"

#include <algorithm>

#include "bitgraph.hpp"
#include "minbrace/error.hpp"

namespace minbrace {

namespace {

constexpr std::uint32_t kMaxSearchClass = 24;
constexpr std::uint64_t kSideB = std::uint64_t{1} << 63;

std::optional<Shore> shore_if_surplus_one(const detail::BitGraph& bits,
                                          std::uint64_t tagged) {
  bool in_b = (tagged & kSideB) != 0;
  detail::Mask z = tagged & ~kSideB;
  const auto& adj = in_b ? bits.col : bits.row;
  detail::Mask nbrs = 0;
  for (detail::Mask t = z; t; t &= t - 1) nbrs |= adj[std::countr_zero(t)];
  if (detail::popcount(nbrs) != detail::popcount(z) + 1) return std::nullopt;
  std::vector<std::uint32_t> zs, ns;
  for (detail::Mask t = z; t; t &= t - 1) {
    zs.push_back(static_cast<std::uint32_t>(std::countr_zero(t)));
  }
  for (detail::Mask t = nbrs; t; t &= t - 1) {
    ns.push_back(static_cast<std::uint32_t>(std::countr_zero(t)));
  }
  return in_b ? Shore(std::move(ns), std::move(zs))
              : Shore(std::move(zs), std::move(ns));
}

void check_search_input(const BipartiteGraph& g) {
  if (g.order() < 6) {
    fail(ErrorCode::kPrecondition,
         "tight cut search needs a graph of order six or more");
  }
  if (!g.balanced()) {
    fail(ErrorCode::kPrecondition, "tight cut search needs balanced classes");
  }
  if (g.size_a() > kMaxSearchClass) {
    fail(ErrorCode::kTooLarge,
         "exhaustive tight cut search is limited to classes of 24 vertices");
  }
}

}  // namespace

bool is_tight_cut(const BipartiteGraph& g, const Shore& x) {
  if (!x.is_proper(g) || x.size() % 2 == 0 || !x.has_tight_shape()) {
    return false;
  }
  Side minority = opposite(*x.majority_side());
  // X_- sits in class `minority`; the complement's minority part sits in the
  // opposite class. An edge between them has its `minority`-end in X and its
  // other end outside X.
  for (const Edge& e : g.edges()) {
    if (x.contains(e.end(minority)) && !x.contains(e.end(opposite(minority)))) {
      return false;
    }
  }
  return true;
}

std::optional<Shore> find_nontrivial_tight_cut(const BipartiteGraph& g) {
  check_search_input(g);
  auto bits = detail::BitGraph::of(g);
  const std::uint32_t n = bits.na;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t side : {std::uint64_t{0}, kSideB}) {
    for (std::uint64_t z = 1; z < limit; ++z) {
      if (static_cast<std::uint32_t>(detail::popcount(z)) + 2 > n) continue;
      if (auto s = shore_if_surplus_one(bits, z | side)) return s;
    }
  }
  return std::nullopt;
}

std::optional<Shore> find_nontrivial_tight_cut(const BipartiteGraph& g,
                                               const SubsetOrder& order) {
  check_search_input(g);
  auto bits = detail::BitGraph::of(g);
  const std::uint32_t n = bits.na;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t side : {std::uint64_t{0}, kSideB}) {
    for (std::uint64_t z = 1; z < limit; ++z) {
      if (static_cast<std::uint32_t>(detail::popcount(z)) + 2 <= n) {
        masks.push_back(z | side);
      }
    }
  }
  order(masks);
  for (auto z : masks) {
    if (auto s = shore_if_surplus_one(bits, z)) return s;
  }
  return std::nullopt;
}

namespace {

DecompositionResult decompose(
    const BipartiteGraph& g,
    const std::function<std::optional<Shore>(const BipartiteGraph&)>& find) {
  DecompositionResult out;
  std::vector<BipartiteGraph> stack{g};
  while (!stack.empty()) {
    BipartiteGraph piece = std::move(stack.back());
    stack.pop_back();
    std::optional<Shore> x;
    if (piece.order() >= 6) x = find(piece);
    if (!x) {
      out.leaves.push_back(std::move(piece));
      continue;
    }
    out.trace.push_back({*x, piece.order()});
    auto inner = contract_shore(piece, x->complement(piece));
    auto outer = contract_shore(piece, *x);
    // Pushed in reverse so the X side is explored first.
    stack.push_back(std::move(outer.graph));
    stack.push_back(std::move(inner.graph));
  }
  return out;
}

}  // namespace

DecompositionResult tight_cut_decomposition(const BipartiteGraph& g) {
  return decompose(g, [](const BipartiteGraph& h) {
    return find_nontrivial_tight_cut(h);
  });
}

DecompositionResult tight_cut_decomposition(const BipartiteGraph& g,
                                            const SubsetOrder& order) {
  return decompose(g, [&](const BipartiteGraph& h) {
    return find_nontrivial_tight_cut(h, order);
  });
}

std::vector<CanonicalForm> DecompositionResult::leaf_forms() const {
  std::vector<CanonicalForm> out;
  for (const auto& leaf : leaves) {
    out.push_back(canonical_form(underlying_simple(leaf)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteGraph underlying_simple(const BipartiteGraph& g) {
  std::vector<Edge> kept;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const Edge& e : g.edges()) {
    std::pair<std::uint32_t, std::uint32_t> key{e.a, e.b};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    kept.push_back(e);
  }
  return BipartiteGraph::from_edges(g.size_a(), g.size_b(), std::move(kept));
}

}  // namespace minbrace
