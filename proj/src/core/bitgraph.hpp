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
#include <bit>
#include <cstdint>

#include "minbrace/error.hpp"
#include "minbrace/graph.hpp"

namespace minbrace::detail {

inline constexpr std::size_t kMaxClass = 64;

using Mask = std::uint64_t;

inline Mask bit(std::uint32_t i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Underlying simple graph as one neighbour mask per vertex. Parallel edges
/// collapse; matching questions never depend on multiplicity.
struct BitGraph {
  std::uint32_t na = 0;
  std::uint32_t nb = 0;
  std::array<Mask, kMaxClass> row{};  // A-vertex -> B-neighbours
  std::array<Mask, kMaxClass> col{};  // B-vertex -> A-neighbours

  Mask all_a() const { return na == 64 ? ~Mask{0} : bit(na) - 1; }
  Mask all_b() const { return nb == 64 ? ~Mask{0} : bit(nb) - 1; }

  static BitGraph of(const BipartiteGraph& g) {
    if (g.size_a() > kMaxClass || g.size_b() > kMaxClass) {
      fail(ErrorCode::kTooLarge,
           "color classes are limited to 64 vertices for this operation");
    }
    BitGraph out;
    out.na = static_cast<std::uint32_t>(g.size_a());
    out.nb = static_cast<std::uint32_t>(g.size_b());
    for (const Edge& e : g.edges()) {
      out.row[e.a] |= bit(e.b);
      out.col[e.b] |= bit(e.a);
    }
    return out;
  }
};

/// Kuhn's augmenting-path matcher on masks. Tests whether the A-vertices in
/// `keep_a` can be matched into distinct B-vertices of `keep_b`.
class MaskMatcher {
 public:
  explicit MaskMatcher(const BitGraph& g) : g_(g) {}

  bool saturates(Mask keep_a, Mask keep_b) {
    keep_b_ = keep_b;
    for (std::uint32_t j = 0; j < g_.nb; ++j) match_b_[j] = -1;
    Mask todo = keep_a;
    while (todo) {
      auto a = static_cast<std::uint32_t>(std::countr_zero(todo));
      todo &= todo - 1;
      visited_ = 0;
      if (!augment(a)) return false;
    }
    return true;
  }

  /// Perfect matching of the graph with the given vertices removed.
  bool perfect_without(Mask drop_a, Mask drop_b) {
    Mask keep_a = g_.all_a() & ~drop_a;
    Mask keep_b = g_.all_b() & ~drop_b;
    if (popcount(keep_a) != popcount(keep_b)) return false;
    return saturates(keep_a, keep_b);
  }

 private:
  bool augment(std::uint32_t a) {
    Mask cand = g_.row[a] & keep_b_ & ~visited_;
    while (cand) {
      auto b = static_cast<std::uint32_t>(std::countr_zero(cand));
      cand &= cand - 1;
      visited_ |= bit(b);
      if (match_b_[b] < 0 ||
          augment(static_cast<std::uint32_t>(match_b_[b]))) {
        match_b_[b] = static_cast<int>(a);
        return true;
      }
    }
    return false;
  }

  const BitGraph& g_;
  Mask keep_b_ = 0;
  Mask visited_ = 0;
  std::array<int, kMaxClass> match_b_{};
};

}  // namespace minbrace::detail
