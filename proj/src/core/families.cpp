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

#include "minbrace/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "minbrace/edges.hpp"
#include "minbrace/error.hpp"
#include "minbrace/expand.hpp"
#include "minbrace/iso.hpp"

namespace minbrace {

namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

constexpr std::array<std::pair<Family, std::string_view>, 13> kNames = {{
    {Family::kK2, "K2"},
    {Family::kC4, "C4"},
    {Family::kK33, "K33"},
    {Family::kB8Plus, "B8plus"},
    {Family::kM10, "M10"},
    {Family::kQ10, "Q10"},
    {Family::kQ10Plus, "Q10plus"},
    {Family::kQ12, "Q12"},
    {Family::kB12, "B12"},
    {Family::kBiwheel, "biwheel"},
    {Family::kPrism, "prism"},
    {Family::kMoebius, "moebius"},
    {Family::kQ, "Q"},
}};

std::uint32_t half_order(std::size_t order, const char* name) {
  if (order % 2 != 0) {
    fail(ErrorCode::kInvalidArgument,
         std::string(name) + " needs an even order, got " +
             std::to_string(order));
  }
  return static_cast<std::uint32_t>(order / 2);
}

BipartiteGraph complete(std::uint32_t n) {
  EdgeList edges;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) edges.emplace_back(a, b);
  }
  return BipartiteGraph::build(n, n, edges);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

bool is_parameterized(Family f) {
  return f == Family::kBiwheel || f == Family::kPrism ||
         f == Family::kMoebius || f == Family::kQ;
}

BipartiteGraph make_biwheel(std::size_t order) {
  const std::uint32_t n = half_order(order, "biwheel");
  if (n < 4) {
    fail(ErrorCode::kInvalidArgument, "biwheel needs order 2n with n >= 4");
  }
  // Rim c_0 .. c_{2n-3} with c_{2i} = A_i and c_{2i+1} = B_i; hubs A_{n-1}
  // and B_{n-1}.
  const std::uint32_t k = n - 1;
  const std::uint32_t hub = n - 1;
  EdgeList edges;
  for (std::uint32_t i = 0; i < k; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back((i + 1) % k, i);
  }
  for (std::uint32_t i = 0; i < k; ++i) edges.emplace_back(hub, i);
  for (std::uint32_t i = 0; i < k; ++i) edges.emplace_back(i, hub);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph make_prism(std::size_t order) {
  const std::uint32_t n = half_order(order, "prism");
  if (n < 4 || n % 2 != 0) {
    fail(ErrorCode::kInvalidArgument,
         "prism needs order 2n with n even and n >= 4");
  }
  // u_i sits in class i mod 2, v_i in the other one.
  const std::uint32_t h = n / 2;
  auto u = [&](std::uint32_t i) {
    i %= n;
    return i % 2 == 0 ? vertex_a(i / 2) : vertex_b(i / 2);
  };
  auto v = [&](std::uint32_t i) {
    i %= n;
    return i % 2 == 0 ? vertex_b(h + i / 2) : vertex_a(h + i / 2);
  };
  EdgeList edges;
  auto link = [&](Vertex x, Vertex y) {
    if (x.side == Side::B) std::swap(x, y);
    edges.emplace_back(x.index, y.index);
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    link(u(i), u(i + 1));
    link(v(i), v(i + 1));
    link(u(i), v(i));
  }
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph make_moebius(std::size_t order) {
  const std::uint32_t n = half_order(order, "moebius");
  if (n < 3 || n % 2 == 0) {
    fail(ErrorCode::kInvalidArgument,
         "Moebius ladder needs order 2n with n odd and n >= 3");
  }
  // Rim vertex i lies in class i mod 2 at index i / 2.
  const std::uint32_t len = 2 * n;
  EdgeList edges;
  auto link = [&](std::uint32_t x, std::uint32_t y) {
    x %= len;
    y %= len;
    if (x % 2 == 1) std::swap(x, y);
    edges.emplace_back(x / 2, y / 2);
  };
  for (std::uint32_t i = 0; i < len; ++i) link(i, i + 1);
  for (std::uint32_t i = 0; i < n; ++i) link(i, i + n);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph make_q10() {
  // A = x0..x4, B = y0..y4.
  EdgeList edges;
  for (std::uint32_t x : {0u, 1u}) {
    for (std::uint32_t y : {0u, 1u, 2u}) edges.emplace_back(x, y);
  }
  for (std::uint32_t x : {2u, 3u, 4u}) {
    for (std::uint32_t y : {3u, 4u}) edges.emplace_back(x, y);
  }
  edges.emplace_back(2, 0);
  edges.emplace_back(3, 1);
  edges.emplace_back(4, 2);
  return BipartiteGraph::build(5, 5, edges);
}

BipartiteGraph make_q10_plus() { return add_edge(make_q10(), 1, 3); }

BipartiteGraph make_b8_plus() { return add_edge(make_biwheel(8), 3, 3); }

BipartiteGraph make_q(std::size_t order) {
  const std::uint32_t n = half_order(order, "Q");
  if (n < 6) fail(ErrorCode::kInvalidArgument, "Q needs order 2n with n >= 6");
  // The unique stable set of Q10 meeting each class twice is {x0, x1, y3,
  // y4}; it stays the set of noncubic vertices at every later step.
  BipartiteGraph g = make_q10();
  for (std::uint32_t k = 6; k <= n; ++k) {
    std::vector<Vertex> s;
    if (k == 6) {
      s = {vertex_a(0), vertex_a(1), vertex_b(3), vertex_b(4)};
    } else {
      s = noncubic_vertices(g);
    }
    g = stable_extension(g, s);
  }
  return g;
}

BipartiteGraph make(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kK2: return complete(1);
    case Family::kC4: return complete(2);
    case Family::kK33: return complete(3);
    case Family::kB8Plus: return make_b8_plus();
    case Family::kM10: return make_moebius(10);
    case Family::kQ10: return make_q10();
    case Family::kQ10Plus: return make_q10_plus();
    case Family::kQ12: return make_q(12);
    case Family::kB12: return make_biwheel(12);
    case Family::kBiwheel: return make_biwheel(spec.order);
    case Family::kPrism: return make_prism(spec.order);
    case Family::kMoebius: return make_moebius(spec.order);
    case Family::kQ: return make_q(spec.order);
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

std::vector<BipartiteGraph> mccuaig_members(std::size_t max_order) {
  std::vector<BipartiteGraph> out;
  std::vector<CanonicalForm> seen;
  auto add = [&](BipartiteGraph g) {
    auto form = canonical_form(g);
    if (std::find(seen.begin(), seen.end(), form) != seen.end()) return;
    seen.push_back(form);
    out.push_back(std::move(g));
  };
  if (max_order >= 2) add(complete(1));
  if (max_order >= 4) add(complete(2));
  for (std::size_t order = 6; order <= max_order; order += 2) {
    const std::size_t n = order / 2;
    if (n % 2 == 1) add(make_moebius(order));
    if (n % 2 == 0 && n >= 4) add(make_prism(order));
    if (n >= 4) add(make_biwheel(order));
  }
  return out;
}

bool is_mccuaig(const BipartiteGraph& g) {
  if (!g.balanced() || g.order() < 2 || !g.is_simple() || !g.is_connected()) {
    return false;
  }
  static std::mutex mu;
  static std::map<std::size_t, std::vector<CanonicalForm>> cache;
  const std::size_t order = g.order();
  std::vector<CanonicalForm> forms;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) {
      std::vector<CanonicalForm> fresh;
      for (const auto& m : mccuaig_members(order)) {
        if (m.order() == order) fresh.push_back(canonical_form(m));
      }
      it = cache.emplace(order, std::move(fresh)).first;
    }
    forms = it->second;
  }
  auto form = canonical_form(g);
  return std::find(forms.begin(), forms.end(), form) != forms.end();
}

}  // namespace minbrace
