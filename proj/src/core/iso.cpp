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


#include "minbrace/iso.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <vector>

#include "canon.hpp"
#include "minbrace/error.hpp"

namespace minbrace {

namespace {

constexpr std::size_t kMaxDim = 255;

/// Dense multiplicity matrix view, rows x cols, row-major.
struct MatrixView {
  std::size_t rows = 0;
  std::size_t cols = 0;
  const std::uint8_t* cell = nullptr;

  std::uint8_t at(std::size_t i, std::size_t j) const {
    return cell[i * cols + j];
  }
};

void transpose_into(const MatrixView& m, std::vector<std::uint8_t>* out) {
  out->resize(m.rows * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      (*out)[j * m.rows + i] = m.at(i, j);
    }
  }
}

std::vector<std::uint8_t> cells_of(const BipartiteGraph& g) {
  if (g.size_a() > kMaxDim || g.size_b() > kMaxDim) {
    fail(ErrorCode::kTooLarge, "canonical forms support classes up to 255");
  }
  std::vector<std::uint8_t> cells(g.size_a() * g.size_b(), 0);
  for (const Edge& e : g.edges()) {
    auto& c = cells[e.a * g.size_b() + e.b];
    if (c == 255) fail(ErrorCode::kTooLarge, "edge multiplicity above 255");
    ++c;
  }
  return cells;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Colours of rows then columns.
using Colouring = std::vector<std::uint32_t>;

/// Reused between calls; canonical forms are computed in hot loops.
struct Scratch {
  std::vector<std::uint64_t> sig, hash;
  std::vector<std::uint32_t> idx, fresh;
  std::vector<char> used, cut;
  std::vector<std::uint32_t> order, slot;
  std::vector<std::uint8_t> cur, transposed, tcells, best;
  Colouring colours, tcolours;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

/// Colour refinement. A vertex's new colour is ranked by its old colour,
/// then by a hash of the multiset of (neighbour colour, multiplicity); both
/// keys are label independent and each round only splits classes.
void refine(const MatrixView& m, Scratch& s, Colouring* out) {
  const std::size_t r = m.rows, c = m.cols, n = r + c;
  Colouring& colour = *out;
  colour.assign(n, 0);
  for (std::size_t j = 0; j < c; ++j) colour[r + j] = r > 0 ? 1 : 0;
  std::size_t classes = (r > 0) + (c > 0);
  s.sig.resize(n);
  s.idx.resize(n);
  s.fresh.resize(n);
  s.hash.resize(n);
  while (classes < n) {
    for (std::size_t k = 0; k < n; ++k) s.hash[k] = mix(colour[k] * 256ull + 1);
    auto term = [&](std::size_t k, std::uint8_t v) {
      return v == 1 ? s.hash[k] : mix(colour[k] * 256ull + v);
    };
    for (std::size_t i = 0; i < r; ++i) s.sig[i] = 0;
    for (std::size_t j = 0; j < c; ++j) s.sig[r + j] = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint8_t* row = m.cell + i * c;
      for (std::size_t j = 0; j < c; ++j) {
        if (!row[j]) continue;
        s.sig[i] += term(r + j, row[j]);
        s.sig[r + j] += term(i, row[j]);
      }
    }
    std::iota(s.idx.begin(), s.idx.end(), 0u);
    std::sort(s.idx.begin(), s.idx.end(), [&](std::uint32_t x, std::uint32_t y) {
      if (colour[x] != colour[y]) return colour[x] < colour[y];
      return s.sig[x] < s.sig[y];
    });
    std::uint32_t next = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0 && (colour[s.idx[k]] != colour[s.idx[k - 1]] ||
                    s.sig[s.idx[k]] != s.sig[s.idx[k - 1]])) {
        ++next;
      }
      s.fresh[s.idx[k]] = next;
    }
    std::copy(s.fresh.begin(), s.fresh.end(), colour.begin());
    if (next + 1 == classes) break;
    classes = next + 1;
  }
}

/// Backtracking over row orders. Rows are placed in ascending colour order;
/// columns are never branched on: for a fixed row order the least matrix
/// sorts columns by their column vectors, and the first k rows of that
/// matrix depend only on the first k chosen rows. Each level therefore
/// refines the ordered column cells by the values of the chosen row.
class RowSearch {
 public:
  RowSearch(const MatrixView& m, const Colouring& colours, Scratch& s,
            std::vector<std::uint8_t>* best, bool have_best)
      : m_(m), s_(s), best_(*best), colours_(colours),
        match_(have_best ? 0 : -1) {
    const std::size_t r = m.rows, c = m.cols;
    best_.resize(r * c);
    s.used.assign(r, 0);
    s.order.resize((r + 1) * c);
    s.cut.assign((r + 1) * (c + 1), 0);
    s.cur.resize(r * c);
    s.slot.assign(colours.begin(), colours.begin() + r);
    std::sort(s.slot.begin(), s.slot.end());
    std::uint32_t* ord = s.order.data();
    std::iota(ord, ord + c, 0u);
    std::stable_sort(ord, ord + c, [&](auto x, auto y) {
      return colours[r + x] < colours[r + y];
    });
    char* cut = s.cut.data();
    cut[0] = 1;
    cut[c] = 1;
    for (std::size_t j = 1; j < c; ++j) {
      cut[j] = colours[r + ord[j]] != colours[r + ord[j - 1]];
    }
  }

  void run() { dfs(0); }

 private:
  void dfs(std::size_t k) {
    if (k == m_.rows) {
      std::copy(s_.cur.begin(), s_.cur.end(), best_.begin());
      match_ = static_cast<long>(m_.rows);
      return;
    }
    const std::size_t c = m_.cols;
    std::uint8_t* row_out = s_.cur.data() + k * c;
    const std::uint32_t* ord = s_.order.data() + k * c;
    const char* cut = s_.cut.data() + k * (c + 1);
    std::uint32_t* nord = s_.order.data() + (k + 1) * c;
    char* ncut = s_.cut.data() + (k + 1) * (c + 1);
    for (std::size_t i = 0; i < m_.rows; ++i) {
      if (s_.used[i] || colours_[i] != s_.slot[k]) continue;
      if (match_ > static_cast<long>(k)) match_ = static_cast<long>(k);
      const std::uint8_t* row = m_.cell + i * c;
      std::size_t start = 0;
      while (start < c) {
        std::size_t end = start + 1;
        while (!cut[end]) ++end;
        // Counting sort of the cell by the value in row i.
        std::size_t w = start;
        std::uint8_t lo = 255, hi = 0;
        for (std::size_t j = start; j < end; ++j) {
          auto v = row[ord[j]];
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        for (unsigned v = lo; v <= hi; ++v) {
          bool first = true;
          for (std::size_t j = start; j < end; ++j) {
            if (row[ord[j]] != v) continue;
            nord[w] = ord[j];
            row_out[w] = static_cast<std::uint8_t>(v);
            ncut[w] = first;
            first = false;
            ++w;
          }
        }
        start = end;
      }
      ncut[c] = 1;
      if (match_ == static_cast<long>(k)) {
        int cmp = std::memcmp(row_out, best_.data() + k * c, c);
        if (cmp > 0) continue;
        if (cmp == 0) match_ = static_cast<long>(k + 1);
      }
      s_.used[i] = 1;
      dfs(k + 1);
      s_.used[i] = 0;
    }
  }

  const MatrixView& m_;
  Scratch& s_;
  std::vector<std::uint8_t>& best_;
  const Colouring& colours_;
  long match_;  // rows shared by the current prefix and best_, or -1
};

/// Orientations are comparable only when their sorted row colours and
/// sorted column colours agree.
bool colour_key_less(const Colouring& x, const Colouring& y, std::size_t r,
                     int* cmp) {
  auto key = [r](const Colouring& c) {
    std::vector<std::uint32_t> rows(c.begin(), c.begin() + r);
    std::vector<std::uint32_t> cols(c.begin() + r, c.end());
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    rows.push_back(~0u);
    rows.insert(rows.end(), cols.begin(), cols.end());
    return rows;
  };
  auto kx = key(x), ky = key(y);
  *cmp = kx < ky ? -1 : (ky < kx ? 1 : 0);
  return *cmp < 0;
}

CanonicalForm encode(std::size_t rows, std::size_t cols,
                     const std::uint8_t* cells) {
  Scratch& s = scratch();
  MatrixView m{rows, cols, cells};
  if (rows > cols) {
    transpose_into(m, &s.transposed);
    m = {cols, rows, s.transposed.data()};
  }
  refine(m, s, &s.colours);
  auto& best = s.best;
  if (m.rows == m.cols && m.rows > 0) {
    transpose_into(m, &s.tcells);
    MatrixView t{m.cols, m.rows, s.tcells.data()};
    refine(t, s, &s.tcolours);
    int cmp = 0;
    colour_key_less(s.tcolours, s.colours, m.rows, &cmp);
    if (cmp < 0) {
      RowSearch(t, s.tcolours, s, &best, false).run();
    } else {
      RowSearch(m, s.colours, s, &best, false).run();
      if (cmp == 0) RowSearch(t, s.tcolours, s, &best, true).run();
    }
  } else {
    RowSearch(m, s.colours, s, &best, false).run();
  }
  std::string bytes;
  bytes.reserve(2 + m.rows * m.cols);
  bytes.push_back(static_cast<char>(m.rows));
  bytes.push_back(static_cast<char>(m.cols));
  bytes.append(best.begin(), best.begin() + m.rows * m.cols);
  return CanonicalForm(std::move(bytes));
}

}  // namespace

namespace detail {

CanonicalForm canonical_form_dense(std::size_t rows, std::size_t cols,
                                   const std::uint8_t* cells) {
  if (rows > kMaxDim || cols > kMaxDim) {
    fail(ErrorCode::kTooLarge, "canonical forms support classes up to 255");
  }
  return encode(rows, cols, cells);
}

std::vector<std::uint8_t> dense_cells(const BipartiteGraph& g) {
  return cells_of(g);
}

}  // namespace detail

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) {
    fail(ErrorCode::kParse, "canonical form hex has odd length");
  }
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      fail(ErrorCode::kParse, "canonical form hex must be lowercase hex");
    }
    bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  CanonicalForm f(std::move(bytes));
  if (f.bytes().size() < 2 || f.bytes().size() != 2 + f.rows() * f.cols()) {
    fail(ErrorCode::kParse, "canonical form has inconsistent dimensions");
  }
  return f;
}

std::size_t CanonicalForm::rows() const {
  return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]);
}

std::size_t CanonicalForm::cols() const {
  return bytes_.size() < 2 ? 0 : static_cast<unsigned char>(bytes_[1]);
}

CanonicalForm canonical_form(const BipartiteGraph& g) {
  if (!g.is_connected()) {
    fail(ErrorCode::kPrecondition, "canonical forms need a connected graph");
  }
  auto cells = cells_of(g);
  return encode(g.size_a(), g.size_b(), cells.data());
}

CanonicalForm canonical_matrix_form(const BipartiteGraph& g) {
  auto cells = cells_of(g);
  return encode(g.size_a(), g.size_b(), cells.data());
}

bool are_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

BipartiteGraph graph_of(const CanonicalForm& form) {
  const auto& bytes = form.bytes();
  std::size_t r = form.rows(), c = form.cols();
  std::vector<Edge> edges;
  EdgeId id = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      auto mult = static_cast<unsigned char>(bytes[2 + i * c + j]);
      for (unsigned k = 0; k < mult; ++k) {
        edges.push_back({id++, static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j)});
      }
    }
  }
  return BipartiteGraph::from_edges(r, c, std::move(edges));
}

}  // namespace minbrace
