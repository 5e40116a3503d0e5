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
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "minbrace/graph.hpp"

namespace minbrace {

/// Byte string identifying a bipartite multigraph up to relabelling within
/// classes and exchange of the two classes.
///
/// Layout: rows, cols, then rows*cols multiplicities in row-major order. Rows
/// are the smaller class (either class when balanced), and the ordering is
/// the lexicographically least over all row and column permutations, plus
/// the transpose when the classes have equal size.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;
  static CanonicalForm from_hex(std::string_view hex);

  std::size_t rows() const;
  std::size_t cols() const;

  friend auto operator<=>(const CanonicalForm&,
                          const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

/// Rejects disconnected graphs, whose bipartition is not unique.
CanonicalForm canonical_form(const BipartiteGraph& g);

/// Same encoding with no connectivity requirement: equality then means the
/// two graphs agree up to permutations inside classes and a class swap. Used
/// for intermediate graphs during enumeration.
CanonicalForm canonical_matrix_form(const BipartiteGraph& g);

bool are_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h);

/// Rebuilds the graph a form encodes; edge ids run in row-major order.
BipartiteGraph graph_of(const CanonicalForm& form);

}  // namespace minbrace

template <>
struct std::hash<minbrace::CanonicalForm> {
  std::size_t operator()(const minbrace::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes());
  }
};
