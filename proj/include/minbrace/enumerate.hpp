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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minbrace/graph.hpp"
#include "minbrace/iso.hpp"

namespace minbrace {

constexpr std::size_t kDefaultMaxOrder = 14;
constexpr std::size_t kHardMaxOrder = 16;
constexpr std::size_t kBruteForceMaxOrder = 10;

enum class Origin { kSeed, kIndexZero, kIndexOne, kIndexTwo };

std::string_view origin_name(Origin o);

struct CorpusRecord {
  CanonicalForm form;
  std::size_t order = 0;
  std::size_t size = 0;
  Origin origin = Origin::kSeed;
  std::optional<std::size_t> parent;  // record index; chains end at a seed
};

/// Simple braces keyed by canonical form, sorted by (order, form).
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<CorpusRecord> records);

  const std::vector<CorpusRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  const CorpusRecord& operator[](std::size_t i) const { return records_.at(i); }
  std::optional<std::size_t> find(const CanonicalForm& form) const;
  /// Record indices with the given order, ascending.
  std::vector<std::size_t> of_order(std::size_t order) const;
  BipartiteGraph graph(std::size_t i) const;
  std::size_t max_order() const;

 private:
  std::vector<CorpusRecord> records_;
  std::unordered_map<CanonicalForm, std::size_t> index_;
};

struct GenerateOptions {
  std::size_t max_order = kDefaultMaxOrder;
  bool override_guardrail = false;
  unsigned workers = 1;
  /// Re-checks every new record for simplicity and the brace property.
  bool check_invariants = false;
};

/// Seeds with the McCuaig family and closes under single expansions, one
/// order at a time. Output does not depend on the worker count.
Corpus generate_braces(const GenerateOptions& options);

/// Connected simple bipartite graphs with balanced classes, every degree at
/// least min_degree, of every order up to max_order. Built by adding edges
/// one at a time to an empty graph, keeping one graph per isomorphism class
/// at every step. Sorted by (order, form).
std::vector<BipartiteGraph> brute_force_graphs(std::size_t max_order,
                                               std::size_t min_degree,
                                               bool override_guardrail = false);

/// Minimal braces of the corpus up to max_order, as record indices.
std::vector<std::size_t> minimal_braces(const Corpus& corpus,
                                        std::size_t max_order,
                                        unsigned workers = 1);

struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;
  bool passed() const;
};

/// Edge bound for minimal braces: m <= 5n - 10 outside the small exceptions,
/// the equality set, a narrow pair for every minimal brace outside the
/// McCuaig family, and the slack identity
///   5n_G - 10 - m_G = 5n_J - 10 - m_J + 3 index - 1 - |F|
/// on every certificate.
Report verify_bound(const Corpus& corpus, std::size_t max_order,
                    unsigned workers = 1);

/// verify_bound plus the strictly thin and thin edge counts over the whole
/// corpus.
Report verify_all(const Corpus& corpus, std::size_t max_order,
                  unsigned workers = 1);

}  // namespace minbrace
