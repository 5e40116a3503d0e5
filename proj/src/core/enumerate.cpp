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

#include "minbrace/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "minbrace/edges.hpp"
#include "minbrace/error.hpp"
#include "minbrace/expand.hpp"
#include "minbrace/families.hpp"
#include "minbrace/matching.hpp"
#include "canon.hpp"
#include "parallel.hpp"

namespace minbrace {

namespace {

constexpr std::size_t kBatch = 2048;

void check_guardrail(std::size_t max_order, std::size_t limit, bool override,
                     const char* what) {
  if (max_order % 2 != 0) {
    fail(ErrorCode::kInvalidArgument, "max order must be even");
  }
  if (max_order > kHardMaxOrder && !override) {
    fail(ErrorCode::kGuardrail,
         std::string(what) + " above order " + std::to_string(kHardMaxOrder) +
             " is not supported");
  }
  if (max_order > limit && !override) {
    fail(ErrorCode::kGuardrail,
         std::string(what) + " above order " + std::to_string(limit) +
             " needs the guardrail override");
  }
}

Origin origin_of(int index) {
  switch (index) {
    case 0: return Origin::kIndexZero;
    case 1: return Origin::kIndexOne;
    default: return Origin::kIndexTwo;
  }
}

struct Candidate {
  CanonicalForm form;
  Origin origin = Origin::kSeed;
  std::size_t parent = 0;
};

class Builder {
 public:
  explicit Builder(const GenerateOptions& options)
      : options_(options), pending_(options.max_order + 5) {}

  Corpus run() {
    auto seeds = mccuaig_members(options_.max_order);
    for (std::size_t order = 2; order <= options_.max_order; order += 2) {
      const std::size_t layer_start = records_.size();
      for (const auto& g : seeds) {
        if (g.order() == order) insert(canonical_form(g), Origin::kSeed, {});
      }
      for (auto& c : pending_[order]) insert(c.form, c.origin, c.parent);
      pending_[order].clear();
      pending_[order].shrink_to_fit();
      // Index zero expansions land in this layer and are picked up by later
      // batches.
      for (std::size_t i = layer_start; i < records_.size();) {
        const std::size_t end = std::min(records_.size(), i + kBatch);
        auto found = detail::parallel_map(
            end - i, options_.workers,
            [&](std::size_t k) { return expansions_of(i + k); });
        for (std::size_t k = 0; k < found.size(); ++k) {
          for (auto& c : found[k]) {
            const std::size_t target = graph_order(c.form);
            if (target == order) {
              insert(std::move(c.form), c.origin, c.parent);
            } else {
              pending_[target].push_back(std::move(c));
            }
          }
        }
        i = end;
      }
    }
    return finish();
  }

 private:
  static std::size_t graph_order(const CanonicalForm& f) {
    return f.rows() + f.cols();
  }

  std::vector<Candidate> expansions_of(std::size_t i) const {
    const auto& form = records_[i].form;
    const std::size_t r = form.rows(), c = form.cols();
    std::vector<Candidate> out;
    std::unordered_set<CanonicalForm> local;
    auto keep = [&](CanonicalForm f, Origin origin) {
      if (index_.count(f) || !local.insert(f).second) return;
      out.push_back({std::move(f), origin, i});
    };
    // Index zero straight on the matrix: adding an edge to a brace always
    // gives a brace, and no graph object is needed.
    std::vector<std::uint8_t> cells(form.bytes().begin() + 2,
                                    form.bytes().end());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k]) continue;
      cells[k] = 1;
      keep(detail::canonical_form_dense(r, c, cells.data()), Origin::kIndexZero);
      cells[k] = 0;
    }
    auto h = graph_of(form);
    for_each_expansion(h, options_.max_order, 6u, [&](const Expansion& x) {
      keep(canonical_form(x.graph), origin_of(x.index));
    });
    return out;
  }

  void insert(CanonicalForm form, Origin origin,
              std::optional<std::size_t> parent) {
    if (index_.count(form)) return;
    CorpusRecord r;
    r.order = graph_order(form);
    if (options_.check_invariants) {
      auto g = graph_of(form);
      if (!g.is_simple() || !is_brace(g)) {
        fail(ErrorCode::kPrecondition,
             "generated graph is not a simple brace: " + form.hex());
      }
    }
    r.size = 0;
    for (unsigned char c : form.bytes().substr(2)) r.size += c;
    r.form = form;
    r.origin = origin;
    r.parent = parent;
    index_.emplace(std::move(form), records_.size());
    records_.push_back(std::move(r));
  }

  Corpus finish() {
    std::vector<std::size_t> perm(records_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
      const auto& rx = records_[x];
      const auto& ry = records_[y];
      if (rx.order != ry.order) return rx.order < ry.order;
      return rx.form < ry.form;
    });
    std::vector<std::size_t> where(records_.size());
    for (std::size_t k = 0; k < perm.size(); ++k) where[perm[k]] = k;
    std::vector<CorpusRecord> sorted;
    sorted.reserve(records_.size());
    for (std::size_t k : perm) {
      CorpusRecord r = std::move(records_[k]);
      if (r.parent) r.parent = where[*r.parent];
      sorted.push_back(std::move(r));
    }
    return Corpus(std::move(sorted));
  }

  GenerateOptions options_;
  std::vector<CorpusRecord> records_;
  std::unordered_map<CanonicalForm, std::size_t> index_;
  std::vector<std::vector<Candidate>> pending_;
};

std::size_t min_degree(const BipartiteGraph& g) {
  std::size_t d = g.order() == 0 ? 0 : SIZE_MAX;
  for (Vertex v : g.vertices()) d = std::min(d, g.degree(v));
  return d;
}

std::string join_hex(const std::vector<CanonicalForm>& forms) {
  std::string out;
  for (const auto& f : forms) {
    if (!out.empty()) out += ' ';
    out += f.hex();
  }
  return out;
}

// Minimal braces whose edge count is exempt from the bound.
std::vector<CanonicalForm> bound_exceptions() {
  std::vector<CanonicalForm> out;
  for (Family f : {Family::kK2, Family::kC4, Family::kK33, Family::kQ10Plus}) {
    out.push_back(canonical_form(make({f, 0})));
  }
  out.push_back(canonical_form(make_biwheel(8)));
  out.push_back(canonical_form(make_biwheel(10)));
  return out;
}

std::vector<CanonicalForm> expected_equality(std::size_t max_order) {
  std::vector<CanonicalForm> out;
  if (max_order >= 10) out.push_back(canonical_form(make_moebius(10)));
  if (max_order >= 12) out.push_back(canonical_form(make_biwheel(12)));
  for (std::size_t order = 12; order <= max_order; order += 2) {
    out.push_back(canonical_form(make_q(order)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct BoundFinding {
  bool over = false;
  bool equal = false;
  bool certified = true;
  std::string narrow_failure;
  bool slack_ok = true;
  bool outside_family = false;
};

}  // namespace

std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::kSeed: return "seed";
    case Origin::kIndexZero: return "index0";
    case Origin::kIndexOne: return "index1";
    case Origin::kIndexTwo: return "index2";
  }
  return "unknown";
}

Corpus::Corpus(std::vector<CorpusRecord> records)
    : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    index_.emplace(records_[i].form, i);
  }
}

std::optional<std::size_t> Corpus::find(const CanonicalForm& form) const {
  auto it = index_.find(form);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Corpus::of_order(std::size_t order) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].order == order) out.push_back(i);
  }
  return out;
}

BipartiteGraph Corpus::graph(std::size_t i) const {
  return graph_of(records_.at(i).form);
}

std::size_t Corpus::max_order() const {
  return records_.empty() ? 0 : records_.back().order;
}

Corpus generate_braces(const GenerateOptions& options) {
  check_guardrail(options.max_order, kDefaultMaxOrder,
                  options.override_guardrail, "brace generation");
  return Builder(options).run();
}

std::vector<BipartiteGraph> brute_force_graphs(std::size_t max_order,
                                               std::size_t min_deg,
                                               bool override_guardrail) {
  check_guardrail(max_order, kBruteForceMaxOrder, override_guardrail,
                  "brute-force enumeration");
  std::vector<std::pair<CanonicalForm, BipartiteGraph>> found;
  for (std::uint32_t n = 1; 2 * n <= max_order; ++n) {
    // Level k holds one n-by-n graph with k edges per isomorphism class.
    std::set<CanonicalForm> level{
        canonical_matrix_form(BipartiteGraph::build(n, n, {}))};
    while (!level.empty()) {
      std::set<CanonicalForm> next;
      for (const auto& form : level) {
        auto g = graph_of(form);
        if (g.is_connected() && min_degree(g) >= min_deg) {
          found.emplace_back(canonical_form(g), g);
        }
        for (std::uint32_t a = 0; a < n; ++a) {
          for (std::uint32_t b = 0; b < n; ++b) {
            if (!g.adjacent(a, b)) {
              next.insert(canonical_matrix_form(add_edge(g, a, b)));
            }
          }
        }
      }
      level = std::move(next);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.second.order() != y.second.order()) {
      return x.second.order() < y.second.order();
    }
    return x.first < y.first;
  });
  std::vector<BipartiteGraph> out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<std::size_t> minimal_braces(const Corpus& corpus,
                                        std::size_t max_order,
                                        unsigned workers) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].order <= max_order) candidates.push_back(i);
  }
  auto flags = detail::parallel_map(
      candidates.size(), workers, [&](std::size_t k) -> char {
        return is_minimal_brace(corpus.graph(candidates[k])) ? 1 : 0;
      });
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (flags[k]) out.push_back(candidates[k]);
  }
  return out;
}

bool Report::passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& c) { return c.passed; });
}

Report verify_bound(const Corpus& corpus, std::size_t max_order,
                    unsigned workers) {
  auto minimal = minimal_braces(corpus, max_order, workers);
  const auto exceptions = bound_exceptions();
  auto findings = detail::parallel_map(
      minimal.size(), workers, [&](std::size_t k) {
        BoundFinding out;
        const auto& rec = corpus[minimal[k]];
        auto g = corpus.graph(minimal[k]);
        const long n = static_cast<long>(rec.order / 2);
        const long m = static_cast<long>(rec.size);
        const bool exempt = std::find(exceptions.begin(), exceptions.end(),
                                      rec.form) != exceptions.end();
        if (!exempt) {
          out.over = m > 5 * n - 10;
          out.equal = m == 5 * n - 10;
        }
        if (rec.order >= 6 && !is_mccuaig(g)) {
          out.outside_family = true;
          auto cert = find_mpp(g);
          auto check = verify_narrow(g, cert);
          if (check != NarrowCheck::kOk) {
            out.certified = false;
            out.narrow_failure = std::string(to_string(check));
          }
          const long n_j = static_cast<long>(cert.j.order() / 2);
          const long m_j = static_cast<long>(cert.j.size());
          const long i = cert.index;
          const long f = static_cast<long>(cert.f.size());
          out.slack_ok = (5 * n - 10 - m) == (5 * n_j - 10 - m_j) + 3 * i - 1 - f &&
                         3 * i - 1 - f >= 0;
        }
        return out;
      });

  Report report;
  CheckItem bound{"extremal-bound", true, ""};
  CheckItem equality{"equality-set", true, ""};
  CheckItem narrow{"narrow-pairs", true, ""};
  CheckItem slack{"slack-identity", true, ""};
  std::vector<CanonicalForm> equal_set;
  std::size_t certified = 0;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const auto& f = findings[k];
    const auto& hex = corpus[minimal[k]].form.hex();
    if (f.over) {
      bound.passed = false;
      bound.detail += (bound.detail.empty() ? "" : " ") + hex;
    }
    if (f.equal) equal_set.push_back(corpus[minimal[k]].form);
    if (f.outside_family) {
      if (f.certified) {
        ++certified;
      } else {
        narrow.passed = false;
        narrow.detail += (narrow.detail.empty() ? "" : " ") + hex + ":" +
                         f.narrow_failure;
      }
      if (!f.slack_ok) {
        slack.passed = false;
        slack.detail += (slack.detail.empty() ? "" : " ") + hex;
      }
    }
  }
  std::sort(equal_set.begin(), equal_set.end());
  if (equal_set != expected_equality(max_order)) {
    equality.passed = false;
    equality.detail = "found " + join_hex(equal_set);
  } else {
    equality.detail = std::to_string(equal_set.size()) + " graphs";
  }
  if (bound.passed) {
    bound.detail = std::to_string(minimal.size()) + " minimal braces";
  }
  if (narrow.passed) {
    narrow.detail = std::to_string(certified) + " certificates";
  }
  report.items = {bound, equality, narrow, slack};
  return report;
}

Report verify_all(const Corpus& corpus, std::size_t max_order,
                  unsigned workers) {
  struct EdgeFinding {
    bool family = false;
    bool has_strictly_thin = false;
    std::size_t thin = 0;
  };
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].order >= 6 && corpus[i].order <= max_order) {
      targets.push_back(i);
    }
  }
  auto findings = detail::parallel_map(
      targets.size(), workers, [&](std::size_t k) {
        EdgeFinding out;
        auto g = corpus.graph(targets[k]);
        out.family = is_mccuaig(g);
        for (const Edge& e : g.edges()) {
          auto h = retract(delete_edge(g, e.id));
          if (!is_brace(h)) continue;
          ++out.thin;
          if (h.is_simple()) out.has_strictly_thin = true;
          // Outside the family one strictly thin edge and two thin ones
          // settle everything.
          if (!out.family && out.has_strictly_thin && out.thin >= 2) break;
        }
        return out;
      });
  CheckItem strictly{"strictly-thin-outside-family", true, ""};
  CheckItem family{"family-without-strictly-thin", true, ""};
  CheckItem thin{"two-thin-edges", true, ""};
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto& f = findings[k];
    const auto hex = corpus[targets[k]].form.hex();
    auto note = [&](CheckItem& item) {
      item.passed = false;
      item.detail += (item.detail.empty() ? "" : " ") + hex;
    };
    if (!f.family && !f.has_strictly_thin) note(strictly);
    if (f.family && f.has_strictly_thin) note(family);
    if (f.thin < 2) note(thin);
  }
  for (auto* item : {&strictly, &family, &thin}) {
    if (item->passed) item->detail = std::to_string(targets.size()) + " braces";
  }
  Report report = verify_bound(corpus, max_order, workers);
  report.items.insert(report.items.begin(), {strictly, family, thin});
  return report;
}

}  // namespace minbrace
