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

#include "minbrace/minbrace.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "minbrace/cuts.hpp"
#include "minbrace/edges.hpp"
#include "minbrace/enumerate.hpp"
#include "minbrace/error.hpp"
#include "minbrace/expand.hpp"
#include "minbrace/families.hpp"
#include "minbrace/graph.hpp"
#include "minbrace/iso.hpp"
#include "minbrace/matching.hpp"

struct mb_graph {
  minbrace::BipartiteGraph g;
};

struct mb_certificate {
  minbrace::MppCertificate cert;
  minbrace::BipartiteGraph source;  // endpoints of e and F
};

struct mb_corpus {
  minbrace::Corpus corpus;
};

struct mb_report {
  minbrace::Report report;
};

namespace {

thread_local std::string last_error;

mb_status status_of(minbrace::ErrorCode code) {
  using minbrace::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return MB_INVALID_ARGUMENT;
    case ErrorCode::kParse: return MB_PARSE_ERROR;
    case ErrorCode::kPrecondition: return MB_PRECONDITION;
    case ErrorCode::kGuardrail: return MB_GUARDRAIL;
    case ErrorCode::kTooLarge: return MB_TOO_LARGE;
  }
  return MB_INTERNAL;
}

template <typename Fn>
mb_status guarded(Fn fn) {
  try {
    last_error.clear();
    fn();
    return MB_OK;
  } catch (const minbrace::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MB_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MB_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) minbrace::fail(minbrace::ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mb_graph* wrap(minbrace::BipartiteGraph g) { return new mb_graph{std::move(g)}; }

template <typename Pred>
mb_status predicate(const mb_graph* g, int* out, Pred pred) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = pred(g->g) ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* mb_last_error(void) { return last_error.c_str(); }

const char* mb_status_name(mb_status status) {
  switch (status) {
    case MB_OK: return "ok";
    case MB_INVALID_ARGUMENT: return "invalid_argument";
    case MB_PARSE_ERROR: return "parse_error";
    case MB_PRECONDITION: return "precondition";
    case MB_GUARDRAIL: return "guardrail";
    case MB_TOO_LARGE: return "too_large";
    case MB_INTERNAL: return "internal";
  }
  return "unknown";
}

void mb_string_free(char* s) { delete[] s; }

mb_status mb_graph_from_text(const char* text, mb_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(minbrace::parse_graph(text));
  });
}

mb_status mb_graph_build(uint32_t size_a, uint32_t size_b,
                         const uint32_t* ends, size_t edge_count,
                         mb_graph** out) {
  return guarded([&] {
    require(out && (ends || edge_count == 0), "null argument");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges.emplace_back(ends[2 * i], ends[2 * i + 1]);
    }
    *out = wrap(minbrace::BipartiteGraph::build(size_a, size_b, edges));
  });
}

mb_status mb_graph_from_hex(const char* hex, mb_graph** out) {
  return guarded([&] {
    require(hex && out, "null argument");
    *out = wrap(minbrace::graph_of(minbrace::CanonicalForm::from_hex(hex)));
  });
}

void mb_graph_free(mb_graph* g) { delete g; }

mb_status mb_graph_to_text(const mb_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(minbrace::serialize_graph(g->g));
  });
}

size_t mb_graph_size_a(const mb_graph* g) { return g ? g->g.size_a() : 0; }
size_t mb_graph_size_b(const mb_graph* g) { return g ? g->g.size_b() : 0; }
size_t mb_graph_edge_count(const mb_graph* g) { return g ? g->g.size() : 0; }

mb_status mb_graph_edge(const mb_graph* g, size_t i, uint32_t* id, uint32_t* a,
                        uint32_t* b) {
  return guarded([&] {
    require(g && id && a && b, "null argument");
    require(i < g->g.size(), "edge position out of range");
    const auto& e = g->g.edges()[i];
    *id = e.id;
    *a = e.a;
    *b = e.b;
  });
}

mb_status mb_canonical_hex(const mb_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(minbrace::canonical_form(g->g).hex());
  });
}

mb_status mb_are_isomorphic(const mb_graph* g, const mb_graph* h, int* out) {
  return guarded([&] {
    require(g && h && out, "null argument");
    *out = minbrace::are_isomorphic(g->g, h->g) ? 1 : 0;
  });
}

mb_status mb_is_matching_covered(const mb_graph* g, int* out) {
  return predicate(g, out, [](const auto& x) {
    return minbrace::is_matching_covered(x);
  });
}

mb_status mb_is_brace(const mb_graph* g, int* out) {
  return predicate(g, out, [](const auto& x) { return minbrace::is_brace(x); });
}

mb_status mb_is_minimal_brace(const mb_graph* g, int* out) {
  return predicate(g, out,
                   [](const auto& x) { return minbrace::is_minimal_brace(x); });
}

mb_status mb_is_mccuaig(const mb_graph* g, int* out) {
  return predicate(g, out,
                   [](const auto& x) { return minbrace::is_mccuaig(x); });
}

mb_status mb_classify_edges(const mb_graph* g, mb_edge_class** out,
                            size_t* count) {
  return guarded([&] {
    require(g && out && count, "null argument");
    auto classes = minbrace::classify_edges(g->g);
    auto* arr = new mb_edge_class[std::max<size_t>(classes.size(), 1)];
    for (size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      const auto& e = g->g.edge(c.edge);
      arr[i] = {c.edge, e.a, e.b, c.removable, c.thin, c.strictly_thin,
                c.index, c.superfluous};
    }
    *out = arr;
    *count = classes.size();
  });
}

void mb_edge_classes_free(mb_edge_class* classes) { delete[] classes; }

mb_status mb_decompose(const mb_graph* g, mb_graph*** leaves, size_t* count) {
  return guarded([&] {
    require(g && leaves && count, "null argument");
    auto result = minbrace::tight_cut_decomposition(g->g);
    std::vector<std::pair<minbrace::CanonicalForm, std::size_t>> order;
    for (std::size_t i = 0; i < result.leaves.size(); ++i) {
      order.emplace_back(minbrace::canonical_form(result.leaves[i]), i);
    }
    std::sort(order.begin(), order.end());
    auto** arr = new mb_graph*[std::max<size_t>(order.size(), 1)];
    for (std::size_t k = 0; k < order.size(); ++k) {
      arr[k] = wrap(std::move(result.leaves[order[k].second]));
    }
    *leaves = arr;
    *count = order.size();
  });
}

void mb_graph_array_free(mb_graph** graphs, size_t count) {
  if (!graphs) return;
  for (size_t i = 0; i < count; ++i) delete graphs[i];
  delete[] graphs;
}

mb_status mb_family_make(const char* name, size_t order, mb_graph** out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto family = minbrace::parse_family(name);
    if (!family) {
      minbrace::fail(minbrace::ErrorCode::kInvalidArgument,
                     std::string("unknown family ") + name);
    }
    *out = wrap(minbrace::make({*family, order}));
  });
}

mb_status mb_find_mpp(const mb_graph* g, mb_certificate** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new mb_certificate{minbrace::find_mpp(g->g), g->g};
  });
}

void mb_certificate_free(mb_certificate* c) { delete c; }

int mb_certificate_index(const mb_certificate* c) {
  return c ? c->cert.index : 0;
}

void mb_certificate_edge(const mb_certificate* c, uint32_t* id, uint32_t* a,
                         uint32_t* b) {
  if (!c || !id || !a || !b) return;
  const auto& e = c->source.edge(c->cert.e);
  *id = e.id;
  *a = e.a;
  *b = e.b;
}

size_t mb_certificate_f_count(const mb_certificate* c) {
  return c ? c->cert.f.size() : 0;
}

mb_status mb_certificate_f(const mb_certificate* c, size_t i, uint32_t* id,
                           uint32_t* a, uint32_t* b) {
  return guarded([&] {
    require(c && id && a && b, "null argument");
    require(i < c->cert.f.size(), "F position out of range");
    const auto& e = c->source.edge(c->cert.f[i]);
    *id = e.id;
    *a = e.a;
    *b = e.b;
  });
}

size_t mb_certificate_witness_count(const mb_certificate* c) {
  return c ? c->cert.witness.size() : 0;
}

mb_status mb_certificate_witness(const mb_certificate* c, size_t i, int* side,
                                 uint32_t* index) {
  return guarded([&] {
    require(c && side && index, "null argument");
    require(i < c->cert.witness.size(), "witness position out of range");
    const auto& v = c->cert.witness[i];
    *side = v.side == minbrace::Side::A ? 0 : 1;
    *index = v.index;
  });
}

int mb_certificate_stable_extension(const mb_certificate* c) {
  return c && c->cert.stable_ext ? 1 : 0;
}

mb_status mb_certificate_j(const mb_certificate* c, mb_graph** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = wrap(c->cert.j);
  });
}

mb_status mb_verify_narrow(const mb_graph* g, const mb_certificate* c, int* ok,
                           const char** reason) {
  return guarded([&] {
    require(g && c && ok, "null argument");
    auto check = minbrace::verify_narrow(g->g, c->cert);
    *ok = check == minbrace::NarrowCheck::kOk ? 1 : 0;
    // to_string returns views of string literals.
    if (reason) *reason = minbrace::to_string(check).data();
  });
}

mb_status mb_enumerate(size_t max_order, unsigned workers,
                       int override_guardrail, mb_corpus** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    minbrace::GenerateOptions options;
    options.max_order = max_order;
    options.workers = workers;
    options.override_guardrail = override_guardrail != 0;
    *out = new mb_corpus{minbrace::generate_braces(options)};
  });
}

void mb_corpus_free(mb_corpus* c) { delete c; }

size_t mb_corpus_size(const mb_corpus* c) { return c ? c->corpus.size() : 0; }

mb_status mb_corpus_record(const mb_corpus* c, size_t i, mb_record* out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(i < c->corpus.size(), "record position out of range");
    const auto& r = c->corpus[i];
    out->order = r.order;
    out->size = r.size;
    out->origin = minbrace::origin_name(r.origin).data();
    out->parent = r.parent ? static_cast<int64_t>(*r.parent) : -1;
  });
}

mb_status mb_corpus_hex(const mb_corpus* c, size_t i, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(i < c->corpus.size(), "record position out of range");
    *out = copy_string(c->corpus[i].form.hex());
  });
}

mb_status mb_corpus_graph(const mb_corpus* c, size_t i, mb_graph** out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(i < c->corpus.size(), "record position out of range");
    *out = wrap(c->corpus.graph(i));
  });
}

mb_status mb_corpus_minimal(const mb_corpus* c, size_t max_order,
                            unsigned workers, size_t** indices,
                            size_t* count) {
  return guarded([&] {
    require(c && indices && count, "null argument");
    auto found = minbrace::minimal_braces(c->corpus, max_order, workers);
    auto* arr = new size_t[std::max<size_t>(found.size(), 1)];
    std::copy(found.begin(), found.end(), arr);
    *indices = arr;
    *count = found.size();
  });
}

void mb_indices_free(size_t* indices) { delete[] indices; }

mb_status mb_brute_force(size_t max_order, size_t min_degree,
                         int override_guardrail, mb_graph*** out,
                         size_t* count) {
  return guarded([&] {
    require(out && count, "null argument");
    auto graphs = minbrace::brute_force_graphs(max_order, min_degree,
                                               override_guardrail != 0);
    auto** arr = new mb_graph*[std::max<size_t>(graphs.size(), 1)];
    for (size_t i = 0; i < graphs.size(); ++i) arr[i] = wrap(std::move(graphs[i]));
    *out = arr;
    *count = graphs.size();
  });
}

mb_status mb_verify(const mb_corpus* c, size_t max_order, unsigned workers,
                    mb_report** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new mb_report{minbrace::verify_all(c->corpus, max_order, workers)};
  });
}

void mb_report_free(mb_report* r) { delete r; }

size_t mb_report_count(const mb_report* r) {
  return r ? r->report.items.size() : 0;
}

mb_status mb_report_item(const mb_report* r, size_t i, const char** name,
                         int* passed, const char** detail) {
  return guarded([&] {
    require(r && name && passed && detail, "null argument");
    require(i < r->report.items.size(), "report position out of range");
    const auto& item = r->report.items[i];
    *name = item.name.c_str();
    *passed = item.passed ? 1 : 0;
    *detail = item.detail.c_str();
  });
}

}  // extern "C"
