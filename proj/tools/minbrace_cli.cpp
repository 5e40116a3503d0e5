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

// Command line front end. Talks to the library only through minbrace.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minbrace/minbrace.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(mb_status s) {
  if (s != MB_OK) {
    throw Failure{kExitUsage, std::string(mb_status_name(s)) + ": " +
                                  mb_last_error()};
  }
}

struct GraphFree {
  void operator()(mb_graph* g) const { mb_graph_free(g); }
};
struct CertificateFree {
  void operator()(mb_certificate* c) const { mb_certificate_free(c); }
};
struct CorpusFree {
  void operator()(mb_corpus* c) const { mb_corpus_free(c); }
};
struct ReportFree {
  void operator()(mb_report* r) const { mb_report_free(r); }
};
using Graph = std::unique_ptr<mb_graph, GraphFree>;
using Certificate = std::unique_ptr<mb_certificate, CertificateFree>;
using Corpus = std::unique_ptr<mb_corpus, CorpusFree>;
using Report = std::unique_ptr<mb_report, ReportFree>;

std::string take(char* s) {
  std::string out(s);
  mb_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load(const std::string& path) {
  std::string text = read_input(path);
  mb_graph* g = nullptr;
  check(mb_graph_from_text(text.c_str(), &g));
  return Graph(g);
}

std::string text_of(const mb_graph* g) {
  char* s = nullptr;
  check(mb_graph_to_text(g, &s));
  return take(s);
}

std::string hex_of(const mb_graph* g) {
  char* s = nullptr;
  check(mb_canonical_hex(g, &s));
  return take(s);
}

bool ask(mb_status (*pred)(const mb_graph*, int*), const mb_graph* g) {
  int out = 0;
  check(pred(g, &out));
  return out != 0;
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string input;
  bool json = false;
  std::size_t max_order = 14;
  bool minimal = false;
  std::string family;
  std::size_t order = 0;
  unsigned workers = 1;
  bool override_guardrail = false;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int run_check(const Options& o) {
  Graph g = load(o.input);
  bool mc = ask(mb_is_matching_covered, g.get());
  bool brace = ask(mb_is_brace, g.get());
  bool minimal = ask(mb_is_minimal_brace, g.get());
  bool mccuaig = ask(mb_is_mccuaig, g.get());
  if (o.json) {
    emit({{"matching_covered", mc},
          {"brace", brace},
          {"minimal", minimal},
          {"mccuaig", mccuaig}});
  } else {
    std::cout << "matching_covered=" << flag(mc) << " brace=" << flag(brace)
              << " minimal=" << flag(minimal) << " mccuaig=" << flag(mccuaig)
              << '\n';
  }
  return kExitOk;
}

int run_classify(const Options& o) {
  Graph g = load(o.input);
  mb_edge_class* classes = nullptr;
  std::size_t count = 0;
  check(mb_classify_edges(g.get(), &classes, &count));
  std::unique_ptr<mb_edge_class, void (*)(mb_edge_class*)> hold(
      classes, mb_edge_classes_free);
  for (std::size_t i = 0; i < count; ++i) {
    const mb_edge_class& c = classes[i];
    if (o.json) {
      emit({{"id", c.edge},
            {"a", c.a},
            {"b", c.b},
            {"removable", c.removable != 0},
            {"thin", c.thin != 0},
            {"strictly_thin", c.strictly_thin != 0},
            {"index", c.index},
            {"superfluous", c.superfluous != 0}});
    } else {
      std::cout << "id=" << c.edge << " a=" << c.a << " b=" << c.b
                << " removable=" << flag(c.removable)
                << " thin=" << flag(c.thin)
                << " strictly_thin=" << flag(c.strictly_thin)
                << " index=" << c.index
                << " superfluous=" << flag(c.superfluous) << '\n';
    }
  }
  return kExitOk;
}

int run_decompose(const Options& o) {
  Graph g = load(o.input);
  mb_graph** leaves = nullptr;
  std::size_t count = 0;
  check(mb_decompose(g.get(), &leaves, &count));
  std::vector<Graph> hold;
  for (std::size_t i = 0; i < count; ++i) hold.emplace_back(leaves[i]);
  mb_graph_array_free(leaves, 0);
  for (const Graph& leaf : hold) {
    std::string hex = hex_of(leaf.get());
    std::size_t order = mb_graph_size_a(leaf.get()) + mb_graph_size_b(leaf.get());
    std::size_t size = mb_graph_edge_count(leaf.get());
    if (o.json) {
      emit({{"form", hex}, {"order", order}, {"size", size}});
    } else {
      std::cout << hex << ' ' << order << ' ' << size << '\n';
    }
  }
  return kExitOk;
}

int run_generate(const Options& o) {
  mb_graph* raw = nullptr;
  check(mb_family_make(o.family.c_str(), o.order, &raw));
  Graph g(raw);
  if (o.json) {
    emit({{"family", o.family},
          {"order", mb_graph_size_a(raw) + mb_graph_size_b(raw)},
          {"size", mb_graph_edge_count(raw)},
          {"form", hex_of(raw)},
          {"graph", text_of(raw)}});
  } else {
    std::cout << text_of(raw);
  }
  return kExitOk;
}

Corpus build_corpus(const Options& o) {
  mb_corpus* raw = nullptr;
  check(mb_enumerate(o.max_order, o.workers, o.override_guardrail, &raw));
  return Corpus(raw);
}

int run_enumerate(const Options& o) {
  Corpus corpus = build_corpus(o);
  std::size_t n = mb_corpus_size(corpus.get());
  std::size_t* idx = nullptr;
  std::size_t count = 0;
  check(mb_corpus_minimal(corpus.get(), o.max_order, o.workers, &idx, &count));
  std::vector<bool> minimal(n, false);
  for (std::size_t i = 0; i < count; ++i) minimal[idx[i]] = true;
  mb_indices_free(idx);

  std::vector<std::string> hexes(n);
  for (std::size_t i = 0; i < n; ++i) {
    char* s = nullptr;
    check(mb_corpus_hex(corpus.get(), i, &s));
    hexes[i] = take(s);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (o.minimal && !minimal[i]) continue;
    mb_record r;
    check(mb_corpus_record(corpus.get(), i, &r));
    mb_graph* raw = nullptr;
    check(mb_corpus_graph(corpus.get(), i, &raw));
    Graph g(raw);
    bool mccuaig = ask(mb_is_mccuaig, raw);
    std::string provenance = r.origin;
    if (r.parent >= 0) provenance += ":" + hexes[static_cast<std::size_t>(r.parent)];
    if (o.json) {
      emit({{"form", hexes[i]},
            {"order", r.order},
            {"size", r.size},
            {"brace", true},
            {"minimal", static_cast<bool>(minimal[i])},
            {"mccuaig", mccuaig},
            {"provenance", provenance}});
    } else {
      std::cout << hexes[i] << " order=" << r.order << " size=" << r.size
                << " brace=true minimal=" << flag(minimal[i])
                << " mccuaig=" << flag(mccuaig) << " provenance=" << provenance
                << '\n';
    }
  }
  return kExitOk;
}

json edge_json(uint32_t id, uint32_t a, uint32_t b) {
  return {{"id", id}, {"a", a}, {"b", b}};
}

int run_mpp(const Options& o) {
  Graph g = load(o.input);
  mb_certificate* raw = nullptr;
  check(mb_find_mpp(g.get(), &raw));
  Certificate cert(raw);

  uint32_t id = 0, a = 0, b = 0;
  mb_certificate_edge(raw, &id, &a, &b);
  json e = edge_json(id, a, b);
  json f = json::array();
  for (std::size_t i = 0; i < mb_certificate_f_count(raw); ++i) {
    check(mb_certificate_f(raw, i, &id, &a, &b));
    f.push_back(edge_json(id, a, b));
  }
  json witness = json::array();
  for (std::size_t i = 0; i < mb_certificate_witness_count(raw); ++i) {
    int side = 0;
    uint32_t index = 0;
    check(mb_certificate_witness(raw, i, &side, &index));
    witness.push_back((side == 0 ? "A" : "B") + std::to_string(index));
  }
  mb_graph* j_raw = nullptr;
  check(mb_certificate_j(raw, &j_raw));
  Graph j(j_raw);
  int ok = 0;
  const char* reason = nullptr;
  check(mb_verify_narrow(g.get(), raw, &ok, &reason));

  int index = mb_certificate_index(raw);
  bool stable = mb_certificate_stable_extension(raw) != 0;
  if (o.json) {
    emit({{"e", e},
          {"index", index},
          {"f", f},
          {"witness", witness},
          {"stable_extension", stable},
          {"verified", ok != 0},
          {"check", reason},
          {"j", text_of(j.get())}});
  } else {
    auto edge_text = [](const json& x) {
      return std::to_string(x["id"].get<uint32_t>()) + ":" +
             std::to_string(x["a"].get<uint32_t>()) + "-" +
             std::to_string(x["b"].get<uint32_t>());
    };
    std::cout << "e=" << edge_text(e) << " index=" << index << " f=";
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::cout << (i ? "," : "") << edge_text(f[i]);
    }
    std::cout << " witness=";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      std::cout << (i ? "," : "") << witness[i].get<std::string>();
    }
    std::cout << " stable_extension=" << flag(stable) << " check=" << reason
              << '\n'
              << text_of(j.get());
  }
  return ok ? kExitOk : kExitViolation;
}

int run_verify(const Options& o) {
  Corpus corpus = build_corpus(o);
  mb_report* raw = nullptr;
  check(mb_verify(corpus.get(), o.max_order, o.workers, &raw));
  Report report(raw);
  bool all = true;
  for (std::size_t i = 0; i < mb_report_count(raw); ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    check(mb_report_item(raw, i, &name, &passed, &detail));
    all = all && passed;
    if (o.json) {
      emit({{"check", name}, {"passed", passed != 0}, {"detail", detail}});
    } else {
      std::cout << (passed ? "PASS " : "FAIL ") << name << ": " << detail
                << '\n';
    }
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal braces: predicates, expansions and enumeration"};
  app.require_subcommand(1);
  Options o;

  auto graph_verb = [&](const char* name, const char* about) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("file", o.input, "Graph file, '-' or absent for stdin");
    sub->add_flag("--json", o.json, "One JSON object per line");
    return sub;
  };
  auto* check_cmd = graph_verb("check", "Matching covered, brace, minimal and McCuaig tests");
  auto* classify_cmd = graph_verb("classify-edges", "Per-edge removable, thin and superfluous flags");
  auto* decompose_cmd = graph_verb("decompose", "Tight cut decomposition leaves");
  auto* mpp_cmd = graph_verb("mpp", "Narrow minimality-preserving pair certificate");

  auto* generate_cmd = app.add_subcommand("generate", "Named family member");
  generate_cmd->add_option("--family", o.family, "K2 C4 K33 B8plus M10 Q10 Q10plus Q12 B12 biwheel prism moebius Q")
      ->required();
  generate_cmd->add_option("--order", o.order, "Order for parameterized families");
  generate_cmd->add_flag("--json", o.json, "One JSON object per line");

  auto corpus_verb = [&](const char* name, const char* about) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--max-order", o.max_order, "Largest order, even");
    sub->add_option("--workers", o.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--override-guardrail", o.override_guardrail,
                  "Allow orders above 14");
    sub->add_flag("--json", o.json, "One JSON object per line");
    return sub;
  };
  auto* enumerate_cmd = corpus_verb("enumerate", "Simple braces up to an order");
  enumerate_cmd->add_flag("--minimal", o.minimal, "Only minimal braces");
  auto* verify_cmd = corpus_verb("verify", "Run every check over the corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(o);
    if (classify_cmd->parsed()) return run_classify(o);
    if (decompose_cmd->parsed()) return run_decompose(o);
    if (mpp_cmd->parsed()) return run_mpp(o);
    if (generate_cmd->parsed()) return run_generate(o);
    if (enumerate_cmd->parsed()) return run_enumerate(o);
    if (verify_cmd->parsed()) return run_verify(o);
  } catch (const Failure& f) {
    std::cerr << "minbrace: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}
