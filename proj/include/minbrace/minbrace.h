/* Copyright 2026 The minbrace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MINBRACE_MINBRACE_H_
#define MINBRACE_MINBRACE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MB_API __declspec(dllexport)
#else
#define MB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mb_status {
  MB_OK = 0,
  MB_INVALID_ARGUMENT = 1,
  MB_PARSE_ERROR = 2,
  MB_PRECONDITION = 3,
  MB_GUARDRAIL = 4,
  MB_TOO_LARGE = 5,
  MB_INTERNAL = 6
} mb_status;

typedef struct mb_graph mb_graph;
typedef struct mb_certificate mb_certificate;
typedef struct mb_corpus mb_corpus;
typedef struct mb_report mb_report;

/* Message of the last failed call on this thread; empty after success. */
MB_API const char* mb_last_error(void);
MB_API const char* mb_status_name(mb_status status);
/* Frees strings returned through char** out-parameters. */
MB_API void mb_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Text format: a header line "bipartite <nA> <nB>", then one "<a> <b>" line
 * per edge; '#' starts a comment. */
MB_API mb_status mb_graph_from_text(const char* text, mb_graph** out);
/* ends holds 2 * edge_count indices (a0, b0, a1, b1, ...); ids follow the
 * input order. */
MB_API mb_status mb_graph_build(uint32_t size_a, uint32_t size_b,
                                const uint32_t* ends, size_t edge_count,
                                mb_graph** out);
MB_API mb_status mb_graph_from_hex(const char* hex, mb_graph** out);
MB_API void mb_graph_free(mb_graph* g);
MB_API mb_status mb_graph_to_text(const mb_graph* g, char** out);

MB_API size_t mb_graph_size_a(const mb_graph* g);
MB_API size_t mb_graph_size_b(const mb_graph* g);
MB_API size_t mb_graph_edge_count(const mb_graph* g);
/* The i-th edge by ascending id. */
MB_API mb_status mb_graph_edge(const mb_graph* g, size_t i, uint32_t* id,
                               uint32_t* a, uint32_t* b);

MB_API mb_status mb_canonical_hex(const mb_graph* g, char** out);
MB_API mb_status mb_are_isomorphic(const mb_graph* g, const mb_graph* h,
                                   int* out);

/* ---- predicates ------------------------------------------------------ */

MB_API mb_status mb_is_matching_covered(const mb_graph* g, int* out);
MB_API mb_status mb_is_brace(const mb_graph* g, int* out);
MB_API mb_status mb_is_minimal_brace(const mb_graph* g, int* out);
MB_API mb_status mb_is_mccuaig(const mb_graph* g, int* out);

typedef struct mb_edge_class {
  uint32_t edge;
  uint32_t a;
  uint32_t b;
  int removable;
  int thin;
  int strictly_thin;
  int index;
  int superfluous;
} mb_edge_class;

/* G must be a simple brace of order six or more. Free with
 * mb_edge_classes_free. */
MB_API mb_status mb_classify_edges(const mb_graph* g, mb_edge_class** out,
                                   size_t* count);
MB_API void mb_edge_classes_free(mb_edge_class* classes);

/* ---- decomposition and families -------------------------------------- */

/* Tight cut decomposition leaves, sorted by canonical form. Free with
 * mb_graph_array_free. */
MB_API mb_status mb_decompose(const mb_graph* g, mb_graph*** leaves,
                              size_t* count);
MB_API void mb_graph_array_free(mb_graph** graphs, size_t count);

/* Names: K2 C4 K33 B8plus M10 Q10 Q10plus Q12 B12 biwheel prism moebius Q.
 * order is read for the last four. */
MB_API mb_status mb_family_make(const char* name, size_t order, mb_graph** out);

/* ---- minimality-preserving pairs ------------------------------------- */

MB_API mb_status mb_find_mpp(const mb_graph* g, mb_certificate** out);
MB_API void mb_certificate_free(mb_certificate* c);
MB_API int mb_certificate_index(const mb_certificate* c);
MB_API void mb_certificate_edge(const mb_certificate* c, uint32_t* id,
                                uint32_t* a, uint32_t* b);
MB_API size_t mb_certificate_f_count(const mb_certificate* c);
MB_API mb_status mb_certificate_f(const mb_certificate* c, size_t i,
                                  uint32_t* id, uint32_t* a, uint32_t* b);
MB_API size_t mb_certificate_witness_count(const mb_certificate* c);
/* side is 0 for class A and 1 for class B. */
MB_API mb_status mb_certificate_witness(const mb_certificate* c, size_t i,
                                        int* side, uint32_t* index);
MB_API int mb_certificate_stable_extension(const mb_certificate* c);
/* A copy of J; free with mb_graph_free. */
MB_API mb_status mb_certificate_j(const mb_certificate* c, mb_graph** out);
/* ok is 1 when every claim holds; reason names the first failed check
 * ("ok" otherwise) and stays valid for the life of the program. */
MB_API mb_status mb_verify_narrow(const mb_graph* g, const mb_certificate* c,
                                  int* ok, const char** reason);

/* ---- enumeration ----------------------------------------------------- */

MB_API mb_status mb_enumerate(size_t max_order, unsigned workers,
                              int override_guardrail, mb_corpus** out);
MB_API void mb_corpus_free(mb_corpus* c);
MB_API size_t mb_corpus_size(const mb_corpus* c);

typedef struct mb_record {
  size_t order;
  size_t size;
  const char* origin; /* seed, index0, index1 or index2 */
  int64_t parent;     /* record index, -1 for seeds */
} mb_record;

/* Records are sorted by (order, canonical form). */
MB_API mb_status mb_corpus_record(const mb_corpus* c, size_t i, mb_record* out);
MB_API mb_status mb_corpus_hex(const mb_corpus* c, size_t i, char** out);
MB_API mb_status mb_corpus_graph(const mb_corpus* c, size_t i, mb_graph** out);
/* Record indices of the minimal braces up to max_order, ascending. Free
 * with mb_indices_free. */
MB_API mb_status mb_corpus_minimal(const mb_corpus* c, size_t max_order,
                                   unsigned workers, size_t** indices,
                                   size_t* count);
MB_API void mb_indices_free(size_t* indices);

/* Connected simple balanced bipartite graphs with every degree at least
 * min_degree, sorted by (order, canonical form). */
MB_API mb_status mb_brute_force(size_t max_order, size_t min_degree,
                                int override_guardrail, mb_graph*** out,
                                size_t* count);

/* Full harness over the corpus up to max_order. */
MB_API mb_status mb_verify(const mb_corpus* c, size_t max_order,
                           unsigned workers, mb_report** out);
MB_API void mb_report_free(mb_report* r);
MB_API size_t mb_report_count(const mb_report* r);
MB_API mb_status mb_report_item(const mb_report* r, size_t i,
                                const char** name, int* passed,
                                const char** detail);

#ifdef __cplusplus
}
#endif

#endif /* MINBRACE_MINBRACE_H_ */
