// Copyright 2026 The mvk Authors
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

#ifndef MVK_MVK_H_
#define MVK_MVK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MVK_BUILDING)
#define MVK_API __attribute__((visibility("default")))
#else
#define MVK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvk_status {
  MVK_OK = 0,
  MVK_E_INVALID_ARGUMENT = 1,
  MVK_E_ALGEBRA_MISMATCH = 2,
  MVK_E_INVARIANT = 3,
  MVK_E_PARSE = 4,
  MVK_E_IO = 5,
  MVK_E_UNKNOWN_SUITE = 6,
  MVK_E_INTERNAL = 7
} mvk_status;

typedef struct mvk_document mvk_document;
typedef struct mvk_algebra mvk_algebra;
typedef struct mvk_element mvk_element;
typedef struct mvk_plfunc mvk_plfunc;
typedef struct mvk_lgroup_element mvk_lgroup_element;
typedef struct mvk_trace mvk_trace;
typedef struct mvk_element_list mvk_element_list;
typedef struct mvk_reports mvk_reports;

/* Message of the last failed call on this thread; "" after success. */
MVK_API const char* mvk_last_error(void);
/* Releases strings returned through char** out parameters. */
MVK_API void mvk_string_free(char* s);

/* Documents. kind is one of "chain_product", "element", "pl1",
   "lgroup_element". Accessors fail with MVK_E_INVALID_ARGUMENT on a kind
   mismatch, except mvk_document_algebra, which also accepts elements and
   returns their algebra. */
MVK_API mvk_status mvk_document_parse(const char* text, size_t length,
                                      mvk_document** out);
MVK_API mvk_status mvk_document_read_file(const char* path,
                                          mvk_document** out);
MVK_API void mvk_document_free(mvk_document* doc);
MVK_API const char* mvk_document_kind(const mvk_document* doc);
MVK_API mvk_status mvk_document_serialize(const mvk_document* doc,
                                          char** out);
MVK_API mvk_status mvk_document_algebra(const mvk_document* doc,
                                        mvk_algebra** out);
MVK_API mvk_status mvk_document_element(const mvk_document* doc,
                                        mvk_element** out);
MVK_API mvk_status mvk_document_plfunc(const mvk_document* doc,
                                       mvk_plfunc** out);
MVK_API mvk_status mvk_document_lgroup_element(const mvk_document* doc,
                                               mvk_lgroup_element** out);

/* Finite products of Lukasiewicz chains. */
MVK_API mvk_status mvk_algebra_new(const int64_t* denominators, size_t rank,
                                   mvk_algebra** out);
MVK_API void mvk_algebra_free(mvk_algebra* alg);
MVK_API size_t mvk_algebra_rank(const mvk_algebra* alg);
MVK_API int64_t mvk_algebra_denominator(const mvk_algebra* alg, size_t i);
/* MVK_E_INVALID_ARGUMENT when the count does not fit 64 bits. */
MVK_API mvk_status mvk_algebra_carrier_size(const mvk_algebra* alg,
                                            uint64_t* out);
MVK_API mvk_status mvk_algebra_boolean_count(const mvk_algebra* alg,
                                             uint64_t* out);
MVK_API mvk_status mvk_algebra_describe(const mvk_algebra* alg, char** out);

/* Elements. */
MVK_API mvk_status mvk_element_new(const mvk_algebra* alg,
                                   const int64_t* numerators, size_t rank,
                                   mvk_element** out);
MVK_API void mvk_element_free(mvk_element* e);
MVK_API mvk_status mvk_element_algebra(const mvk_element* e,
                                       mvk_algebra** out);
MVK_API size_t mvk_element_rank(const mvk_element* e);
MVK_API int64_t mvk_element_numerator(const mvk_element* e, size_t i);
/* "2/5" for one coordinate, "(1/2,1/3)" otherwise. */
MVK_API mvk_status mvk_element_pretty(const mvk_element* e, char** out);
MVK_API mvk_status mvk_element_serialize(const mvk_element* e, char** out);
MVK_API mvk_status mvk_element_oplus(const mvk_element* a,
                                     const mvk_element* b, mvk_element** out);
MVK_API mvk_status mvk_element_odot(const mvk_element* a, const mvk_element* b,
                                    mvk_element** out);
MVK_API mvk_status mvk_element_join(const mvk_element* a, const mvk_element* b,
                                    mvk_element** out);
MVK_API mvk_status mvk_element_meet(const mvk_element* a, const mvk_element* b,
                                    mvk_element** out);
MVK_API mvk_status mvk_element_neg(const mvk_element* a, mvk_element** out);
MVK_API mvk_status mvk_element_chang_distance(const mvk_element* a,
                                              const mvk_element* b,
                                              mvk_element** out);
/* Predicates write 0 or 1. */
MVK_API mvk_status mvk_element_below(const mvk_element* a,
                                     const mvk_element* b, int* out);
MVK_API mvk_status mvk_element_natural_leq(const mvk_element* a,
                                           const mvk_element* b, int* out);
MVK_API mvk_status mvk_element_equal(const mvk_element* a,
                                     const mvk_element* b, int* out);
MVK_API int mvk_element_is_boolean(const mvk_element* e);

/* Game iteration: step 0 is the start, step n the fixpoint. */
MVK_API mvk_status mvk_trace_new(const mvk_element* start, mvk_trace** out);
MVK_API void mvk_trace_free(mvk_trace* t);
MVK_API size_t mvk_trace_n(const mvk_trace* t);
MVK_API mvk_status mvk_trace_step(const mvk_trace* t, size_t i,
                                  mvk_element** out);

/* Central cone: boolean r with r below a. */
MVK_API mvk_status mvk_central_cone(const mvk_element* a,
                                    mvk_element_list** out);
MVK_API void mvk_element_list_free(mvk_element_list* list);
MVK_API size_t mvk_element_list_size(const mvk_element_list* list);
MVK_API mvk_status mvk_element_list_get(const mvk_element_list* list,
                                        size_t i, mvk_element** out);

/* One-variable piecewise linear functions. */
MVK_API mvk_status mvk_plfunc_sigma(mvk_plfunc** out);
MVK_API void mvk_plfunc_free(mvk_plfunc* f);
MVK_API size_t mvk_plfunc_piece_count(const mvk_plfunc* f);
/* x and the result are "p/q" strings. */
MVK_API mvk_status mvk_plfunc_eval(const mvk_plfunc* f, const char* x,
                                   char** out);
MVK_API mvk_status mvk_plfunc_serialize(const mvk_plfunc* f, char** out);

MVK_API void mvk_lgroup_element_free(mvk_lgroup_element* g);
MVK_API mvk_status mvk_lgroup_element_pretty(const mvk_lgroup_element* g,
                                             char** out);

/* Plots. format is "svg" or "ppm". The density plot samples the term (same
   syntax as the term parser, variable X) applied to |x + y - 1| on a
   grid x grid lattice. */
MVK_API mvk_status mvk_plot_graph(const mvk_plfunc* f, const char* format,
                                  const char* path);
MVK_API mvk_status mvk_plot_density(const char* term, size_t grid,
                                    const char* path);

/* Verification suites; suite "all" runs every suite. */
MVK_API size_t mvk_suite_count(void);
MVK_API const char* mvk_suite_name(size_t i);
MVK_API mvk_status mvk_verify(const char* suite, uint64_t max_carrier,
                              mvk_reports** out);
MVK_API void mvk_reports_free(mvk_reports* r);
MVK_API size_t mvk_reports_count(const mvk_reports* r);
MVK_API int mvk_reports_passed(const mvk_reports* r, size_t i);
MVK_API mvk_status mvk_reports_text(const mvk_reports* r, size_t i,
                                    char** out);
MVK_API mvk_status mvk_reports_json(const mvk_reports* r, size_t i,
                                    char** out);

#ifdef __cplusplus
}
#endif

#endif  // MVK_MVK_H_
