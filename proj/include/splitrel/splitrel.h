/* SPDX-FileCopyrightText: (c) 2026 splitrel authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLITREL_SPLITREL_H
#define SPLITREL_SPLITREL_H

#include <stddef.h>

#ifndef SPLITREL_API
#define SPLITREL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srel_status {
  SREL_OK = 0,
  SREL_INVALID_ARGUMENT = 1,
  SREL_PARSE_ERROR = 2,
  SREL_PRECONDITION = 3,
  SREL_LIMIT_EXCEEDED = 4,
  SREL_UNSUPPORTED = 5,
  SREL_INTERNAL = 6
} srel_status;

typedef enum srel_engine {
  SREL_ENGINE_ORACLE = 0,
  SREL_ENGINE_FACTORING = 1,
  SREL_ENGINE_BATCH = 2
} srel_engine;

typedef enum srel_mode { SREL_MODE_SIMPLE = 0, SREL_MODE_MULTI = 1 } srel_mode;

typedef enum srel_relation {
  SREL_DOMINATES = 0,
  SREL_DOMINATED_BY = 1,
  SREL_EQUAL = 2,
  SREL_INCOMPARABLE = 3
} srel_relation;

typedef struct srel_graph srel_graph;
typedef struct srel_poly srel_poly;
typedef struct srel_report srel_report;

typedef struct srel_options {
  int workers;
  int orbit_reduction;
  srel_engine engine;
  unsigned long long shuffle_seed;
} srel_options;

/* Message for the last failing call on this thread; never NULL. */
SPLITREL_API const char* srel_last_error(void);
SPLITREL_API const char* srel_version(void);
/* Releases every char* handed out by this library. */
SPLITREL_API void srel_string_free(char* text);

/* Graphs. edges holds 2*edge_count vertex ids; repeats become parallel edges.
 * Terminal outputs are set to -1 when the document names none. */
SPLITREL_API srel_status srel_graph_create(int n, const int* edges, size_t edge_count, srel_graph** out);
SPLITREL_API srel_status srel_graph_parse(const char* text, srel_graph** out, int* s, int* t);
SPLITREL_API srel_status srel_graph_from_family(const char* spec, srel_graph** out, int* s, int* t);
SPLITREL_API void srel_graph_free(srel_graph* g);
SPLITREL_API int srel_graph_order(const srel_graph* g);
SPLITREL_API int srel_graph_size(const srel_graph* g);
SPLITREL_API int srel_graph_component_count(const srel_graph* g);
/* Pass s = t = -1 to omit terminals. */
SPLITREL_API srel_status srel_graph_to_json(const srel_graph* g, int s, int t, char** out);
SPLITREL_API srel_status srel_graph_canonical_key(const srel_graph* g, int s, int t, char** out_hex);
SPLITREL_API srel_status srel_graph_min_cut(const srel_graph* g, int s, int t, int* out);

/* Polynomials in p with integer coefficients. Rationals travel as "num/den". */
SPLITREL_API srel_status srel_poly_parse(const char* text, srel_poly** out);
SPLITREL_API void srel_poly_free(srel_poly* f);
SPLITREL_API int srel_poly_degree(const srel_poly* f);
SPLITREL_API srel_status srel_poly_to_string(const srel_poly* f, char** out);
SPLITREL_API srel_status srel_poly_eval(const srel_poly* f, const char* p, char** out);
/* Exact value rounded half-up to the given number of decimal digits. */
SPLITREL_API srel_status srel_poly_eval_decimal(const srel_poly* f, const char* p, int digits, char** out);
SPLITREL_API int srel_poly_equal(const srel_poly* f, const srel_poly* g);
/* Witness outputs may be NULL; they receive NULL when no such point exists. */
SPLITREL_API srel_status srel_compare(const srel_poly* f, const srel_poly* g, srel_relation* relation,
                                      char** first_larger, char** second_larger);

/* Reliability. max_slots <= 0 selects the default enumeration ceiling.
 * counts_json, when requested, receives {"n":..,"m":..,"counts":{"i":"N_i",..}}. */
SPLITREL_API srel_status srel_split(const srel_graph* g, int s, int t, srel_engine engine, int max_slots,
                                    srel_poly** out, char** counts_json, int* cut);
SPLITREL_API srel_status srel_all_terminal(const srel_graph* g, srel_engine engine, int max_slots, srel_poly** out);
SPLITREL_API srel_status srel_two_terminal(const srel_graph* g, int s, int t, int max_slots, srel_poly** out);
SPLITREL_API srel_status srel_k_terminal(const srel_graph* g, const int* terminals, size_t count, int max_slots,
                                         srel_poly** out);
SPLITREL_API srel_status srel_pendant_identity(const srel_graph* g, int s, int u, int* holds);

/* Family lookup: {"family","graph","counts","closed_form"}; missing parts are null. */
SPLITREL_API srel_status srel_family_info(const char* spec, char** out_json);

/* Enumeration. The visitor returns nonzero to stop early; the graph is only
 * valid during the call. */
typedef int (*srel_graph_visitor)(const srel_graph* g, void* user);
SPLITREL_API srel_status srel_enumerate(int n, int m, srel_mode mode, srel_graph_visitor visit, void* user,
                                        size_t* visited);
/* Fills up to capacity (s,t) pairs into pairs[2*i], pairs[2*i+1]; *count gets the total. */
SPLITREL_API srel_status srel_terminal_classes(const srel_graph* g, int orbit_reduction, int* pairs,
                                               size_t capacity, size_t* count);

/* Optimality. */
SPLITREL_API void srel_options_default(srel_options* options);
SPLITREL_API srel_status srel_find_optimal(int n, int m, srel_mode mode, const srel_options* options,
                                           srel_report** out);
SPLITREL_API void srel_report_free(srel_report* report);
SPLITREL_API int srel_report_exists(const srel_report* report);
SPLITREL_API int srel_report_certified(const srel_report* report);
SPLITREL_API srel_status srel_report_to_json(const srel_report* report, char** out);
/* 1 or 0 for the stated truth table, -1 where nothing is claimed. */
SPLITREL_API int srel_predicted_exists(int n, int m, srel_mode mode);
/* Runs the theorem grid; m_max <= 0 means no cap. *all_match is 1 iff every
 * row agrees with the table and every certificate checks. */
SPLITREL_API srel_status srel_verify(srel_mode mode, int n_min, int n_max, int m_max, const srel_options* options,
                                     char** out_json, int* all_match);

#ifdef __cplusplus
}
#endif

#endif /* SPLITREL_SPLITREL_H */
