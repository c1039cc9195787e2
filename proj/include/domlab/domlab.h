/*
Copyright 2026 domlab contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/* domlab: exact domination solvers, graph transformations, and a
 * conjecture-sweep harness for small cubic graphs, behind a C ABI.
 *
 * All functions returning domlab_status leave a message retrievable via
 * domlab_last_error() (thread-local) on failure. Strings returned
 * through char** are heap-allocated; release them with
 * domlab_string_free. Handles are opaque; release them with their
 * matching *_free function.
 */
#ifndef DOMLAB_H
#define DOMLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct domlab_graph domlab_graph;
typedef struct domlab_certificate domlab_certificate;

typedef enum domlab_status {
  DOMLAB_OK = 0,
  DOMLAB_ERR_PARSE = 1,         /* malformed graph6 / JSON input */
  DOMLAB_ERR_PRECONDITION = 2,  /* an operation contract was violated */
  DOMLAB_ERR_BUDGET = 3,        /* search budget exhausted */
  DOMLAB_ERR_SIZE_LIMIT = 4,    /* input exceeds a documented bound */
  DOMLAB_ERR_UNKNOWN_NAME = 5,  /* unknown fixture / property / kind */
  DOMLAB_ERR_IO = 6,            /* file system failure */
  DOMLAB_ERR_INTERNAL = 7       /* broken internal invariant */
} domlab_status;

const char* domlab_version(void);
const char* domlab_last_error(void);
void domlab_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

domlab_status domlab_graph_parse_g6(const char* line, domlab_graph** out);
domlab_status domlab_graph_to_g6(const domlab_graph* g, char** out);
domlab_status domlab_graph_canonical_g6(const domlab_graph* g, char** out);
void domlab_graph_free(domlab_graph* g);

int domlab_graph_vertex_count(const domlab_graph* g);
int domlab_graph_edge_count(const domlab_graph* g);
int domlab_graph_degree(const domlab_graph* g, int v); /* -1 on bad id */
int domlab_graph_has_edge(const domlab_graph* g, int u, int v);
int domlab_graph_is_cubic(const domlab_graph* g);
int domlab_graph_is_connected(const domlab_graph* g);

/* ---- exact solvers --------------------------------------------------- */

typedef struct domlab_budget {
  uint64_t node_limit;
  double time_limit_seconds; /* 0 = unlimited */
} domlab_budget;

domlab_budget domlab_default_budget(void);

domlab_status domlab_solve_gamma(const domlab_graph* g, const domlab_budget* budget,
                                 domlab_certificate** out);
domlab_status domlab_solve_i(const domlab_graph* g, const domlab_budget* budget,
                             domlab_certificate** out);
domlab_status domlab_brute_gamma(const domlab_graph* g, domlab_certificate** out);
domlab_status domlab_brute_i(const domlab_graph* g, domlab_certificate** out);

void domlab_certificate_free(domlab_certificate* c);
int domlab_certificate_size(const domlab_certificate* c);
int domlab_certificate_internal_edges(const domlab_certificate* c);
/* member by index, -1 past the end */
int domlab_certificate_member(const domlab_certificate* c, int index);

int domlab_reed_bound(int n); /* ceil(n/3); 0 on n < 1 */

/* ---- command layer (JSON in / JSON out, drives the CLI) -------------- */

domlab_status domlab_run_solve(const char* graph6, const char* options_json,
                               char** report_json);
domlab_status domlab_run_check(const char* kind, const char* graph6,
                               const char* options_json, char** report_json);
domlab_status domlab_run_gen(const char* corpus_json, char** graph6_lines);
domlab_status domlab_run_sweep(const char* config_json, char** summary_json);
domlab_status domlab_run_report(const char* cache_path, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DOMLAB_H */
