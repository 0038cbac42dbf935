#ifndef LEAFSPAN_LEAFSPAN_H
#define LEAFSPAN_LEAFSPAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LSPAN_API __declspec(dllexport)
#else
#define LSPAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lspan_status {
  LSPAN_OK = 0,
  LSPAN_INVALID_ARGUMENT = 1,
  LSPAN_PARSE = 2,
  LSPAN_DISCONNECTED = 3,
  LSPAN_PRECONDITION = 4,
  LSPAN_BUDGET_EXCEEDED = 5,
  LSPAN_IO = 6,
  LSPAN_INTERNAL = 7
} lspan_status;

typedef enum lspan_solve_status {
  LSPAN_SOLVE_EXACT = 0,
  LSPAN_SOLVE_HEURISTIC_ONLY = 1,
  LSPAN_SOLVE_TIMEOUT = 2
} lspan_solve_status;

typedef enum lspan_method { LSPAN_METHOD_CANONICAL_FILTER = 0, LSPAN_METHOD_VERTEX_EXTENSION = 1 } lspan_method;

typedef enum lspan_bound { LSPAN_BOUND_THEOREM = 0, LSPAN_BOUND_CONJECTURE = 1 } lspan_bound;

typedef struct lspan_graph lspan_graph;
typedef struct lspan_graph_list lspan_graph_list;
typedef struct lspan_solution lspan_solution;
typedef struct lspan_report lspan_report;
typedef struct lspan_audit lspan_audit;

/* Message for the most recent failure on the calling thread ("" if none). */
LSPAN_API const char* lspan_last_error(void);
LSPAN_API const char* lspan_status_name(lspan_status status);
LSPAN_API const char* lspan_version(void);

/* Strings returned through char** out-parameters are released with this. */
LSPAN_API void lspan_string_free(char* text);

/* Graphs */
LSPAN_API lspan_status lspan_graph_from_graph6(const char* text, lspan_graph** out);
LSPAN_API lspan_status lspan_graph_from_edge_list(const char* text, lspan_graph** out);
/* `pairs` holds 2*m endpoints; duplicate pairs are collapsed. */
LSPAN_API lspan_status lspan_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, lspan_graph** out);
/* Member m of the extremal family (1 <= m <= 6), with its JSON sidecar attached. */
LSPAN_API lspan_status lspan_graph_family(int m, lspan_graph** out);
LSPAN_API void lspan_graph_free(lspan_graph* graph);

LSPAN_API size_t lspan_graph_order(const lspan_graph* graph);
LSPAN_API size_t lspan_graph_size(const lspan_graph* graph);
LSPAN_API int lspan_graph_is_connected(const lspan_graph* graph);
LSPAN_API int lspan_graph_is_cubic(const lspan_graph* graph);
/* Sorted endpoints, 2*size entries. Owned by the graph. */
LSPAN_API const uint32_t* lspan_graph_edges(const lspan_graph* graph);
/* Owned by the graph. */
LSPAN_API const char* lspan_graph_graph6(const lspan_graph* graph);
LSPAN_API const char* lspan_graph_edge_list(const lspan_graph* graph);
/* NULL unless the graph came from lspan_graph_family. */
LSPAN_API const char* lspan_graph_family_sidecar(const lspan_graph* graph);
/* Canonical graph6 label (order <= 64). Owned by the graph. */
LSPAN_API lspan_status lspan_graph_canonical_label(const lspan_graph* graph, const char** label);

/* Degree-sum and independence conditions as one JSON object. */
LSPAN_API lspan_status lspan_graph_conditions(const lspan_graph* graph, char** json);

/* Graph lists */
LSPAN_API lspan_graph_list* lspan_graph_list_create(void);
/* Connected cubic graphs on n vertices up to isomorphism, sorted by canonical label. */
LSPAN_API lspan_status lspan_enumerate_cubic(size_t n, lspan_method method, size_t jobs, lspan_graph_list** out);
/* Cubic universe on n vertices from a graph6 stream; duplicates are dropped. */
LSPAN_API lspan_status lspan_graph_list_from_graph6(size_t n, const char* text, lspan_graph_list** out);
/* Appends a copy of graph. */
LSPAN_API lspan_status lspan_graph_list_push(lspan_graph_list* list, const lspan_graph* graph);
LSPAN_API void lspan_graph_list_free(lspan_graph_list* list);
LSPAN_API size_t lspan_graph_list_size(const lspan_graph_list* list);
/* Borrowed; valid while the list lives. */
LSPAN_API const lspan_graph* lspan_graph_list_at(const lspan_graph_list* list, size_t index);
LSPAN_API const char* lspan_graph_list_note(const lspan_graph_list* list);
/* One graph6 line per graph. Owned by the list. */
LSPAN_API const char* lspan_graph_list_graph6(lspan_graph_list* list);

/* Solving. Zero limits mean unlimited. */
LSPAN_API lspan_status lspan_solve(const lspan_graph* graph, double time_limit_seconds, uint64_t max_nodes,
                                   lspan_solution** out);
LSPAN_API void lspan_solution_free(lspan_solution* solution);
LSPAN_API size_t lspan_solution_min_leaves(const lspan_solution* solution);
LSPAN_API size_t lspan_solution_lower_bound(const lspan_solution* solution);
LSPAN_API size_t lspan_solution_proven_lower_bound(const lspan_solution* solution);
LSPAN_API lspan_solve_status lspan_solution_status(const lspan_solution* solution);
LSPAN_API const char* lspan_solve_status_name(lspan_solve_status status);
LSPAN_API uint64_t lspan_solution_nodes(const lspan_solution* solution);
LSPAN_API double lspan_solution_millis(const lspan_solution* solution);
/* Witness file text. Owned by the solution. */
LSPAN_API const char* lspan_solution_witness(const lspan_solution* solution);
/* Counting-inequality audit of the witness as one JSON object. Owned by the solution. */
LSPAN_API const char* lspan_solution_audit(lspan_solution* solution);

/* Checks a witness file: tree validity, claimed leaf count, and, when the
 * claim says exact, minimality by re-solving. Writes a JSON object. */
LSPAN_API lspan_status lspan_check_witness(const char* text, double time_limit_seconds, int* valid, char** json);
/* Re-verifies one violation row of a verification report. */
LSPAN_API lspan_status lspan_check_certificate(const char* json_line, double time_limit_seconds, int* valid);

/* Bound verification */
typedef struct lspan_verify_options {
  size_t jobs;               /* 0 is treated as 1 */
  double time_limit_seconds; /* <= 0 selects the per-order default */
  int cross_validate;        /* compare both enumeration methods (n <= 12) */
  int timings;               /* emit "millis" fields */
} lspan_verify_options;

LSPAN_API lspan_verify_options lspan_verify_defaults(void);
/* Enumerates the universe for n unless `universe` is given. */
LSPAN_API lspan_status lspan_verify(lspan_bound bound, size_t n, const lspan_graph_list* universe,
                                    const lspan_verify_options* options, lspan_report** out);
LSPAN_API void lspan_report_free(lspan_report* report);
/* JSON lines: per-graph rows, violations, summary. Owned by the report. */
LSPAN_API const char* lspan_report_json(const lspan_report* report);
LSPAN_API int lspan_report_complete(const lspan_report* report);
LSPAN_API size_t lspan_report_universe_size(const lspan_report* report);
LSPAN_API size_t lspan_report_solved(const lspan_report* report);
LSPAN_API size_t lspan_report_timeouts(const lspan_report* report);
LSPAN_API size_t lspan_report_violations(const lspan_report* report);
LSPAN_API size_t lspan_report_max_min_leaves(const lspan_report* report);
LSPAN_API const char* lspan_report_note(const lspan_report* report);

/* Solves every graph of the list and audits each optimal witness. */
LSPAN_API lspan_status lspan_audit_run(const lspan_graph_list* graphs, size_t jobs, double time_limit_seconds,
                                       lspan_audit** out);
LSPAN_API void lspan_audit_free(lspan_audit* audit);
LSPAN_API const char* lspan_audit_json(const lspan_audit* audit);
LSPAN_API size_t lspan_audit_evaluated(const lspan_audit* audit);
LSPAN_API size_t lspan_audit_skipped(const lspan_audit* audit);
LSPAN_API size_t lspan_audit_flagged(const lspan_audit* audit);
LSPAN_API size_t lspan_audit_timeouts(const lspan_audit* audit);

#ifdef __cplusplus
}
#endif

#endif
