#ifndef GDIFF_H
#define GDIFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GdiffStatus {
  GDIFF_STATUS_OK = 0,
  GDIFF_STATUS_NULL_POINTER = 1,
  GDIFF_STATUS_INVALID_UTF8 = 2,
  GDIFF_STATUS_PARSE_ERROR = 3,
  GDIFF_STATUS_OUT_OF_RANGE = 4,
  GDIFF_STATUS_CAPACITY_EXCEEDED = 5,
  GDIFF_STATUS_INVALID_ARGUMENT = 6,
  GDIFF_STATUS_BUDGET_EXCEEDED = 7,
  GDIFF_STATUS_TOO_LARGE = 8,
  GDIFF_STATUS_NOT_CONNECTED_OR_TOO_SMALL = 9,
  GDIFF_STATUS_EMPTY_GRAPH = 10,
  GDIFF_STATUS_INTERNAL = 99,
} GdiffStatus;

/**
 * Which classical invariant `gdiff_invariant` computes.
 */
typedef enum GdiffInvariant {
  GDIFF_INVARIANT_DOMINATION = 0,
  GDIFF_INVARIANT_VERTEX_COVER = 1,
  GDIFF_INVARIANT_INDEPENDENCE = 2,
  GDIFF_INVARIANT_ROMAN_DOMINATION = 3,
} GdiffInvariant;

typedef enum GdiffCheckStatus {
  GDIFF_CHECK_STATUS_PASS = 0,
  GDIFF_CHECK_STATUS_FAIL = 1,
  GDIFF_CHECK_STATUS_VACUOUS = 2,
  GDIFF_CHECK_STATUS_SKIPPED = 3,
} GdiffCheckStatus;

/**
 * Opaque graph handle.
 */
typedef struct GdiffGraph GdiffGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *gdiff_last_error_message(void);

/**
 * Parses one graph6 string.
 */
enum GdiffStatus gdiff_graph_from_graph6(const char *text6, struct GdiffGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`a0, b0, a1, b1, ...`).
 */
enum GdiffStatus gdiff_graph_from_edges(size_t n,
                                        const size_t *edges,
                                        size_t edge_count,
                                        struct GdiffGraph **out);

/**
 * Builds a family member from a spec such as `wheel:6` or
 * `complete_bipartite:2,3`.
 */
enum GdiffStatus gdiff_graph_family(const char *spec, struct GdiffGraph **out);

/**
 * Releases a handle; null is ignored.
 */
void gdiff_graph_free(struct GdiffGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 */
size_t gdiff_graph_order(const struct GdiffGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 */
size_t gdiff_graph_size(const struct GdiffGraph *g);

enum GdiffStatus gdiff_graph_to_graph6(const struct GdiffGraph *g, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 */
void gdiff_string_free(char *s);

/**
 * `R(G)` as a new handle; base vertices keep their indices and edge
 * vertices follow in lexicographic edge order.
 */
enum GdiffStatus gdiff_graph_roperator(const struct GdiffGraph *g, struct GdiffGraph **out);

/**
 * `|B(S)| - |S|` for the set `mask`.
 */
enum GdiffStatus gdiff_set_differential(const struct GdiffGraph *g, uint64_t mask, int64_t *out);

/**
 * `∂(G)` with the lexicographically smallest differential set.
 */
enum GdiffStatus gdiff_differential(const struct GdiffGraph *g,
                                    uint64_t budget,
                                    int64_t *value,
                                    uint64_t *witness);

/**
 * `∂(R(G))` for connected `G` of order at least 3, searched inside `V`.
 */
enum GdiffStatus gdiff_differential_of_r(const struct GdiffGraph *g,
                                         uint64_t budget,
                                         int64_t *value,
                                         uint64_t *witness);

enum GdiffStatus gdiff_invariant(const struct GdiffGraph *g,
                                 enum GdiffInvariant which,
                                 uint64_t budget,
                                 size_t *out);

/**
 * The full invariant record as a JSON object.
 */
enum GdiffStatus gdiff_record_json(const struct GdiffGraph *g, uint64_t budget, char **out);

/**
 * Runs check `prop` (1..=18) on `g`. `report_json` may be null; otherwise
 * it receives the report as a JSON object.
 */
enum GdiffStatus gdiff_verify(const struct GdiffGraph *g,
                              uint32_t prop,
                              uint64_t budget,
                              enum GdiffCheckStatus *status,
                              char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GDIFF_H */
