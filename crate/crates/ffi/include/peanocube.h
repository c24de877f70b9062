#ifndef PEANOCUBE_H
#define PEANOCUBE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes.
 */
typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE = 3,
  PC_STATUS_OUT_OF_RANGE = 4,
  PC_STATUS_INVALID_EDGE = 5,
  PC_STATUS_EMPTY_GRAPH = 6,
  PC_STATUS_NOT_PARTIAL_CUBE = 7,
  PC_STATUS_NOT_PEANO = 8,
  PC_STATUS_NOT_HYPER_MEDIAN = 9,
  PC_STATUS_TOO_LARGE = 10,
  PC_STATUS_BAD_PARAMS = 11,
  PC_STATUS_CERTIFICATION_FAILED = 12,
  PC_STATUS_OTHER = 13,
  PC_STATUS_PANIC = 14,
} PcStatus;

/*
 Opaque graph handle.
 */
typedef struct PcGraph PcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses `{"vertices": n, "edges": [[u, v], ...]}` into a new handle.

 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PcStatus pc_graph_from_json(const char *json, struct PcGraph **out);

/*
 Builds a graph from `m` edges stored as `2 * m` endpoints.

 # Safety
 `edges` must point to `2 * m` values (may be null when `m` is 0); `out` must be writable.
 */
enum PcStatus pc_graph_from_edges(uintptr_t n,
                                  const uintptr_t *edges,
                                  uintptr_t m,
                                  struct PcGraph **out);

/*
 # Safety
 `g` must come from this library and not be freed twice.
 */
void pc_graph_free(struct PcGraph *g);

/*
 # Safety
 `g` must be a live handle; `n` and `m` must be writable.
 */
enum PcStatus pc_graph_size(const struct PcGraph *g, uintptr_t *n, uintptr_t *m);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_is_partial_cube(const struct PcGraph *g, bool *out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_is_peano(const struct PcGraph *g, bool *out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_is_hyper_median(const struct PcGraph *g, bool *out);

/*
 Number of Θ-classes.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_isometric_dimension(const struct PcGraph *g, uintptr_t *out);

/*
 Alternating sum of convex quasi-hypertori counts by dimension.

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_euler_sum(const struct PcGraph *g, int64_t *out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_helly_number(const struct PcGraph *g, uintptr_t *out);

/*
 Full analysis report as JSON; release it with [`pc_string_free`].

 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_analyze_json(const struct PcGraph *g, char **out);

/*
 # Safety
 `s` must come from this library and not be freed twice.
 */
void pc_string_free(char *s);

/*
 Static name of a status code.
 */
const char *pc_status_name(enum PcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PEANOCUBE_H */
