#ifndef DEGENCRIT_H
#define DEGENCRIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DcStatus {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_POINTER = 1,
  DC_STATUS_INVALID_ARGUMENT = 2,
  DC_STATUS_PARSE_ERROR = 3,
  DC_STATUS_SIZE_LIMIT = 4,
  DC_STATUS_BUFFER_TOO_SMALL = 5,
  DC_STATUS_CLAIM_VIOLATED = 6,
  DC_STATUS_PANIC = 7,
} DcStatus;

// Opaque graph handle.
typedef struct DcGraph DcGraph;

// Summary of `dc_criticality`.
typedef struct DcCriticality {
  size_t col;
  bool is_col_critical;
  bool is_col_vertex_critical;
  bool is_double_col_critical;
  bool is_two_connected;
  size_t dcc_edge_count;
  size_t edge_count;
} DcCriticality;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses one graph6 string.
//
// # Safety
// `graph6` must be a valid nul-terminated string and `out` writable.
enum DcStatus dc_graph_from_graph6(const char *graph6, struct DcGraph **out);

// Builds a graph on `n` vertices from `m` edges stored as `2m` consecutive
// endpoints.
//
// # Safety
// `endpoints` must point to `2 * m` readable values (or be null when
// `m == 0`) and `out` must be writable.
enum DcStatus dc_graph_from_edges(size_t n,
                                  const size_t *endpoints,
                                  size_t m,
                                  struct DcGraph **out);

// Builds a named family member from its command-line spelling, such as
// `"cycle-square 6"`, `"glued k5 k222"` or `"torus 4 4"`.
//
// # Safety
// `family` must be a valid nul-terminated string and `out` writable.
enum DcStatus dc_graph_family(const char *family, struct DcGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from a `dc_graph_*` constructor and not be used afterwards.
void dc_graph_free(struct DcGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t dc_graph_vertex_count(const struct DcGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t dc_graph_edge_count(const struct DcGraph *g);

// Writes the graph6 encoding, nul-terminated.
//
// # Safety
// `g` must be a live handle, `buf` writable for `len` bytes, `needed` null
// or writable.
enum DcStatus dc_graph_to_graph6(const struct DcGraph *g, char *buf, size_t len, size_t *needed);

// # Safety
// `g` must be a live handle and `out` writable.
enum DcStatus dc_colouring_number(const struct DcGraph *g, size_t *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum DcStatus dc_criticality(const struct DcGraph *g, struct DcCriticality *out);

// Writes the double-col-critical edges as `u, v` pairs into `endpoints`,
// which holds `capacity` edges (`2 * capacity` values). `count` receives the
// number of such edges, also when the buffer is too small.
//
// # Safety
// `g` must be a live handle, `endpoints` writable for `2 * capacity`
// values (or null when `capacity == 0`), `count` writable.
enum DcStatus dc_dcc_edges(const struct DcGraph *g,
                           size_t *endpoints,
                           size_t capacity,
                           size_t *count);

// Writes the class label (for example `CycleSquare(6)`), nul-terminated.
//
// # Safety
// As for `dc_graph_to_graph6`.
enum DcStatus dc_classify(const struct DcGraph *g, char *buf, size_t len, size_t *needed);

// # Safety
// `a` and `b` must be live handles and `out` writable.
enum DcStatus dc_are_isomorphic(const struct DcGraph *a, const struct DcGraph *b, bool *out);

// Message of the last failed call on this thread, or null if it succeeded.
// Valid until the next call into the library from the same thread.
const char *dc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEGENCRIT_H */
