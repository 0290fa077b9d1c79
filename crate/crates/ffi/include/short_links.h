#ifndef SHORT_LINKS_H
#define SHORT_LINKS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Input and guard codes match the exit codes
 * of the command-line tool.
 */
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  /**
   * Malformed text or an invalid argument.
   */
  SL_STATUS_ERR_INPUT = 2,
  /**
   * The instance exceeds a size limit.
   */
  SL_STATUS_ERR_GUARD = 3,
  /**
   * A required pointer argument was null.
   */
  SL_STATUS_ERR_NULL_POINTER = 4,
  /**
   * A bug: the library panicked or produced an unrepresentable value.
   */
  SL_STATUS_ERR_INTERNAL = 5,
} SlStatus;

/**
 * Opaque simplicial complex.
 */
typedef struct SlComplex SlComplex;

/**
 * Opaque graph.
 */
typedef struct SlGraph SlGraph;

/**
 * Opaque quadrillage.
 */
typedef struct SlQuad SlQuad;

/**
 * Closed-form invariants of `K(P)`.
 */
typedef struct SlKpSummary {
  uint64_t facet_count;
  size_t skeleton_m;
  size_t skeleton_h;
  uint64_t aut_order;
  uint64_t cox_order;
  size_t vertex_orbit_count;
} SlKpSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *sl_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sl_string_free(char *s);

/**
 * Parses a `simplicial <n>` document.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SlStatus sl_complex_parse(const char *text, struct SlComplex **out);

/**
 * Builds `K(P)` for a partition written like `"1,2|3,4,5"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum SlStatus sl_complex_build_kp(const char *spec, struct SlComplex **out);

/**
 * # Safety
 * `complex` must be null or a live handle from this library.
 */
void sl_complex_free(struct SlComplex *complex);

/**
 * Dimension, vertex count and facet count; any out-pointer may be null.
 *
 * # Safety
 * `complex` must be a live handle; non-null outputs must be writable.
 */
enum SlStatus sl_complex_counts(const struct SlComplex *complex,
                                size_t *dim,
                                size_t *vertices,
                                size_t *facets);

/**
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_complex_euler_characteristic(const struct SlComplex *complex, int64_t *out);

/**
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_complex_is_closed(const struct SlComplex *complex, bool *out);

/**
 * Link lengths as text, e.g. `"{3,4}"`. Requires a closed complex of
 * dimension at least 2.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_complex_type(const struct SlComplex *complex, char **out);

/**
 * The partition `P` with `complex ≅ K(P)`, e.g. `"1|2,3"`.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_complex_classify(const struct SlComplex *complex, char **out);

/**
 * The complex in `simplicial <n>` format.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_complex_to_string(const struct SlComplex *complex, char **out);

/**
 * The 1-skeleton as a new graph handle, vertices in increasing id order.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_complex_skeleton(const struct SlComplex *complex, struct SlGraph **out);

/**
 * Parses a `graph <n>` document.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SlStatus sl_graph_parse(const char *text, struct SlGraph **out);

/**
 * # Safety
 * `graph` must be null or a live handle from this library.
 */
void sl_graph_free(struct SlGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle; non-null outputs must be writable.
 */
enum SlStatus sl_graph_counts(const struct SlGraph *graph, size_t *vertices, size_t *edges);

/**
 * Whether the graph is an isometric subgraph of a hypercube; `dim` (may be
 * null) receives the hypercube dimension, or 0.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_graph_is_partial_cube(const struct SlGraph *graph, bool *out, size_t *dim);

/**
 * Whether the path metric satisfies every 5-gonal inequality.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_graph_is_five_gonal(const struct SlGraph *graph, bool *out);

/**
 * Whether the path metric satisfies the hypermetric inequalities with
 * `Σ|b_i| <= 2 * bound + 1`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_graph_is_hypermetric(const struct SlGraph *graph, size_t bound, bool *out);

/**
 * Whether the path metric lies in the cut cone, decided exactly.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_graph_is_l1_embeddable(const struct SlGraph *graph, bool *out);

/**
 * Parses a `quad <n>` document.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SlStatus sl_quad_parse(const char *text, struct SlQuad **out);

/**
 * # Safety
 * `quad` must be null or a live handle from this library.
 */
void sl_quad_free(struct SlQuad *quad);

/**
 * # Safety
 * `quad` must be a live handle; `out` must be writable.
 */
enum SlStatus sl_quad_zone_count(const struct SlQuad *quad, size_t *out);

/**
 * Zone criterion: `embeddable` when every zone is simple and convex;
 * `planar_bipartite` (may be null) tells whether the criterion applies.
 *
 * # Safety
 * `quad` must be a live handle; `embeddable` must be writable.
 */
enum SlStatus sl_quad_embeddable_by_zones(const struct SlQuad *quad,
                                          bool *embeddable,
                                          bool *planar_bipartite);

/**
 * Closed-form invariants of `K(P)`. Fails with a guard error when an order
 * does not fit in 64 bits.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum SlStatus sl_kp_summary(const char *spec, struct SlKpSummary *out);

/**
 * The table of type-`{3,4}` complexes up to `max_dim` (2 to 6) as TSV.
 *
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_table_tsv(size_t max_dim, bool verify, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHORT_LINKS_H */
