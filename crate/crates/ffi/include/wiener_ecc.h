#ifndef WIENER_ECC_H
#define WIENER_ECC_H

/* Generated from the Rust sources by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum WeStatus {
  WE_STATUS_OK = 0,
  WE_STATUS_NULL_POINTER = 1,
  WE_STATUS_INVALID_ARGUMENT = 2,
  WE_STATUS_DECODE_ERROR = 3,
  WE_STATUS_DISCONNECTED = 4,
  WE_STATUS_TOO_LARGE = 5,
  WE_STATUS_BUFFER_TOO_SMALL = 6,
  WE_STATUS_PANIC = 7,
} WeStatus;

/**
 * Opaque graph handle.
 */
typedef struct WeGraph WeGraph;

/**
 * Scalar invariants of a connected graph.
 */
typedef struct WeProfile {
  uint64_t order;
  uint64_t wiener;
  uint64_t c_w;
  uint64_t c_ec;
  uint32_t diam;
  uint32_t rad;
} WeProfile;

/**
 * Class memberships. `arithmetic_step` is 0 when the transmissions do not
 * form a progression with at least two terms.
 */
typedef struct WeClasses {
  bool transmission_regular;
  bool transmission_irregular;
  bool transmission_indivisible;
  bool interval_irregular;
  bool self_centered;
  bool bidegreed;
  bool center_regular_tree;
  uint64_t arithmetic_step;
  uint64_t ud_pair_count;
} WeClasses;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *we_last_error(void);

/**
 * Decodes one graph6 or sparse6 record.
 *
 * # Safety
 * `record` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WeStatus we_graph_from_graph6(const char *record, struct WeGraph **out);

/**
 * Builds a graph on `order` vertices from `edge_count` pairs stored as
 * `edges[2i], edges[2i+1]`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` integers (or be null when
 * `edge_count` is 0) and `out` must be valid.
 */
enum WeStatus we_graph_from_edges(size_t order,
                                  const uint32_t *edges,
                                  size_t edge_count,
                                  struct WeGraph **out);

/**
 * Builds a family member from a name such as `z:3` or `qminus:5`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WeStatus we_graph_from_family(const char *spec, struct WeGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void we_graph_free(struct WeGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t we_graph_order(const struct WeGraph *g);

/**
 * graph6 record of the graph, released with [`we_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum WeStatus we_graph_to_graph6(const struct WeGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void we_string_free(char *s);

/**
 * Scalar invariants of a connected graph.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum WeStatus we_profile(const struct WeGraph *g, struct WeProfile *out);

/**
 * Writes the transmission of every vertex into `buf`, which must hold at
 * least `order` entries.
 *
 * # Safety
 * `g` must be a live handle and `buf` must point to `len` writable values.
 */
enum WeStatus we_transmissions(const struct WeGraph *g, uint64_t *buf, size_t len);

/**
 * Writes the eccentricity of every vertex into `buf`.
 *
 * # Safety
 * As for [`we_transmissions`].
 */
enum WeStatus we_eccentricities(const struct WeGraph *g, uint32_t *buf, size_t len);

/**
 * Class memberships of a connected graph.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum WeStatus we_classify(const struct WeGraph *g, struct WeClasses *out);

/**
 * Number of connected graphs (`trees == false`) or free trees of order `n`
 * up to isomorphism.
 *
 * # Safety
 * `out` must be valid.
 */
enum WeStatus we_count_graphs(size_t n, bool trees, uint64_t *out);

/**
 * Number of graphs of `universe` (e.g. `connected:8`, `trees:12`,
 * `g6:/path/file.g6`) satisfying `predicate` (e.g. `interval-irregular`).
 * `workers` of 0 uses all available cores.
 *
 * # Safety
 * Both strings must be NUL-terminated and `out` valid.
 */
enum WeStatus we_search_count(const char *universe,
                              const char *predicate,
                              size_t workers,
                              uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WIENER_ECC_H */
