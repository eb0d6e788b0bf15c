#ifndef HYPERGRAPHIC_H
#define HYPERGRAPHIC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Engine for [`hg_antipode`].
 */
typedef enum HgAntipodeMethod {
  HG_ANTIPODE_METHOD_TAKEUCHI = 0,
  HG_ANTIPODE_METHOD_ORIENTATION = 1,
  HG_ANTIPODE_METHOD_FACES = 2,
} HgAntipodeMethod;

/**
 * Result of every call.
 */
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  HG_STATUS_NULL_POINTER = 1,
  HG_STATUS_INVALID_INPUT = 2,
  HG_STATUS_BOUND_EXCEEDED = 3,
  HG_STATUS_BUFFER_TOO_SMALL = 4,
  HG_STATUS_INTERNAL = 5,
  HG_STATUS_PANIC = 6,
} HgStatus;

typedef struct HgAntipode HgAntipode;

typedef struct HgHypergraph HgHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *hg_last_error_message(void);

/**
 * Parses `{"n": <int>, "edges": [[v, ...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum HgStatus hg_hypergraph_from_json(const char *json, struct HgHypergraph **out);

/**
 * Builds a hypergraph on `{1..n}` from `edge_count` vertex lists stored back to back
 * in `vertices`; edge `i` is `vertices[offsets[i]..offsets[i + 1]]`.
 *
 * # Safety
 * `offsets` must hold `edge_count + 1` entries and `vertices` at least `offsets[edge_count]`.
 */
enum HgStatus hg_hypergraph_new(size_t n,
                                const size_t *offsets,
                                const uint32_t *vertices,
                                size_t edge_count,
                                struct HgHypergraph **out);

/**
 * # Safety
 * `h` must come from this library and not be used afterwards; null is ignored.
 */
void hg_hypergraph_free(struct HgHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle.
 */
enum HgStatus hg_hypergraph_vertex_count(const struct HgHypergraph *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle.
 */
enum HgStatus hg_hypergraph_edge_count(const struct HgHypergraph *h, size_t *out);

/**
 * Computes the antipode; `max_n = 0` keeps the default enumeration bound.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HgStatus hg_antipode(const struct HgHypergraph *h,
                          enum HgAntipodeMethod method,
                          size_t max_n,
                          struct HgAntipode **out);

/**
 * # Safety
 * `a` must come from this library and not be used afterwards; null is ignored.
 */
void hg_antipode_free(struct HgAntipode *a);

/**
 * Number of flats, one term each.
 *
 * # Safety
 * `a` must be a live handle.
 */
enum HgStatus hg_antipode_len(const struct HgAntipode *a, size_t *out);

/**
 * Coefficient of term `index`.
 *
 * # Safety
 * `a` must be a live handle.
 */
enum HgStatus hg_antipode_coefficient(const struct HgAntipode *a, size_t index, int64_t *out);

/**
 * Edge indices of the flat of term `index`, in increasing order.
 *
 * # Safety
 * `a` must be a live handle; `buf` must hold `cap` entries.
 */
enum HgStatus hg_antipode_flat(const struct HgAntipode *a,
                               size_t index,
                               size_t *buf,
                               size_t cap,
                               size_t *out_len);

/**
 * `[{"flat": [...], "coefficient": c}, ...]`, released with [`hg_string_free`].
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum HgStatus hg_antipode_to_json(const struct HgAntipode *a, char **out);

/**
 * Writes `f_0, ..., f_d` into `buf`. With too small a buffer the call fails with
 * `BufferTooSmall` after storing the needed length in `out_len`.
 *
 * # Safety
 * `h` must be a live handle; `buf` must hold `cap` entries.
 */
enum HgStatus hg_f_vector(const struct HgHypergraph *h,
                          size_t max_n,
                          uint64_t *buf,
                          size_t cap,
                          size_t *out_len);

/**
 * # Safety
 * `h` must be a live handle.
 */
enum HgStatus hg_is_simple(const struct HgHypergraph *h, size_t max_n, bool *out);

/**
 * Normalized volume of a connected hypergraph.
 *
 * # Safety
 * `h` must be a live handle.
 */
enum HgStatus hg_normalized_volume(const struct HgHypergraph *h, uint64_t *out);

/**
 * Every face as a JSON array of keys, released with [`hg_string_free`].
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HgStatus hg_faces_json(const struct HgHypergraph *h, size_t max_n, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards; null is ignored.
 */
void hg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERGRAPHIC_H */
