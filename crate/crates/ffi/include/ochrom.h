#ifndef OCHROM_H
#define OCHROM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OchromFormat {
  /**
   * Guess from the text: `n=` means mixed-text, a leading `&` digraph6,
   * otherwise graph6.
   */
  OCHROM_FORMAT_AUTO = 0,
  OCHROM_FORMAT_GRAPH6 = 1,
  OCHROM_FORMAT_DIGRAPH6 = 2,
  OCHROM_FORMAT_MIXED_TEXT = 3,
} OchromFormat;

typedef enum OchromStatus {
  OCHROM_STATUS_OK = 0,
  OCHROM_STATUS_NULL_POINTER = 1,
  OCHROM_STATUS_INVALID_UTF8 = 2,
  OCHROM_STATUS_PARSE = 3,
  OCHROM_STATUS_INVALID_ARGUMENT = 4,
  OCHROM_STATUS_SIZE_GUARD = 5,
  OCHROM_STATUS_KIND_MISMATCH = 6,
  OCHROM_STATUS_INTERNAL = 7,
} OchromStatus;

/**
 * Opaque graph handle.
 */
typedef struct OchromGraph OchromGraph;

/**
 * Opaque integer polynomial handle.
 */
typedef struct OchromPoly OchromPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *ochrom_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next library call on the same thread.
 */
const char *ochrom_last_error(void);

/**
 * Parses `text`; mixed-text accepts `;` in place of newlines.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum OchromStatus ochrom_graph_parse(const char *text,
                                     enum OchromFormat format,
                                     struct OchromGraph **out);

/**
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void ochrom_graph_free(struct OchromGraph *graph);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
size_t ochrom_graph_vertex_count(const struct OchromGraph *graph);

/**
 * Encodes the graph; `OchromFormat::Auto` yields the inline mixed-text form.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_graph_serialize(const struct OchromGraph *graph,
                                         enum OchromFormat format,
                                         char **out);

/**
 * Polynomial by the addition-identification recursion.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_poly_reduction(const struct OchromGraph *graph,
                                        size_t max_vertices,
                                        struct OchromPoly **out);

/**
 * Polynomial interpolated from exhaustive colouring counts.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_poly_bruteforce(const struct OchromGraph *graph,
                                         size_t max_vertices,
                                         struct OchromPoly **out);

/**
 * # Safety
 * `poly` must come from this library and not be used afterwards.
 */
void ochrom_poly_free(struct OchromPoly *poly);

/**
 * Degree, or -1 for the zero polynomial or NULL.
 *
 * # Safety
 * `poly` must be NULL or a live handle.
 */
ptrdiff_t ochrom_poly_degree(const struct OchromPoly *poly);

/**
 * Whether both handles hold the same polynomial; false if either is NULL.
 *
 * # Safety
 * Both arguments must be NULL or live handles.
 */
bool ochrom_poly_equal(const struct OchromPoly *a, const struct OchromPoly *b);

/**
 * Text such as `x^4 - 4x^3 + 5x^2 - 2x`.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_poly_to_string(const struct OchromPoly *poly, char **out);

/**
 * JSON array of decimal strings, constant term first.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_poly_to_json(const struct OchromPoly *poly, char **out);

/**
 * Structure report with predicted and computed coefficients, as JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_analyze_json(const struct OchromGraph *graph,
                                      size_t max_vertices,
                                      char **out);

/**
 * Invariance verdict for an oriented graph, as JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_invar_json(const struct OchromGraph *graph, char **out);

/**
 * Invariant-orientation verdict for a simple graph, as JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_orient_json(const struct OchromGraph *graph, char **out);

/**
 * Equivalence verdict for an oriented graph, as JSON; exhaustive search up
 * to `search_limit` vertices.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_equiv_json(const struct OchromGraph *graph,
                                    size_t search_limit,
                                    char **out);

/**
 * Isolating intervals of width at most `2^-precision` for every real root,
 * as a JSON array.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum OchromStatus ochrom_roots_json(const struct OchromPoly *poly, uint32_t precision, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void ochrom_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCHROM_H */
