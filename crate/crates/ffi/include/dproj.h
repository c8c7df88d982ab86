#ifndef DPROJ_H
#define DPROJ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DprojStatus {
  DPROJ_STATUS_OK = 0,
  DPROJ_STATUS_INVALID_INPUT = 1,
  DPROJ_STATUS_SYNTAX = 2,
  DPROJ_STATUS_PRECONDITION = 3,
  DPROJ_STATUS_DOMAIN = 4,
  DPROJ_STATUS_RESOURCE_LIMIT = 5,
  DPROJ_STATUS_INTERNAL = 6,
  DPROJ_STATUS_NULL_POINTER = 7,
  DPROJ_STATUS_OUT_OF_RANGE = 8,
  DPROJ_STATUS_PANIC = 9,
} DprojStatus;

typedef struct DprojAtlas DprojAtlas;

typedef struct DprojRing DprojRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a ring spec given as JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum DprojStatus dproj_ring_from_json(const char *json, struct DprojRing **out);

/**
 * # Safety
 * `ring` must be NULL or a handle from [`dproj_ring_from_json`] not yet freed.
 */
void dproj_ring_free(struct DprojRing *ring);

/**
 * # Safety
 * `ring` must be a live ring handle and `out` a valid pointer.
 */
enum DprojStatus dproj_ring_is_effective(const struct DprojRing *ring, bool *out);

/**
 * The monomic relevant generators of `S+` as a JSON array of strings.
 *
 * # Safety
 * `ring` must be a live ring handle and `out` a valid pointer.
 */
enum DprojStatus dproj_gens_json(const struct DprojRing *ring, char **out);

/**
 * Builds the chart atlas. A `budget` of 0 selects the default step budget.
 *
 * # Safety
 * `ring` must be a live ring handle and `out` a valid pointer.
 */
enum DprojStatus dproj_atlas_build(const struct DprojRing *ring,
                                   uint64_t budget,
                                   struct DprojAtlas **out);

/**
 * # Safety
 * `atlas` must be NULL or a handle from [`dproj_atlas_build`] not yet freed.
 */
void dproj_atlas_free(struct DprojAtlas *atlas);

/**
 * Number of charts; 0 for a NULL handle.
 *
 * # Safety
 * `atlas` must be NULL or a live atlas handle.
 */
size_t dproj_atlas_chart_count(const struct DprojAtlas *atlas);

/**
 * # Safety
 * `atlas` must be a live atlas handle and `out` a valid pointer.
 */
enum DprojStatus dproj_atlas_chart_dimension(const struct DprojAtlas *atlas,
                                             size_t index,
                                             size_t *out);

/**
 * The chart's monomial `f`, e.g. `x*y`.
 *
 * # Safety
 * `atlas` must be a live atlas handle and `out` a valid pointer.
 */
enum DprojStatus dproj_atlas_chart_monomial(const struct DprojAtlas *atlas,
                                            size_t index,
                                            char **out);

/**
 * Generators of `S_(f)` joined by `", "`; empty for a zero-dimensional chart.
 *
 * # Safety
 * `atlas` must be a live atlas handle and `out` a valid pointer.
 */
enum DprojStatus dproj_atlas_chart_generators(const struct DprojAtlas *atlas,
                                              size_t index,
                                              char **out);

/**
 * # Safety
 * `atlas` must be a live atlas handle and `out` a valid pointer.
 */
enum DprojStatus dproj_atlas_to_json(const struct DprojAtlas *atlas, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void dproj_string_free(char *s);

/**
 * The message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *dproj_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DPROJ_H */
