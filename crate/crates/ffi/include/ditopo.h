#ifndef DITOPO_H
#define DITOPO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Return code of every call.
 */
typedef enum DitopoError {
  DITOPO_ERROR_OK = 0,
  DITOPO_ERROR_NULL_POINTER = 1,
  DITOPO_ERROR_INVALID_UTF8 = 2,
  /**
   * Malformed JSON or document structure.
   */
  DITOPO_ERROR_DOCUMENT = 3,
  /**
   * Well-formed input that violates the rules of its kind.
   */
  DITOPO_ERROR_INVALID_INPUT = 4,
  DITOPO_ERROR_LIMIT_EXCEEDED = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  DITOPO_ERROR_PANIC = 6,
} DitopoError;

/**
 * Outcome of a check; the numbers match the command-line exit codes.
 */
typedef enum DitopoStatus {
  DITOPO_STATUS_PASS = 0,
  DITOPO_STATUS_FAIL = 1,
  DITOPO_STATUS_UNKNOWN = 2,
} DitopoStatus;

/**
 * A finitely presented category.
 */
typedef struct DitopoPresentation DitopoPresentation;

/**
 * A space with an optional two-piece cover.
 */
typedef struct DitopoSpace DitopoSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call on the same thread.
 */
const char *ditopo_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ditopo_string_free(char *s);

/**
 * Builds a named example space with its default cover.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum DitopoError ditopo_space_from_example(const char *name, struct DitopoSpace **out);

/**
 * Parses a grid or finite-space document, with an optional embedded cover.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum DitopoError ditopo_space_from_json(const char *json, struct DitopoSpace **out);

/**
 * # Safety
 * `space` must come from this library and not be freed twice. NULL is ignored.
 */
void ditopo_space_free(struct DitopoSpace *space);

/**
 * Serializes a space (and its cover) as JSON.
 *
 * # Safety
 * `space` must be a live handle and `out` writable.
 */
enum DitopoError ditopo_space_to_json(const struct DitopoSpace *space, char **out);

/**
 * Number of points (allowed vertices on grids).
 *
 * # Safety
 * `space` must be a live handle and `out` writable.
 */
enum DitopoError ditopo_space_point_count(const struct DitopoSpace *space, size_t *out);

/**
 * Counts corner-to-corner paths of a grid and their dihomotopy classes.
 *
 * # Safety
 * `space` must be a live handle; both out pointers writable.
 */
enum DitopoError ditopo_grid_classes(const struct DitopoSpace *space,
                                     size_t limit,
                                     size_t *out_paths,
                                     size_t *out_classes);

/**
 * The presented fundamental category of a space.
 *
 * # Safety
 * `space` must be a live handle and `out` writable.
 */
enum DitopoError ditopo_space_presentation(const struct DitopoSpace *space,
                                           struct DitopoPresentation **out);

/**
 * Parses a presentation document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum DitopoError ditopo_presentation_from_json(const char *json, struct DitopoPresentation **out);

/**
 * # Safety
 * `p` must come from this library and not be freed twice. NULL is ignored.
 */
void ditopo_presentation_free(struct DitopoPresentation *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum DitopoError ditopo_presentation_to_json(const struct DitopoPresentation *p, char **out);

/**
 * Numbers of objects, generators and relations.
 *
 * # Safety
 * `p` must be a live handle; all out pointers writable.
 */
enum DitopoError ditopo_presentation_sizes(const struct DitopoPresentation *p,
                                           size_t *objects,
                                           size_t *generators,
                                           size_t *relations);

/**
 * Classes of words from `from` to `to` of length at most `max_len`.
 * `status` is unknown when some class did not close within `depth`.
 *
 * # Safety
 * `p` must be a live handle, names NUL-terminated, out pointers writable.
 */
enum DitopoError ditopo_hom_count(const struct DitopoPresentation *p,
                                  const char *from,
                                  const char *to,
                                  size_t max_len,
                                  size_t depth,
                                  size_t *count,
                                  enum DitopoStatus *status);

/**
 * Endomorphism classes at `base` and the detected structure, written as
 * `trivial`, `free(k)` or `unknown`.
 *
 * # Safety
 * `p` must be a live handle, `base` NUL-terminated, out pointers writable.
 */
enum DitopoError ditopo_endo_monoid(const struct DitopoPresentation *p,
                                    const char *base,
                                    size_t max_len,
                                    size_t depth,
                                    size_t *classes,
                                    char **structure);

/**
 * Compares hom-counts of the space with those of the pushout of its cover
 * pieces. `report` receives the JSON report and may be NULL.
 *
 * # Safety
 * `space` must be a live handle with a cover; `status` writable.
 */
enum DitopoError ditopo_van_kampen_check(const struct DitopoSpace *space,
                                         size_t max_len,
                                         size_t depth,
                                         enum DitopoStatus *status,
                                         char **report);

/**
 * Runs a command-line invocation (without the program name) and returns
 * its JSON report. `status` is the command's outcome.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; out pointers writable.
 */
enum DitopoError ditopo_run(int argc,
                            const char *const *argv,
                            char **report,
                            enum DitopoStatus *status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DITOPO_H */
