#ifndef GQLAB_H
#define GQLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * The quadric model on the points of Q.
 */
#define GQLAB_MODEL_QUADRIC 0

/**
 * The 27 matrices of S with determinant collinearity.
 */
#define GQLAB_MODEL_MATRICES 1

/**
 * The translated plane model.
 */
#define GQLAB_MODEL_PLANES 2

/**
 * The doily with its double-six.
 */
#define GQLAB_MODEL_DOILY 3

#define GQLAB_CLASS_IDENTITY 0

#define GQLAB_CLASS_D 1

#define GQLAB_CLASS_U 2

#define GQLAB_CLASS_V 3

typedef enum GqlabStatus {
  GQLAB_STATUS_OK = 0,
  GQLAB_STATUS_NULL_POINTER = 1,
  GQLAB_STATUS_INVALID_ARGUMENT = 2,
  GQLAB_STATUS_PARSE = 3,
  GQLAB_STATUS_NOT_IN_S = 4,
  GQLAB_STATUS_UNKNOWN_CHECK = 5,
  GQLAB_STATUS_UNSUPPORTED = 6,
  GQLAB_STATUS_IO = 7,
  GQLAB_STATUS_OUT_OF_RANGE = 8,
  GQLAB_STATUS_NOT_GQ = 9,
  GQLAB_STATUS_INTERNAL = 10,
  GQLAB_STATUS_PANIC = 11,
} GqlabStatus;

/**
 * An incidence structure.
 */
typedef struct GqlabModel GqlabModel;

/**
 * The reports of one verification run.
 */
typedef struct GqlabSuite GqlabSuite;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the next failing call.
 */
const char *gqlab_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void gqlab_string_free(char *s);

/**
 * Builds one of the four models (`GQLAB_MODEL_*`).
 *
 * # Safety
 * `out` must be valid for writing a pointer.
 */
enum GqlabStatus gqlab_model_new(uint32_t kind, struct GqlabModel **out);

/**
 * # Safety
 * `m` must be NULL or a handle from [`gqlab_model_new`] not yet freed.
 */
void gqlab_model_free(struct GqlabModel *m);

/**
 * Number of points; 0 for a NULL handle.
 *
 * # Safety
 * `m` must be NULL or a live model handle.
 */
size_t gqlab_model_point_count(const struct GqlabModel *m);

/**
 * Number of lines; 0 for a NULL handle.
 *
 * # Safety
 * `m` must be NULL or a live model handle.
 */
size_t gqlab_model_line_count(const struct GqlabModel *m);

/**
 * Checks the GQ axioms and writes the order `(s, t)`.
 *
 * # Safety
 * `m` must be a live model handle; `s` and `t` must be valid for writing.
 */
enum GqlabStatus gqlab_model_verify(const struct GqlabModel *m, size_t *s, size_t *t);

/**
 * Label of point `i`, borrowed from the model and valid until it is freed.
 *
 * # Safety
 * `m` must be a live model handle; `out` must be valid for writing.
 */
enum GqlabStatus gqlab_model_point_label(const struct GqlabModel *m, size_t i, const char **out);

/**
 * Writes the point indices of line `i` into `points[0..cap]` and its length into `len`.
 *
 * # Safety
 * `m` must be a live model handle; `points` must hold `cap` writable entries; `len` must be writable.
 */
enum GqlabStatus gqlab_model_line(const struct GqlabModel *m,
                                  size_t i,
                                  size_t *points,
                                  size_t cap,
                                  size_t *len);

/**
 * Searches for an isomorphism `a → b`. On success `map[i]` is the image of point `i`
 * (both models have `cap` points or fewer) and `found` is set to 1; 0 if none exists.
 *
 * # Safety
 * `a`, `b` must be live model handles; `map` must hold `cap` writable entries; `found` must be writable.
 */
enum GqlabStatus gqlab_model_isomorphism(const struct GqlabModel *a,
                                         const struct GqlabModel *b,
                                         size_t *map,
                                         size_t cap,
                                         int32_t *found);

/**
 * Runs the checks whose id starts with `prefix` (all when NULL).
 *
 * # Safety
 * `prefix` must be NULL or a NUL-terminated string; `out` must be valid for writing.
 */
enum GqlabStatus gqlab_suite_run(const char *prefix, struct GqlabSuite **out);

/**
 * # Safety
 * `s` must be NULL or a handle from [`gqlab_suite_run`] not yet freed.
 */
void gqlab_suite_free(struct GqlabSuite *s);

/**
 * Number of reports; 0 for a NULL handle.
 *
 * # Safety
 * `s` must be NULL or a live suite handle.
 */
size_t gqlab_suite_len(const struct GqlabSuite *s);

/**
 * 1 if every check passed, 0 if any failed, -1 for a NULL handle.
 *
 * # Safety
 * `s` must be NULL or a live suite handle.
 */
int32_t gqlab_suite_passed(const struct GqlabSuite *s);

/**
 * Id of report `i`, borrowed from the suite.
 *
 * # Safety
 * `s` must be a live suite handle; `out` must be valid for writing.
 */
enum GqlabStatus gqlab_suite_check_id(const struct GqlabSuite *s, size_t i, const char **out);

/**
 * Writes 1 if report `i` passed, else 0.
 *
 * # Safety
 * `s` must be a live suite handle; `pass` must be valid for writing.
 */
enum GqlabStatus gqlab_suite_check_pass(const struct GqlabSuite *s, size_t i, int32_t *pass);

/**
 * The suite as versioned JSON; free with [`gqlab_string_free`].
 *
 * # Safety
 * `s` must be a live suite handle; `out` must be valid for writing.
 */
enum GqlabStatus gqlab_suite_json(const struct GqlabSuite *s, char **out);

/**
 * Classifies a matrix given by six bits `abcdef`. Writes its label and a
 * `GQLAB_CLASS_*` code; singular matrices give [`GqlabStatus::NotInS`].
 * The identity succeeds with label `I`.
 *
 * # Safety
 * `bits` must be a NUL-terminated string; `label` and `class` must be valid for writing.
 */
enum GqlabStatus gqlab_classify(const char *bits, char **label, uint32_t *class_);

/**
 * Writes 1 if the points `x`, `y` of S (six-bit strings) are collinear in GQ(S), else 0.
 *
 * # Safety
 * `x` and `y` must be NUL-terminated strings; `out` must be valid for writing.
 */
enum GqlabStatus gqlab_collinear(const char *x, const char *y, int32_t *out);

/**
 * Renders an export (`what`: atlas|incidence|quadric|planes|isomorphism,
 * `format`: json|dot|csv) into a new string.
 *
 * # Safety
 * `what` and `format` must be NUL-terminated strings; `out` must be valid for writing.
 */
enum GqlabStatus gqlab_export(const char *what, const char *format, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GQLAB_H */
