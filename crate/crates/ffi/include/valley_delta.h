#ifndef VALLEY_DELTA_H
#define VALLEY_DELTA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum VdStatus {
  VD_STATUS_OK = 0,
  VD_STATUS_NULL_POINTER = 1,
  VD_STATUS_INVALID_UTF8 = 2,
  VD_STATUS_INVALID_ARGUMENT = 3,
  VD_STATUS_PARSE = 4,
  VD_STATUS_DEGREE_BOUND = 5,
  VD_STATUS_INVALID_PATH = 6,
  VD_STATUS_UNKNOWN_IDENTITY = 7,
  VD_STATUS_ARITHMETIC = 8,
  VD_STATUS_PANIC = 9,
} VdStatus;

/**
 * Decorated labelled path.
 */
typedef struct VdPath VdPath;

/**
 * Exact element of `Q(q, t, z)`.
 */
typedef struct VdRational VdRational;

/**
 * Memoizing identity checker with a fixed degree bound.
 */
typedef struct VdVerifier VdVerifier;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *vd_last_error_message(void);

/**
 * Frees a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void vd_string_free(char *s);

/**
 * Library version.
 */
const char *vd_version(void);

/**
 * Parses `text` such as `"(q + t)/(1 - q)"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` a valid pointer.
 */
enum VdStatus vd_rational_parse(const char *text, struct VdRational **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed.
 */
void vd_rational_free(struct VdRational *r);

/**
 * `*out = a + b`.
 *
 * # Safety
 * Handles must be valid; `out` a valid pointer.
 */
enum VdStatus vd_rational_add(const struct VdRational *a,
                              const struct VdRational *b,
                              struct VdRational **out);

/**
 * `*out = a - b`.
 *
 * # Safety
 * Handles must be valid; `out` a valid pointer.
 */
enum VdStatus vd_rational_sub(const struct VdRational *a,
                              const struct VdRational *b,
                              struct VdRational **out);

/**
 * `*out = a * b`.
 *
 * # Safety
 * Handles must be valid; `out` a valid pointer.
 */
enum VdStatus vd_rational_mul(const struct VdRational *a,
                              const struct VdRational *b,
                              struct VdRational **out);

/**
 * `*out = a / b`; fails with `Arithmetic` when `b` is zero.
 *
 * # Safety
 * Handles must be valid; `out` a valid pointer.
 */
enum VdStatus vd_rational_div(const struct VdRational *a,
                              const struct VdRational *b,
                              struct VdRational **out);

/**
 * `*out = 1` if `a == b`, else `0`.
 *
 * # Safety
 * Handles must be valid; `out` a valid pointer.
 */
enum VdStatus vd_rational_equal(const struct VdRational *a,
                                const struct VdRational *b,
                                int32_t *out);

/**
 * Canonical text of `r`; free with [`vd_string_free`].
 *
 * # Safety
 * `r` must be valid; `out` a valid pointer.
 */
enum VdStatus vd_rational_to_string(const struct VdRational *r, char **out);

/**
 * Evaluates a symmetric-function expression such as
 * `"inner(nabla(e(3)), e(3))"`; functions are printed in the Schur basis.
 *
 * # Safety
 * `expr` must be a nul-terminated string; `out` a valid pointer.
 */
enum VdStatus vd_symfunc_eval(const char *expr, uint32_t degree_bound, char **out);

/**
 * Parses a path record (`{"steps": "NENE", "labels": [...], "dv": [...], "dr": [...]}`).
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` a valid pointer.
 */
enum VdStatus vd_path_from_json(const char *json, struct VdPath **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void vd_path_free(struct VdPath *p);

/**
 * # Safety
 * `p` must be valid; `out` a valid pointer.
 */
enum VdStatus vd_path_area(const struct VdPath *p, uint32_t *out);

/**
 * # Safety
 * `p` must be valid; `out` a valid pointer.
 */
enum VdStatus vd_path_dinv(const struct VdPath *p, uint32_t *out);

/**
 * Reading word as a string of digits.
 *
 * # Safety
 * `p` must be valid; `out` a valid pointer.
 */
enum VdStatus vd_path_reading_word(const struct VdPath *p, char **out);

/**
 * Membership of `p` in the family `family` (`"LD"`, `"LSQ"`, `"LSQ'"`, `"D"`,
 * `"SQ'"`) with parameters `(m, n, k, d)`.
 *
 * # Safety
 * `p` must be valid, `family` nul-terminated; `out` a valid pointer.
 */
enum VdStatus vd_path_in_family(const struct VdPath *p,
                                const char *family,
                                int64_t m,
                                int64_t n,
                                int64_t k,
                                int64_t d,
                                int32_t *out);

/**
 * q,t-enumerator of a family as canonical text, with the element count.
 *
 * # Safety
 * `family` must be nul-terminated; `out` and `count` valid pointers.
 */
enum VdStatus vd_enumerator(const char *family,
                            int64_t m,
                            int64_t n,
                            int64_t k,
                            int64_t d,
                            char **out,
                            uint64_t *count);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum VdStatus vd_verifier_new(uint32_t degree_bound, struct VdVerifier **out);

/**
 * # Safety
 * `v` must come from this library and not have been freed.
 */
void vd_verifier_free(struct VdVerifier *v);

/**
 * `<Theta_{e_k} nabla E_{n-k,r}, e_{n-d} h_d>` as a rational handle.
 *
 * # Safety
 * `v` must be valid; `out` a valid pointer.
 */
enum VdStatus vd_lhs_schroeder(const struct VdVerifier *v,
                               int64_t n,
                               int64_t k,
                               int64_t r,
                               int64_t d,
                               struct VdRational **out);

/**
 * Runs the sweep of identity `id` up to `n_max`; writes the JSON-lines
 * report stream (summary last) and the number of failed theorem checks.
 *
 * # Safety
 * `v` must be valid, `id` nul-terminated; `out` and `failures` valid pointers.
 */
enum VdStatus vd_verify(const struct VdVerifier *v,
                        const char *id,
                        int64_t n_max,
                        char **out,
                        uint64_t *failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VALLEY_DELTA_H */
