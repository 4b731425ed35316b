#ifndef AFLT_H
#define AFLT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of the C interface.
 */
typedef enum AfltStatus {
  AFLT_STATUS_OK = 0,
  AFLT_STATUS_NULL_POINTER = 1,
  AFLT_STATUS_INVALID_UTF8 = 2,
  AFLT_STATUS_PARSE = 3,
  AFLT_STATUS_UNSUPPORTED_FIELD = 4,
  AFLT_STATUS_PRECONDITION = 5,
  AFLT_STATUS_ARITHMETIC = 6,
  AFLT_STATUS_RANGE = 7,
  AFLT_STATUS_IO = 8,
  AFLT_STATUS_PANIC = 9,
} AfltStatus;

/**
 * Opaque handle to a number field.
 */
typedef struct AfltField AfltField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a field. `kind` is `"quadratic"` (parameter `m`, squarefree,
 * not 0 or 1) or `"cyclotomic2"` (parameter `k` in 2..=5 for `Q(zeta_{2^k})`).
 *
 * # Safety
 * `kind` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum AfltStatus aflt_field_new(const char *kind, int64_t parameter, struct AfltField **out);

/**
 * Release a field handle. Null is ignored.
 *
 * # Safety
 * `field` must come from [`aflt_field_new`] and not be used afterwards.
 */
void aflt_field_free(struct AfltField *field);

/**
 * Degree of the field over Q, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
size_t aflt_field_degree(const struct AfltField *field);

/**
 * # Safety
 * `field` must be a live handle and `out` a valid pointer.
 */
enum AfltStatus aflt_field_name(const struct AfltField *field, char **out);

/**
 * Class number of an imaginary quadratic field.
 *
 * # Safety
 * `field` must be a live handle and `out` a valid pointer.
 */
enum AfltStatus aflt_class_number(const struct AfltField *field, uint64_t *out);

/**
 * Whether `element` is a unit away from the primes above 2.
 *
 * # Safety
 * `field` must be a live handle, `element` a NUL-terminated string and
 * `out` a valid pointer.
 */
enum AfltStatus aflt_is_s_unit(const struct AfltField *field, const char *element, bool *out);

/**
 * Decomposition of 2 rendered in `format` (`json`, `csv` or `text`).
 *
 * # Safety
 * `field` must be a live handle, `format` a NUL-terminated string and `out`
 * a valid pointer.
 */
enum AfltStatus aflt_split2(const struct AfltField *field, const char *format, char **out);

/**
 * Run the criterion pipeline. `solutions` is an optional solution list
 * (null for none), `complete` declares it complete, and `search_box` of 0
 * selects the default box.
 *
 * # Safety
 * `field` must be a live handle, `solutions` null or a NUL-terminated
 * string, `format` a NUL-terminated string and `out` a valid pointer.
 */
enum AfltStatus aflt_check(const struct AfltField *field,
                           const char *solutions,
                           bool complete,
                           uint32_t search_box,
                           const char *format,
                           char **out);

/**
 * Survey `Q(sqrt(-d))` for squarefree `d` in `[d_min, d_max]`.
 *
 * # Safety
 * `format` must be a NUL-terminated string and `out` a valid pointer.
 */
enum AfltStatus aflt_survey(uint64_t d_min, uint64_t d_max, const char *format, char **out);

/**
 * Message for the last failing call on this thread; empty after success.
 * The pointer stays valid until the next call on this thread.
 */
const char *aflt_last_error(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void aflt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFLT_H */
