#ifndef WARING_H
#define WARING_H

/* Generated by cbindgen from the waring-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this interface.
 */
typedef enum WaringStatus {
  WARING_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  WARING_STATUS_NULL_POINTER = 1,
  /**
   * An input string was not valid UTF-8.
   */
  WARING_STATUS_UTF8 = 2,
  /**
   * Malformed JSON or coefficient text.
   */
  WARING_STATUS_PARSE = 3,
  /**
   * Input outside the mathematical domain (zero form, bad exponents, ...).
   */
  WARING_STATUS_DOMAIN = 4,
  /**
   * An internal cross-check failed; this signals a library bug.
   */
  WARING_STATUS_VERIFICATION = 5,
  /**
   * A panic was caught at the boundary.
   */
  WARING_STATUS_PANIC = 6,
} WaringStatus;

/**
 * Opaque handle to a parsed binary form.
 */
typedef struct WaringForm WaringForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if the
 * last call succeeded. The pointer stays valid until the next failing
 * call on the same thread; do not free it.
 */
const char *waring_last_error_message(void);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void waring_string_free(char *s);

/**
 * Parses a form from JSON text, e.g.
 * {"degree":3,"field":"rational","coeffs":["0","1","0","0"]}.
 * On success writes a fresh handle to `out`.
 */
enum WaringStatus waring_form_parse(const char *json, struct WaringForm **out);

/**
 * Releases a form handle. Null is a no-op.
 */
void waring_form_free(struct WaringForm *form);

/**
 * Degree of the form behind the handle, or -1 if the handle is null.
 */
int64_t waring_form_degree(const struct WaringForm *form);

/**
 * Canonical JSON for the form behind the handle.
 */
enum WaringStatus waring_form_to_json(const struct WaringForm *form, char **out);

/**
 * Waring rank of the form behind the handle.
 */
enum WaringStatus waring_rank(const struct WaringForm *form, uint64_t *out_rank);

/**
 * Full rank certificate (rank, witness, branch, ...) as JSON text.
 */
enum WaringStatus waring_rank_certificate_json(const struct WaringForm *form, char **out);

/**
 * Closed-form rank of a·x^r·y^(s+alpha) + b·x^(r+alpha)·y^s for
 * nonzero a, b; requires r <= s and alpha >= 1.
 */
enum WaringStatus waring_binomial_rank(uint64_t r, uint64_t s, uint64_t alpha, uint64_t *out_rank);

/**
 * Value of the Hilbert function (catalecticant rank) at i.
 */
enum WaringStatus waring_hilbert_function(const struct WaringForm *form, uint64_t i, uint64_t *out);

/**
 * Position of the form relative to the rational normal curve:
 * "ON_CURVE", "TANGENT", "SECANT" or "OUTSIDE".
 */
enum WaringStatus waring_classify(const struct WaringForm *form, char **out);

/**
 * JSON array of every degree-d form of rank two divisible by x, y and
 * x+y; there are (d-1)(d-2)/2 of them.
 */
enum WaringStatus waring_enumerate_json(uint64_t d, char **out);

/**
 * Full verification report for degree d: orbit and image counts,
 * partition comparison and transversality, as JSON text.
 */
enum WaringStatus waring_cover_report_json(uint64_t d, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WARING_H */
