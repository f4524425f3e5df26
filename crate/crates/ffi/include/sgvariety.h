#ifndef SGVARIETY_H
#define SGVARIETY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SgvSide {
  SGV_SIDE_K = 0,
  SGV_SIDE_D = 1,
} SgvSide;

typedef enum SgvStatus {
  SGV_STATUS_OK = 0,
  SGV_STATUS_NULL_POINTER = 1,
  /**
   * Malformed table, text, identity or argument.
   */
  SGV_STATUS_INVALID_INPUT = 2,
  SGV_STATUS_BUDGET_EXCEEDED = 3,
  /**
   * Any other library error.
   */
  SGV_STATUS_FAILED = 4,
  SGV_STATUS_PANIC = 5,
} SgvStatus;

/**
 * Opaque DFA handle.
 */
typedef struct SgvDfa SgvDfa;

/**
 * Opaque semigroup handle.
 */
typedef struct SgvSemigroup SgvSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library from the same thread.
 */
const char *sgv_last_error(void);

/**
 * Builds a semigroup from a row-major `order × order` table of 0-based
 * indices. `identity` is the identity element, or negative for none.
 *
 * # Safety
 * `table` must point to `order * order` readable values; `out` must be
 * writable.
 */
enum SgvStatus sgv_semigroup_from_table(size_t order,
                                        const uint32_t *table,
                                        int64_t identity,
                                        struct SgvSemigroup **out);

/**
 * Parses a Cayley-table or transformation-generator file.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum SgvStatus sgv_semigroup_from_text(const char *text, struct SgvSemigroup **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void sgv_semigroup_free(struct SgvSemigroup *s);

/**
 * Number of elements, or 0 for null.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t sgv_semigroup_order(const struct SgvSemigroup *s);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum SgvStatus sgv_semigroup_product(const struct SgvSemigroup *s,
                                     uint32_t a,
                                     uint32_t b,
                                     uint32_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum SgvStatus sgv_in_da(const struct SgvSemigroup *s, bool *out);

/**
 * Membership in `R_m`, `m ≥ 1`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum SgvStatus sgv_in_rm(const struct SgvSemigroup *s, size_t m, bool *out);

/**
 * Membership in `L_m`, `m ≥ 1`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum SgvStatus sgv_in_lm(const struct SgvSemigroup *s, size_t m, bool *out);

/**
 * Quotient by `~K` or `~D`. If `projection` is non-null it receives the
 * class of each element (`order` entries).
 *
 * # Safety
 * `s` must be a live handle, `out` writable, and `projection` null or
 * writable for `sgv_semigroup_order(s)` values.
 */
enum SgvStatus sgv_quotient(const struct SgvSemigroup *s,
                            enum SgvSide side,
                            struct SgvSemigroup **out,
                            uint32_t *projection);

/**
 * Checks identities (one per line, `lhs = rhs`) over all assignments.
 *
 * # Safety
 * `s` must be a live handle, `identity` nul-terminated, `holds` writable.
 */
enum SgvStatus sgv_check_identity(const struct SgvSemigroup *s, const char *identity, bool *holds);

/**
 * Hierarchy report as JSON; free the result with [`sgv_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum SgvStatus sgv_classify_json(const struct SgvSemigroup *s, size_t max_m, char **out);

/**
 * # Safety
 * `p` must be null or a string returned by this library, freed once.
 */
void sgv_string_free(char *p);

/**
 * Parses a DFA in the text format (`alphabet`, `states`, `initial`,
 * `accepting`, then `p a q` lines).
 *
 * # Safety
 * `text` must be nul-terminated and `out` writable.
 */
enum SgvStatus sgv_dfa_from_text(const char *text, struct SgvDfa **out);

/**
 * # Safety
 * `d` must come from this library and not have been freed; null is ignored.
 */
void sgv_dfa_free(struct SgvDfa *d);

/**
 * Language report (syntactic monoid and hierarchy levels) as JSON.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum SgvStatus sgv_classify_language_json(const struct SgvDfa *d, size_t max_m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SGVARIETY_H */
