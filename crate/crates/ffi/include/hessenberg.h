#ifndef HESSENBERG_H
#define HESSENBERG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HbStatus {
  HB_STATUS_OK = 0,
  HB_STATUS_NULL_POINTER = 1,
  HB_STATUS_INVALID_UTF8 = 2,
  HB_STATUS_PARSE_ERROR = 3,
  HB_STATUS_DOMAIN_ERROR = 4,
  HB_STATUS_INVARIANT_FAILED = 5,
  HB_STATUS_PANIC = 6,
} HbStatus;

/**
 * An ordinal below ε₀.
 */
typedef struct HbOrdinal HbOrdinal;

/**
 * A finitely described ω-sequence of ordinals.
 */
typedef struct HbSequence HbSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hb_last_error_message(void);

/**
 * Parses an expression such as `w^2*3 + w # 5`.
 *
 * # Safety
 * `text` must be null or a NUL-terminated string; `out` must be null or
 * writable.
 */
enum HbStatus hb_ordinal_parse(const char *text, struct HbOrdinal **out);

/**
 * # Safety
 * `ordinal` must be null or a handle from this library not yet freed.
 */
void hb_ordinal_free(struct HbOrdinal *ordinal);

/**
 * Canonical rendering, e.g. `w^2*3 + w + 5`. Free with [`hb_string_free`].
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_ordinal_to_string(const struct HbOrdinal *ordinal, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void hb_string_free(char *s);

/**
 * Writes -1, 0 or 1 to `out`.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_ordinal_compare(const struct HbOrdinal *a,
                                 const struct HbOrdinal *b,
                                 int32_t *out);

/**
 * Ordered sum `a + b`.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_ordinal_add(const struct HbOrdinal *a,
                             const struct HbOrdinal *b,
                             struct HbOrdinal **out);

/**
 * Natural sum `a # b`.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_ordinal_nat_sum(const struct HbOrdinal *a,
                                 const struct HbOrdinal *b,
                                 struct HbOrdinal **out);

/**
 * Terms of `a` with exponent at least `at`.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_ordinal_truncate(const struct HbOrdinal *a,
                                  const struct HbOrdinal *at,
                                  struct HbOrdinal **out);

/**
 * Parses a sequence descriptor (`head: ...` line, then `tail: ...`).
 *
 * # Safety
 * `text` must be null or a NUL-terminated string; `out` must be null or
 * writable.
 */
enum HbStatus hb_sequence_parse(const char *text, struct HbSequence **out);

/**
 * # Safety
 * `sequence` must be null or a handle from this library not yet freed.
 */
void hb_sequence_free(struct HbSequence *sequence);

/**
 * Infinite natural sum.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_sequence_inat_sum(const struct HbSequence *s, struct HbOrdinal **out);

/**
 * Infinite ordered sum.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_sequence_iord_sum(const struct HbSequence *s, struct HbOrdinal **out);

/**
 * Least `ξ` such that only finitely many elements are `≥ ω^ξ`.
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_sequence_xi(const struct HbSequence *s, struct HbOrdinal **out);

/**
 * Element-wise truncation at `eps`, which must be below the sequence's
 * `ξ`; otherwise [`HbStatus::DomainError`].
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_sequence_truncate(const struct HbSequence *s,
                                   const struct HbOrdinal *eps,
                                   struct HbSequence **out);

/**
 * Certificate text for the largest left-finite mixed sum, after checking
 * it. Free with [`hb_string_free`].
 *
 * # Safety
 * Pointers must be null or valid as described in the module docs.
 */
enum HbStatus hb_sequence_certify(const struct HbSequence *s, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HESSENBERG_H */
