#ifndef ARTIN_H
#define ARTIN_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ArtinStatus {
  ARTIN_STATUS_OK = 0,
  ARTIN_STATUS_NULL_POINTER = 1,
  ARTIN_STATUS_INVALID_UTF8 = 2,
  ARTIN_STATUS_INVALID_TYPE = 3,
  ARTIN_STATUS_PARSE = 4,
  ARTIN_STATUS_RANK_MISMATCH = 5,
  ARTIN_STATUS_BUDGET_EXCEEDED = 6,
  ARTIN_STATUS_UNSUPPORTED = 7,
  ARTIN_STATUS_TRIVIAL_CENTER = 8,
  ARTIN_STATUS_NOT_LIFTABLE = 9,
  ARTIN_STATUS_UNDEFINED_COMPOSITION = 10,
  ARTIN_STATUS_MISMATCH = 11,
  ARTIN_STATUS_OUT_OF_RANGE = 12,
  ARTIN_STATUS_PANIC = 13,
} ArtinStatus;

/**
 * Equality oracle for one group, created from a type tag such as `B:4`.
 */
typedef struct ArtinOracle ArtinOracle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an oracle for `tag` (`A:n`, `B:n`, `AffA:n`, `AffC:n`, `I2:m`,
 * optionally suffixed `/Z`, or `Z`). Free it with [`artin_oracle_free`].
 *
 * # Safety
 * `tag` must be a nul-terminated string and `out` a valid pointer.
 */
enum ArtinStatus artin_oracle_new(const char *tag, struct ArtinOracle **out);

/**
 * # Safety
 * `oracle` must come from [`artin_oracle_new`] and not be used afterwards.
 */
void artin_oracle_free(struct ArtinOracle *oracle);

/**
 * Number of generators, or 0 for a null handle.
 *
 * # Safety
 * `oracle` must be null or a live handle.
 */
size_t artin_oracle_rank(const struct ArtinOracle *oracle);

/**
 * Writes whether the two words (space-separated signed indices) are equal.
 *
 * # Safety
 * `oracle` must be a live handle, the words nul-terminated strings and
 * `out` a valid pointer.
 */
enum ArtinStatus artin_oracle_equal(const struct ArtinOracle *oracle,
                                    const char *word1,
                                    const char *word2,
                                    bool *out);

/**
 * Left normal form of a word in `A:n` or `I2:m`, as `Δ^k [..] [..]`.
 *
 * # Safety
 * `tag` and `word` must be nul-terminated strings and `out` a valid pointer.
 */
enum ArtinStatus artin_normal_form(const char *tag, const char *word, char **out);

/**
 * Runs the verification report at the given ranks and writes it as JSON.
 *
 * # Safety
 * `ranks` must point to `len` values and `out` must be a valid pointer.
 */
enum ArtinStatus artin_report_json(const size_t *ranks, size_t len, uint64_t seed, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void artin_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *artin_last_error(void);

/**
 * Static version string.
 */
const char *artin_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARTIN_H */
