#ifndef EDSMATCH_H
#define EDSMATCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum EdmStatus {
  EDM_STATUS_OK = 0,
  EDM_STATUS_NULL_POINTER = 1,
  EDM_STATUS_PARSE_ERROR = 2,
  EDM_STATUS_INVALID_PATTERN = 3,
  EDM_STATUS_BUDGET_EXCEEDED = 4,
  EDM_STATUS_OUT_OF_RANGE = 5,
  EDM_STATUS_PANIC = 6,
} EdmStatus;

/**
 * Opaque list of occurrences, sorted by `(head, tail)`.
 */
typedef struct EdmMatches EdmMatches;

/**
 * Opaque parsed text.
 */
typedef struct EdmText EdmText;

/**
 * Size measures of a text.
 */
typedef struct EdmStats {
  /**
   * Length: seed letters plus one position per symbol.
   */
  size_t n;
  /**
   * Seed letters plus every alternative's letters.
   */
  size_t total_size;
  /**
   * Number of seeds.
   */
  size_t k;
  /**
   * Largest number of alternatives in a symbol.
   */
  size_t alpha;
} EdmStats;

/**
 * A `(head, tail)` pair of 1-based positions.
 */
typedef struct EdmOccurrence {
  size_t head;
  size_t tail;
} EdmOccurrence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *edm_last_error_message(void);

/**
 * Parses a text in brace notation and stores a new handle in `*out`.
 */
enum EdmStatus edm_text_parse(const uint8_t *data, size_t len, struct EdmText **out);

/**
 * Releases a text. NULL is ignored.
 */
void edm_text_free(struct EdmText *text);

enum EdmStatus edm_text_stats(const struct EdmText *text, struct EdmStats *out);

/**
 * Canonical brace notation as a NUL-terminated string; free it with
 * [`edm_string_free`].
 */
enum EdmStatus edm_text_serialize(const struct EdmText *text, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void edm_string_free(char *s);

/**
 * Finds every occurrence of `pattern` in `text`.
 */
enum EdmStatus edm_search(const struct EdmText *text,
                          const uint8_t *pattern,
                          size_t pattern_len,
                          struct EdmMatches **out);

/**
 * Brute-force search over every spelling of `text`, refused with
 * [`EdmStatus::BudgetExceeded`] when the expansion is too large. A zero
 * limit selects the default.
 */
enum EdmStatus edm_naive_occurrences(const struct EdmText *text,
                                     const uint8_t *pattern,
                                     size_t pattern_len,
                                     uint64_t max_strings,
                                     uint64_t max_total_letters,
                                     struct EdmMatches **out);

/**
 * Number of occurrences; 0 for NULL.
 */
size_t edm_matches_len(const struct EdmMatches *matches);

/**
 * Largest number of symbol positions spanned by one occurrence; 0 for NULL.
 */
size_t edm_matches_gamma(const struct EdmMatches *matches);

enum EdmStatus edm_matches_get(const struct EdmMatches *matches,
                               size_t index,
                               struct EdmOccurrence *out);

/**
 * Releases a match list. NULL is ignored.
 */
void edm_matches_free(struct EdmMatches *matches);

/**
 * Sets `*out` to whether `y` is one spelling of `text`.
 */
enum EdmStatus edm_matches_solid(const struct EdmText *text,
                                 const uint8_t *y,
                                 size_t y_len,
                                 bool *out);

/**
 * Static name of a status code, e.g. `"EDM_STATUS_OK"`.
 */
const char *edm_status_name(enum EdmStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDSMATCH_H */
