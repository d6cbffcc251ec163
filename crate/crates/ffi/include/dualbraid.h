#ifndef DUALBRAID_H
#define DUALBRAID_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DbStatus {
  DB_STATUS_OK = 0,
  DB_STATUS_NULL_POINTER = 1,
  DB_STATUS_INVALID_UTF8 = 2,
  /**
   * Unknown type token, unsupported rank or family.
   */
  DB_STATUS_INVALID_TYPE = 3,
  /**
   * Malformed word or atom not in the presentation.
   */
  DB_STATUS_INVALID_WORD = 4,
  DB_STATUS_UNSUPPORTED = 5,
  /**
   * A size or step guard was hit.
   */
  DB_STATUS_RESOURCE_LIMIT = 6,
  DB_STATUS_INTERNAL = 7,
} DbStatus;

/**
 * Opaque Garside structure together with the presentation its words are
 * parsed against.
 */
typedef struct DbGarside DbGarside;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread. Valid until the next
 * call into the library; never null.
 */
const char *db_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void db_string_free(char *s);

/**
 * Builds the dual (`classical == false`) or classical Garside structure.
 * `rank` is 0 for types whose token carries it (`H3`, `I2:5`, `B3`).
 *
 * # Safety
 * `type_token` must be a NUL-terminated string; `out` must be writable.
 */
enum DbStatus db_garside_new(const char *type_token,
                             uint32_t rank,
                             bool classical,
                             struct DbGarside **out_handle);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `handle` must come from [`db_garside_new`] and not have been freed.
 */
void db_garside_free(struct DbGarside *handle);

/**
 * Number of simple elements of the structure.
 *
 * # Safety
 * `handle` must be live; `out_count` must be writable.
 */
enum DbStatus db_garside_simple_count(const struct DbGarside *handle, uint64_t *out_count);

/**
 * Normal form of a group word as JSON `{"delta_power":k,"factors":[...]}`.
 *
 * # Safety
 * `handle` must be live, `word` NUL-terminated, `out_json` writable.
 */
enum DbStatus db_normal_form_json(const struct DbGarside *handle,
                                  const char *word,
                                  char **out_json);

/**
 * Whether two group words represent the same element.
 *
 * # Safety
 * `handle` must be live, both words NUL-terminated, `out_equal` writable.
 */
enum DbStatus db_words_equal(const struct DbGarside *handle,
                             const char *lhs,
                             const char *rhs,
                             bool *out_equal);

/**
 * Size of the interval `[1, c]` for any finite type.
 *
 * # Safety
 * `type_token` must be NUL-terminated; `out_count` writable.
 */
enum DbStatus db_dual_simple_count(const char *type_token, uint32_t rank, uint64_t *out_count);

/**
 * A presentation as JSON. `flavor` is `classical`, `dual` or `completed`.
 *
 * # Safety
 * Strings must be NUL-terminated; `out_json` writable.
 */
enum DbStatus db_presentation_json(const char *type_token,
                                   uint32_t rank,
                                   const char *flavor,
                                   char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DUALBRAID_H */
