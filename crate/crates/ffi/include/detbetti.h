#ifndef DETBETTI_H
#define DETBETTI_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum DbStatus {
  DB_STATUS_OK = 0,
  DB_STATUS_NULL_POINTER = 1,
  /**
   * Degree data or JSON rejected by validation.
   */
  DB_STATUS_INVALID_INPUT = 2,
  /**
   * Table entries do not form a consistent resolution.
   */
  DB_STATUS_INCONSISTENT = 3,
  /**
   * A resolution step has more generators than the cap.
   */
  DB_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * Non-positive denominator or non-integral result.
   */
  DB_STATUS_ARITHMETIC = 5,
  /**
   * The output buffer is shorter than required.
   */
  DB_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  DB_STATUS_INTERNAL = 7,
} DbStatus;

/**
 * Opaque bound-report handle.
 */
typedef struct DbReport DbReport;

/**
 * Opaque table handle.
 */
typedef struct DbTable DbTable;

/**
 * One graded Betti number `beta_{i,j} = count`.
 */
typedef struct DbEntry {
  size_t i;
  int64_t j;
  uint64_t count;
} DbEntry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a table from a JSON degree-data object such as
 * `{"kind":"symmetric","two_a":[1,1,1]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DbStatus db_table_from_json(const char *json, struct DbTable **out);

/**
 * Maximal minors of a `t x n` matrix with entry degrees `a_j - b_i`.
 *
 * # Safety
 * `b` must hold `t` values and `a` must hold `n`; `out` must be writable.
 */
enum DbStatus db_table_standard(const int64_t *b,
                                size_t t,
                                const int64_t *a,
                                size_t n,
                                struct DbTable **out);

/**
 * Submaximal minors of a symmetric `t x t` matrix; `two_a` holds `2 a_i`.
 *
 * # Safety
 * `two_a` must hold `t` values; `out` must be writable.
 */
enum DbStatus db_table_symmetric(const int64_t *two_a, size_t t, struct DbTable **out);

/**
 * Submaximal minors of a square `t x t` matrix.
 *
 * # Safety
 * `b` and `a` must each hold `t` values; `out` must be writable.
 */
enum DbStatus db_table_square(const int64_t *b, const int64_t *a, size_t t, struct DbTable **out);

/**
 * ACM divisor of degree `tc + 1 - p` on a variety of minimal degree.
 *
 * # Safety
 * `out` must be writable.
 */
enum DbStatus db_table_divisor(int64_t c, int64_t t, int64_t p, struct DbTable **out);

/**
 * `(f, g)^s` for forms of degrees `d1` and `d2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DbStatus db_table_ci_power(int64_t d1, int64_t d2, int64_t s, struct DbTable **out);

/**
 * A table given by its entries; row 0 may be omitted.
 *
 * # Safety
 * `entries` must hold `len` values; `out` must be writable.
 */
enum DbStatus db_table_from_entries(size_t codim,
                                    const struct DbEntry *entries,
                                    size_t len,
                                    struct DbTable **out);

/**
 * # Safety
 * `table` must come from a `db_table_*` constructor or be null.
 */
void db_table_free(struct DbTable *table);

/**
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum DbStatus db_table_codim(const struct DbTable *table, size_t *out);

/**
 * Copies the nonzero entries, row 0 included, in lexicographic order.
 * `written` always receives the number of entries; if `cap` is too small
 * nothing is copied and `DB_STATUS_BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `buf` must have room for `cap` entries (it may be null when `cap` is 0);
 * `written` must be writable.
 */
enum DbStatus db_table_entries(const struct DbTable *table,
                               struct DbEntry *buf,
                               size_t cap,
                               size_t *written);

/**
 * Writes `m_1..m_c` and `M_1..M_c`; both buffers need `codim` slots.
 *
 * # Safety
 * `m` and `big_m` must have room for `cap` values.
 */
enum DbStatus db_table_shifts(const struct DbTable *table, int64_t *m, int64_t *big_m, size_t cap);

/**
 * Writes the totals `beta_1..beta_c`.
 *
 * # Safety
 * `out` must have room for `cap` values.
 */
enum DbStatus db_table_totals(const struct DbTable *table, uint64_t *out, size_t cap);

/**
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum DbStatus db_table_is_pure(const struct DbTable *table, bool *out);

/**
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum DbStatus db_table_multiplicity(const struct DbTable *table, uint64_t *out);

/**
 * The same JSON object as `detbetti table --format json`.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable. Release the
 * string with `db_string_free`.
 */
enum DbStatus db_table_to_json(const struct DbTable *table, char **out);

/**
 * Evaluates every bound against the table.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
enum DbStatus db_check(const struct DbTable *table, struct DbReport **out);

/**
 * # Safety
 * `report` must come from `db_check` or be null.
 */
void db_report_free(struct DbReport *report);

/**
 * Mixed lower, factorial upper, and multiplicity bounds all hold.
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum DbStatus db_report_all_ok(const struct DbReport *report, bool *out);

/**
 * Mixed lower and factorial upper bounds are reached at every index.
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum DbStatus db_report_all_tight(const struct DbReport *report, bool *out);

/**
 * The same JSON object as `detbetti check`, on one line.
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable. Release the
 * string with `db_string_free`.
 */
enum DbStatus db_report_to_json(const struct DbReport *report, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void db_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *db_last_error(void);

/**
 * NUL-terminated library version.
 */
const char *db_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DETBETTI_H */
