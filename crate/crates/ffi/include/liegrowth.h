#ifndef LIEGROWTH_H
#define LIEGROWTH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LgStatus {
  LG_STATUS_OK = 0,
  LG_STATUS_NULL_POINTER = 1,
  LG_STATUS_INVALID_ID = 2,
  LG_STATUS_DOMAIN = 3,
  LG_STATUS_DIVERGENT = 4,
  LG_STATUS_RESOURCE_LIMIT = 5,
  LG_STATUS_NO_REGULAR_ELEMENT = 6,
  LG_STATUS_PRECONDITION = 7,
  LG_STATUS_BUFFER_TOO_SMALL = 8,
  LG_STATUS_OVERFLOW = 9,
  LG_STATUS_INVALID_UTF8 = 10,
  LG_STATUS_PANIC = 11,
} LgStatus;

/**
 * Opaque handle to an enumeration result.
 */
typedef struct LgIrrepList LgIrrepList;

/**
 * Opaque handle to one root system with its dimension evaluator.
 */
typedef struct LgRootSystem LgRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *lg_last_error_message(void);

/**
 * Builds the root system named by `id` (e.g. `"E8"`).
 *
 * # Safety
 * `id` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LgStatus lg_root_system_new(const char *id, struct LgRootSystem **out);

/**
 * # Safety
 * `sys` must come from [`lg_root_system_new`] and not be used afterwards.
 */
void lg_root_system_free(struct LgRootSystem *sys);

/**
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t lg_root_system_rank(const struct LgRootSystem *sys);

/**
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t lg_root_system_num_positive(const struct LgRootSystem *sys);

/**
 * # Safety
 * `sys` must be null or a live handle.
 */
uint64_t lg_root_system_coxeter_number(const struct LgRootSystem *sys);

/**
 * Copies the simple-root coefficients of positive root `index` into `coeffs`,
 * which must hold `len >= rank` entries.
 *
 * # Safety
 * `sys` must be a live handle and `coeffs` valid for `len` writes.
 */
enum LgStatus lg_root_system_positive_root(const struct LgRootSystem *sys,
                                           size_t index,
                                           int32_t *coeffs,
                                           size_t len);

/**
 * Degree of the character with shifted coordinates `c`, when it fits in 64 bits.
 *
 * # Safety
 * `sys` must be a live handle, `c` valid for `len` reads, `out` valid.
 */
enum LgStatus lg_dimension_u64(const struct LgRootSystem *sys,
                               const uint64_t *c,
                               size_t len,
                               uint64_t *out);

/**
 * Degree as a NUL-terminated decimal string. `written` receives the string
 * length excluding the terminator; on `BufferTooSmall` it receives the
 * required buffer size including the terminator.
 *
 * # Safety
 * `sys` must be a live handle, `c` valid for `len` reads, `buf` valid for
 * `buf_len` writes, `written` valid.
 */
enum LgStatus lg_dimension_decimal(const struct LgRootSystem *sys,
                                   const uint64_t *c,
                                   size_t len,
                                   char *buf,
                                   size_t buf_len,
                                   size_t *written);

/**
 * Riemann zeta at real `s > 1` within `abs_tol`.
 *
 * # Safety
 * `out` must be valid.
 */
enum LgStatus lg_riemann_zeta(double s, double abs_tol, double *out);

/**
 * `prod_j zeta(v_j s)` over the exponent profile of this system.
 *
 * # Safety
 * `sys` must be a live handle and `out` valid.
 */
enum LgStatus lg_z_bound(const struct LgRootSystem *sys, double s, double *out);

/**
 * Enumerates all characters of degree `<= max_dim`, sorted by degree.
 *
 * # Safety
 * `sys` must be a live handle and `out` valid.
 */
enum LgStatus lg_irreps_new(const struct LgRootSystem *sys,
                            uint64_t max_dim,
                            struct LgIrrepList **out);

/**
 * # Safety
 * `list` must be null or a live handle.
 */
size_t lg_irreps_len(const struct LgIrrepList *list);

/**
 * Copies record `index`: its c-vector into `c` (at least rank entries) and
 * its degree into `dim`.
 *
 * # Safety
 * `list` must be a live handle, `c` valid for `len` writes, `dim` valid.
 */
enum LgStatus lg_irreps_get(const struct LgIrrepList *list,
                            size_t index,
                            uint64_t *c,
                            size_t len,
                            uint64_t *dim);

/**
 * # Safety
 * `list` must come from [`lg_irreps_new`] and not be used afterwards.
 */
void lg_irreps_free(struct LgIrrepList *list);

/**
 * Number of faithful irreducible pairs `(G, V)` with `dim V = n`.
 *
 * # Safety
 * `out` must be valid.
 */
enum LgStatus lg_census_count(uint64_t n, uint64_t *out);

/**
 * Eigenspace bound for a regular element of prime order `p`, found by
 * lexicographic search: writes the largest eigenspace dimension and the
 * lower and upper bounds, and whether they hold.
 *
 * # Safety
 * `sys` must be a live handle, `c` valid for `len` reads, outputs valid.
 */
enum LgStatus lg_eigen_bounds(const struct LgRootSystem *sys,
                              const uint64_t *c,
                              size_t len,
                              uint64_t p,
                              uint64_t *w_max,
                              double *lower,
                              double *upper,
                              bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEGROWTH_H */
