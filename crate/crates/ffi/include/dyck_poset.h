#ifndef DYCK_POSET_H
#define DYCK_POSET_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status returned by every fallible entry point.
 */
typedef enum DyckStatus {
  DYCK_STATUS_OK = 0,
  DYCK_STATUS_NULL_POINTER = 1,
  DYCK_STATUS_INVALID_ARGUMENT = 2,
  DYCK_STATUS_LIMIT_EXCEEDED = 3,
  /**
   * Two independent computations disagreed.
   */
  DYCK_STATUS_MISMATCH = 4,
  DYCK_STATUS_INTERNAL = 5,
} DyckStatus;

/**
 * Which count a poset query returns.
 */
typedef enum DyckCount {
  /**
   * Pairs `x <= y`.
   */
  DYCK_COUNT_INTERVALS = 0,
  /**
   * Chains, the empty one included.
   */
  DYCK_COUNT_TOTAL_CHAINS = 1,
  DYCK_COUNT_MAXIMAL_CHAINS = 2,
} DyckCount;

typedef enum DyckAntichainMode {
  DYCK_ANTICHAIN_MODE_ALL = 0,
  DYCK_ANTICHAIN_MODE_MAXIMAL = 1,
  DYCK_ANTICHAIN_MODE_MAXIMUM = 2,
} DyckAntichainMode;

/**
 * Opaque handle to the poset of Dyck paths of one order.
 */
typedef struct DyckPoset DyckPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *dyck_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, freed once.
 */
void dyck_string_free(char *s);

/**
 * Builds `D_n` under the default limits (overridable through `DYCK_MAX_N`).
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum DyckStatus dyck_poset_new(size_t n, struct DyckPoset **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle from [`dyck_poset_new`], freed once.
 */
void dyck_poset_free(struct DyckPoset *p);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t dyck_poset_len(const struct DyckPoset *p);

/**
 * The `i`-th element in canonical order as an `N`/`E` word.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for a pointer write.
 */
enum DyckStatus dyck_poset_element(const struct DyckPoset *p, size_t i, char **out);

/**
 * Canonical index of the path spelled by `path`.
 *
 * # Safety
 * `p` must be a live handle, `path` a NUL-terminated string and `out`
 * valid for a write.
 */
enum DyckStatus dyck_poset_index_of(const struct DyckPoset *p, const char *path, size_t *out);

/**
 * Whether element `i` lies weakly below element `j`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for a write.
 */
enum DyckStatus dyck_poset_leq(const struct DyckPoset *p, size_t i, size_t j, bool *out);

/**
 * Möbius value `mu(i, j)`, read off the point-poset ideals.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for a write.
 */
enum DyckStatus dyck_poset_mobius(const struct DyckPoset *p, size_t i, size_t j, int32_t *out);

/**
 * One of the [`DyckCount`] quantities as a decimal string.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for a pointer write.
 */
enum DyckStatus dyck_poset_count(const struct DyckPoset *p, enum DyckCount what, char **out);

/**
 * Antichain count in the given mode as a decimal string; `largest`, if
 * non-null, receives the size of the largest antichain counted.
 *
 * # Safety
 * `p` must be a live handle, `out` valid for a pointer write and `largest`
 * null or valid for a write.
 */
enum DyckStatus dyck_poset_antichains(const struct DyckPoset *p,
                                      enum DyckAntichainMode mode,
                                      char **out,
                                      size_t *largest);

/**
 * Chain polynomial in `t`, e.g. `2t^4 + 7t^3 + 9t^2 + 5t + 1`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for a pointer write.
 */
enum DyckStatus dyck_poset_chain_polynomial(const struct DyckPoset *p, char **out);

/**
 * Chromatic polynomial in `t` of the Hasse diagram.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for a pointer write.
 */
enum DyckStatus dyck_poset_chromatic(const struct DyckPoset *p, char **out);

/**
 * Catalan number `C_n` as a decimal string.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum DyckStatus dyck_catalan(size_t n, char **out);

/**
 * The q,t-Catalan polynomial of order `n` as text.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum DyckStatus dyck_qt_catalan(size_t n, char **out);

/**
 * Whether the path `lower` lies weakly below the path `upper`.
 *
 * # Safety
 * Both strings must be NUL-terminated and `out` valid for a write.
 */
enum DyckStatus dyck_is_below(const char *lower, const char *upper, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DYCK_POSET_H */
