#ifndef WEDDERGA_H
#define WEDDERGA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum WgStatus {
  WG_STATUS_OK = 0,
  WG_STATUS_NULL_POINTER = 1,
  WG_STATUS_INVALID_ARGUMENT = 2,
  WG_STATUS_PARSE = 3,
  WG_STATUS_BOUND_EXCEEDED = 4,
  WG_STATUS_UNKNOWN_LABEL = 5,
  WG_STATUS_BUFFER_TOO_SMALL = 6,
  WG_STATUS_INTERNAL = 7,
} WgStatus;

/**
 * Outcome of the criticality test.
 */
typedef enum WgVerdict {
  WG_VERDICT_CRITICAL = 0,
  WG_VERDICT_NOT_CRITICAL = 1,
  WG_VERDICT_UNKNOWN = 2,
} WgVerdict;

/**
 * A Wedderburn decomposition, grouped into lines `multiplicity x algebra`.
 */
typedef struct WgDecomposition WgDecomposition;

/**
 * A finite group.
 */
typedef struct WgGroup WgGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a named group or a spec such as `dihedral(8)`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `result` writable.
 */
enum WgStatus wg_group_from_spec(const char *spec, struct WgGroup **result);

/**
 * Builds the group generated by `ngens` permutations of `degree` points,
 * given as consecutive 1-based image lists in `images`.
 *
 * # Safety
 * `images` must hold `degree * ngens` values and `result` be writable.
 */
enum WgStatus wg_group_from_images(size_t degree,
                                   const uint32_t *images,
                                   size_t ngens,
                                   size_t bound,
                                   struct WgGroup **result);

/**
 * # Safety
 * `g` must come from a `wg_group_*` constructor, or be null.
 */
void wg_group_free(struct WgGroup *g);

/**
 * # Safety
 * `g` must be a live handle and `order` writable.
 */
enum WgStatus wg_group_order(const struct WgGroup *g, size_t *order);

/**
 * Decides CSP'-criticality for groups of order at most `bound`.
 *
 * # Safety
 * `g` must be a live handle and `verdict` writable.
 */
enum WgStatus wg_critical(const struct WgGroup *g, size_t bound, enum WgVerdict *verdict);

/**
 * # Safety
 * `g` must be a live handle and `result` writable.
 */
enum WgStatus wg_decompose(const struct WgGroup *g, size_t bound, struct WgDecomposition **result);

/**
 * # Safety
 * `d` must come from `wg_decompose`, or be null.
 */
void wg_decomposition_free(struct WgDecomposition *d);

/**
 * Number of distinct lines.
 *
 * # Safety
 * `d` must be a live handle and `len` writable.
 */
enum WgStatus wg_decomposition_len(const struct WgDecomposition *d, size_t *len);

/**
 * Multiplicity and `Q`-dimension of one copy for line `i`.
 *
 * # Safety
 * `d` must be a live handle; the out-pointers writable.
 */
enum WgStatus wg_decomposition_line(const struct WgDecomposition *d,
                                    size_t i,
                                    size_t *multiplicity,
                                    uint64_t *dimension);

/**
 * Writes the algebra name of line `i`, NUL-terminated, into `buf`.
 * `needed` receives the required size including the NUL; with a short
 * buffer nothing is written and `BufferTooSmall` is returned.
 *
 * # Safety
 * `d` must be a live handle, `buf` hold `len` bytes (or be null when
 * `len` is 0) and `needed` be writable.
 */
enum WgStatus wg_decomposition_name(const struct WgDecomposition *d,
                                    size_t i,
                                    char *buf,
                                    size_t len,
                                    size_t *needed);

/**
 * Family predicates: `1 (q, p)`, `2 (p, n, k)` or `3 (p)`.
 *
 * # Safety
 * `params` must hold `nparams` values and `value` be writable.
 */
enum WgStatus wg_family_predicate(uint32_t family,
                                  const uint64_t *params,
                                  size_t nparams,
                                  bool *value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEDDERGA_H */
