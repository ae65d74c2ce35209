#ifndef KRONLAB_H
#define KRONLAB_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KronAbcMethod {
  KRON_ABC_METHOD_FROM_POLYNOMIAL = 0,
  KRON_ABC_METHOD_FROM_SERIES = 1,
} KronAbcMethod;

/**
 * Hook-stable methods.
 */
typedef enum KronHookMethod {
  KRON_HOOK_METHOD_SERIES = 0,
  KRON_HOOK_METHOD_POLYNOMIAL = 1,
  KRON_HOOK_METHOD_LIMIT = 2,
} KronHookMethod;

/**
 * Reduced coefficient methods.
 */
typedef enum KronReducedMethod {
  KRON_REDUCED_METHOD_STABILIZE = 0,
  KRON_REDUCED_METHOD_BRION = 1,
  KRON_REDUCED_METHOD_CLOSED_FORM = 2,
} KronReducedMethod;

/**
 * Result codes. `KRON_STATUS_OK` is zero; each engine error has its own code.
 */
typedef enum KronStatus {
  KRON_STATUS_OK = 0,
  KRON_STATUS_INVALID_SHAPE = 1,
  KRON_STATUS_WEIGHT_MISMATCH = 2,
  KRON_STATUS_NON_TRUNCATABLE = 3,
  KRON_STATUS_CAP_MISMATCH = 4,
  KRON_STATUS_CAP_EXCEEDED = 5,
  KRON_STATUS_CLOSED_FORM_UNAVAILABLE = 6,
  KRON_STATUS_LIMIT_INFEASIBLE = 7,
  KRON_STATUS_OUT_OF_REGION = 8,
  KRON_STATUS_PARSE = 9,
  KRON_STATUS_OVERFLOW = 10,
  KRON_STATUS_NULL_POINTER = 11,
  KRON_STATUS_INVALID_ARGUMENT = 12,
  KRON_STATUS_PANIC = 13,
} KronStatus;

typedef enum KronVariant {
  KRON_VARIANT_ROW = 0,
  KRON_VARIANT_COL = 1,
} KronVariant;

/**
 * Opaque partition handle.
 */
typedef struct KronPartition KronPartition;

/**
 * Opaque Laurent polynomial handle.
 */
typedef struct KronPoly KronPoly;

/**
 * `A`, `B` in the orders `(αβγ, βαγ, γαβ)`, and `C`.
 */
typedef struct KronAbc {
  int64_t a;
  int64_t b[3];
  int64_t c;
} KronAbc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *kronlab_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void kronlab_string_free(char *s);

/**
 * Parses `"8,3,3,1"`, with `"-"` or `""` for the empty partition.
 *
 * # Safety
 * `text` must be a valid nul-terminated string and `out` writable.
 */
enum KronStatus kronlab_partition_parse(const char *text, struct KronPartition **out);

/**
 * Builds a partition from `len` weakly decreasing positive parts.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be null with `len == 0`)
 * and `out` must be writable.
 */
enum KronStatus kronlab_partition_new(const size_t *parts, size_t len, struct KronPartition **out);

/**
 * Releases a partition handle.
 *
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void kronlab_partition_free(struct KronPartition *p);

/**
 * Weight of a partition; 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t kronlab_partition_weight(const struct KronPartition *p);

/**
 * Text form of a partition, released with [`kronlab_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum KronStatus kronlab_partition_to_string(const struct KronPartition *p, char **out);

/**
 * `g(λ, μ, ν)`; zero for unequal weights.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum KronStatus kronlab_kronecker(const struct KronPartition *lambda,
                                  const struct KronPartition *mu,
                                  const struct KronPartition *nu,
                                  uint64_t *out);

/**
 * `ḡ(α, β, γ)`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum KronStatus kronlab_reduced_kronecker(const struct KronPartition *alpha,
                                          const struct KronPartition *beta,
                                          const struct KronPartition *gamma,
                                          enum KronReducedMethod method,
                                          uint64_t *out);

/**
 * The hook-stable limit `ḡ̄(α, β, γ)`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum KronStatus kronlab_hook_stable(const struct KronPartition *alpha,
                                    const struct KronPartition *beta,
                                    const struct KronPartition *gamma,
                                    enum KronHookMethod method,
                                    uint64_t *out);

/**
 * `A`, the three `B` orderings and `C`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum KronStatus kronlab_abc(const struct KronPartition *alpha,
                            const struct KronPartition *beta,
                            const struct KronPartition *gamma,
                            enum KronAbcMethod method,
                            struct KronAbc *out);

/**
 * `P̄row` or `P̄col` as a polynomial handle.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum KronStatus kronlab_q_polynomial(const struct KronPartition *alpha,
                                     const struct KronPartition *beta,
                                     const struct KronPartition *gamma,
                                     enum KronVariant variant,
                                     struct KronPoly **out);

/**
 * Text form such as `x + y + x*y - z^-1`, released with
 * [`kronlab_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum KronStatus kronlab_poly_to_string(const struct KronPoly *poly, char **out);

/**
 * Exact value at integer `x, y, z`, as a reduced fraction.
 *
 * # Safety
 * `poly` must be a live handle; `num` and `den` writable.
 */
enum KronStatus kronlab_poly_eval(const struct KronPoly *poly,
                                  int64_t x,
                                  int64_t y,
                                  int64_t z,
                                  int64_t *num,
                                  int64_t *den);

/**
 * Releases a polynomial handle.
 *
 * # Safety
 * `poly` must be null or a handle from this library, not yet freed.
 */
void kronlab_poly_free(struct KronPoly *poly);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* KRONLAB_H */
