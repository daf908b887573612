#ifndef BIER_H
#define BIER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum BierStatus {
  BIER_STATUS_OK = 0,
  BIER_STATUS_NULL_POINTER = 1,
  BIER_STATUS_INVALID_ARGUMENT = 2,
  BIER_STATUS_BUFFER_TOO_SMALL = 3,
  BIER_STATUS_TOO_LARGE = 4,
  BIER_STATUS_NOT_ADDABLE = 5,
  BIER_STATUS_PARSE = 6,
  BIER_STATUS_INTERNAL = 7,
} BierStatus;

/**
 * Opaque handle to a proper ideal `Δ` of the boolean lattice on `[1, n]`.
 */
typedef struct BierDelta BierDelta;

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *bier_last_error(void);

/**
 * The downward closure of `count` generator masks (bit `v-1` is element `v`).
 *
 * # Safety
 * `generators` must point to `count` readable masks; `out` must be writable.
 */
enum BierStatus bier_delta_new(uint32_t n,
                               const uint64_t *generators,
                               uintptr_t count,
                               struct BierDelta **out);

/**
 * Parses a complex file (one facet per line) on the ground set `[1, n]`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum BierStatus bier_delta_parse(uint32_t n, const char *text, struct BierDelta **out);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `d` must come from this library and not have been freed.
 */
void bier_delta_free(struct BierDelta *d);

/**
 * # Safety
 * `d` must be a live handle.
 */
uint32_t bier_delta_n(const struct BierDelta *d);

/**
 * `f_0..f_n` of `Δ` (`n + 1` entries).
 *
 * # Safety
 * `d` must be a live handle; `out` must hold `cap` entries; `len` must be writable.
 */
enum BierStatus bier_delta_f_vector(const struct BierDelta *d,
                                    int64_t *out,
                                    uintptr_t cap,
                                    uintptr_t *len);

/**
 * `g_i = f_i(Δ) - f_{n-i}(Δ)` for `i <= (n-1)/2`.
 *
 * # Safety
 * As for [`bier_delta_f_vector`].
 */
enum BierStatus bier_g_vector(const struct BierDelta *d,
                              int64_t *out,
                              uintptr_t cap,
                              uintptr_t *len);

/**
 * h-vector of the Bier sphere (`n` entries).
 *
 * # Safety
 * As for [`bier_delta_f_vector`].
 */
enum BierStatus bier_h_vector(const struct BierDelta *d,
                              int64_t *out,
                              uintptr_t cap,
                              uintptr_t *len);

/**
 * f-vector of the Bier sphere, `f_0` (the empty face) to `f_{n-1}`.
 *
 * # Safety
 * As for [`bier_delta_f_vector`].
 */
enum BierStatus bier_sphere_f_vector(const struct BierDelta *d,
                                     int64_t *out,
                                     uintptr_t cap,
                                     uintptr_t *len);

/**
 * Facets `(A; x)` in χ-lex shelling order: `a_out[i]` is the mask of `A`,
 * `x_out[i]` the element `x`.
 *
 * # Safety
 * `a_out` and `x_out` must each hold `cap` entries; `len` must be writable.
 */
enum BierStatus bier_facets(const struct BierDelta *d,
                            uint64_t *a_out,
                            uint32_t *x_out,
                            uintptr_t cap,
                            uintptr_t *len);

/**
 * Whether the χ-lex order is a shelling of the Bier sphere.
 *
 * # Safety
 * `d` must be a live handle; `valid` must be writable.
 */
enum BierStatus bier_shelling_valid(const struct BierDelta *d, bool *valid);

/**
 * The subcomplex `Δ'` as a new handle.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum BierStatus bier_delta_prime(const struct BierDelta *d, struct BierDelta **out);

/**
 * `Δ ∪ {face}` as a new handle; `index` receives the index of the bistellar
 * flip this induces on the Bier sphere.
 *
 * # Safety
 * `d` must be a live handle; `out` and `index` must be writable.
 */
enum BierStatus bier_add_face(const struct BierDelta *d,
                              uint64_t face,
                              struct BierDelta **out,
                              uint32_t *index);

/**
 * The Bier sphere as complex-file text; free with [`bier_string_free`].
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum BierStatus bier_sphere_text(const struct BierDelta *d, char **out);

/**
 * # Safety
 * `s` must come from [`bier_sphere_text`] and not have been freed; NULL is ignored.
 */
void bier_string_free(char *s);

#endif  /* BIER_H */
