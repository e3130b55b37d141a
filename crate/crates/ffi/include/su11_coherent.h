#ifndef SU11_COHERENT_H
#define SU11_COHERENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SU11_FAMILY_BGCS 0

#define SU11_FAMILY_NBGCS 1

#define SU11_FAMILY_PABGCS 2

// Passing this as `tail_tol` selects the library default.
#define SU11_DEFAULT_TAIL_TOL 0.0

typedef enum Su11Status {
  SU11_STATUS_OK = 0,
  SU11_STATUS_INVALID_PARAMETER = 1,
  SU11_STATUS_LAMBDA_MISMATCH = 2,
  SU11_STATUS_CUTOFF_CEILING = 3,
  SU11_STATUS_NON_CONVERGENCE = 4,
  SU11_STATUS_POWER_TOO_LARGE = 5,
  SU11_STATUS_OUT_OF_SCOPE = 6,
  SU11_STATUS_IO = 7,
  SU11_STATUS_NULL_POINTER = 8,
  SU11_STATUS_BUFFER_TOO_SMALL = 9,
  SU11_STATUS_PANIC = 10,
} Su11Status;

// Opaque handle to a constructed state.
typedef struct Su11State Su11State;

typedef struct Su11Observables {
  double exp_n;
  double exp_n2;
  double exp_jp_re;
  double exp_jp_im;
  double exp_jp2_re;
  double exp_jp2_im;
  double exp_jp_jm;
  double exp_j3;
  double var_x1;
  double var_x2;
  double g2;
  double mandel_q;
  double s1;
  double s2;
} Su11Observables;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a state and stores a new handle in `*out`.
//
// `family` is one of the `SU11_FAMILY_*` codes; `tail_tol` is the truncation
// tolerance, or `SU11_DEFAULT_TAIL_TOL`.
//
// # Safety
// `out` must be valid for writes. The handle must be released with
// [`su11_state_free`].
enum Su11Status su11_state_new(uint32_t family,
                               double z_re,
                               double z_im,
                               uint32_t m,
                               double lambda,
                               double tail_tol,
                               struct Su11State **out);

// Releases a handle; null is ignored.
//
// # Safety
// `state` must be null or a handle from [`su11_state_new`] not yet freed.
void su11_state_free(struct Su11State *state);

// Number of stored coefficients (`cutoff + 1`).
//
// # Safety
// `state` must be a live handle and `out` valid for writes.
enum Su11Status su11_state_len(const struct Su11State *state, size_t *out);

// Copies the coefficients into `re[0..len)` and `im[0..len)`.
//
// # Safety
// `state` must be a live handle; `re` and `im` must each hold `len` doubles.
enum Su11Status su11_state_coefficients(const struct Su11State *state,
                                        double *re,
                                        double *im,
                                        size_t len);

// Bound on the probability mass beyond the stored coefficients.
//
// # Safety
// `state` must be a live handle and `out` valid for writes.
enum Su11Status su11_state_tail_bound(const struct Su11State *state, double *out);

// Observables from direct sums over the coefficients.
//
// # Safety
// `state` must be a live handle and `out` valid for writes.
enum Su11Status su11_state_observables(const struct Su11State *state, struct Su11Observables *out);

// Observables from the hypergeometric closed forms.
//
// # Safety
// `out` must be valid for writes.
enum Su11Status su11_closed_observables(uint32_t family,
                                        double z_re,
                                        double z_im,
                                        uint32_t m,
                                        double lambda,
                                        struct Su11Observables *out);

// `⟨a|b⟩`, antilinear in `a`.
//
// # Safety
// `a` and `b` must be live handles; `re` and `im` valid for writes.
enum Su11Status su11_state_overlap(const struct Su11State *a,
                                   const struct Su11State *b,
                                   double *re,
                                   double *im);

// Ratio of the `n`-th moment of the family's measure to the moment the
// resolution of unity requires: 1 for BGCS and NBGCS, an `n`-independent
// constant for PABGCS.
//
// # Safety
// `out` must be valid for writes.
enum Su11Status su11_moment_ratio(uint32_t family,
                                  uint32_t n,
                                  uint32_t m,
                                  double lambda,
                                  double *out);

// BGCS measure density at `|z| = x`.
//
// # Safety
// `out` must be valid for writes.
enum Su11Status su11_measure_m0(double x, double lambda, double *out);

// Copies the calling thread's last error message, NUL-terminated and
// truncated to `len` bytes, and returns its full length without the
// terminator (0 when there is none). `buf` may be null to query the length.
//
// # Safety
// `buf` must be null or valid for `len` bytes of writes.
size_t su11_last_error_message(char *buf, size_t len);

// Library version as a static NUL-terminated string.
const char *su11_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SU11_COHERENT_H */
