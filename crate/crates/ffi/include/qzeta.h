#ifndef QZETA_H
#define QZETA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Status code returned by every function.
 */
typedef enum {
  QZ_STATUS_OK = 0,
  QZ_STATUS_NULL_POINTER = 1,
  QZ_STATUS_INVALID_ARGUMENT = 2,
  QZ_STATUS_DEGENERATE_Q = 3,
  QZ_STATUS_ZERO_Q_NUMBER = 4,
  QZ_STATUS_OUT_OF_RANGE = 5,
  QZ_STATUS_NON_RATIONAL = 6,
  QZ_STATUS_VALUATION = 7,
  QZ_STATUS_NO_STABILIZATION = 8,
  QZ_STATUS_INTERNAL = 9,
  QZ_STATUS_PANIC = 10,
} QzStatus;

/*
 A polynomial in `X` and `Y`.
 */
typedef struct QzBiPoly QzBiPoly;

/*
 A polynomial in `n`.
 */
typedef struct QzNPoly QzNPoly;

/*
 A finite sequence of rationals.
 */
typedef struct QzSeries QzSeries;

/*
 An exact rational number.
 */
typedef struct QzValue QzValue;

/*
 Message describing the most recent failure on this thread, or an empty
 string. Valid until the next call into the library on this thread.
 */
const char *qz_last_error_message(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *qz_version(void);

/*
 Value of the sum at `q = ζ_n` (weakly increasing indices when `star` is
 true, strictly increasing otherwise) computed by `route`, a route name
 such as `"brute"` or `"genfun"`. A null `route` selects brute force.

 # Safety
 `route` must be null or a NUL-terminated string; `out` must be valid for
 writes.
 */
QzStatus qz_zeta(uint64_t n, uint64_t m, int64_t s, bool star, const char *route, QzValue **out);

/*
 As [`qz_zeta`] with `q` given as a string: `"zeta"`, `"zeta^a"` or a
 rational such as `"3/5"`.

 # Safety
 `q` must be a NUL-terminated string, `route` null or a NUL-terminated
 string, and `out` valid for writes.
 */
QzStatus qz_zeta_at(uint64_t n,
                    uint64_t m,
                    int64_t s,
                    const char *q,
                    bool star,
                    const char *route,
                    QzValue **out);

/*
 Zeta-star values at `q = ζ_n` for `m = 0..=m_max`, from the generating
 function.

 # Safety
 `out` must be valid for writes.
 */
QzStatus qz_zeta_star_series(uint64_t n, uint64_t m_max, int64_t s, QzSeries **out);

/*
 Reconstruct the value at `q = ζ_n` as a polynomial in `n`, with the
 default sampler.

 # Safety
 `out` must be valid for writes.
 */
QzStatus qz_fit(uint64_t m, int64_t s, bool star, QzNPoly **out);

/*
 `F_{s,l}(X, Y)`.

 # Safety
 `out` must be valid for writes.
 */
QzStatus qz_fpoly(uint64_t s, uint64_t l, QzBiPoly **out);

/*
 Parse a rational from `"p/q"` or `"p"`.

 # Safety
 `text` must be a NUL-terminated string and `out` valid for writes.
 */
QzStatus qz_value_parse(const char *text, QzValue **out);

/*
 Render as `"p/q"`, or `"p"` for integers. Free with [`qz_string_free`].

 # Safety
 `v` must be a live handle and `out` valid for writes.
 */
QzStatus qz_value_to_string(const QzValue *v, char **out);

/*
 Whether two values are equal.

 # Safety
 `a` and `b` must be live handles and `out` valid for writes.
 */
QzStatus qz_value_equal(const QzValue *a, const QzValue *b, bool *out);

/*
 # Safety
 `v` must be null or a handle not yet freed.
 */
void qz_value_free(QzValue *v);

/*
 Number of entries.

 # Safety
 `series` must be a live handle and `out` valid for writes.
 */
QzStatus qz_series_len(const QzSeries *series, uintptr_t *out);

/*
 Entry `i` as a new value handle.

 # Safety
 `series` must be a live handle and `out` valid for writes.
 */
QzStatus qz_series_get(const QzSeries *series, uintptr_t i, QzValue **out);

/*
 # Safety
 `series` must be null or a handle not yet freed.
 */
void qz_series_free(QzSeries *series);

/*
 Degree, or -1 for the zero polynomial.

 # Safety
 `p` must be a live handle and `out` valid for writes.
 */
QzStatus qz_npoly_degree(const QzNPoly *p, int64_t *out);

/*
 Coefficient of `n^i` as a new value handle.

 # Safety
 `p` must be a live handle and `out` valid for writes.
 */
QzStatus qz_npoly_coeff(const QzNPoly *p, uintptr_t i, QzValue **out);

/*
 Value of the polynomial at `n`.

 # Safety
 `p` must be a live handle and `out` valid for writes.
 */
QzStatus qz_npoly_eval(const QzNPoly *p, int64_t n, QzValue **out);

/*
 Render in expanded form, e.g. `"1/12*n^2 - 1/12"`.

 # Safety
 `p` must be a live handle and `out` valid for writes.
 */
QzStatus qz_npoly_to_string(const QzNPoly *p, char **out);

/*
 # Safety
 `p` must be null or a handle not yet freed.
 */
void qz_npoly_free(QzNPoly *p);

/*
 Coefficient of `X^i Y^j` as a new value handle.

 # Safety
 `p` must be a live handle and `out` valid for writes.
 */
QzStatus qz_bipoly_coeff(const QzBiPoly *p, uintptr_t i, uintptr_t j, QzValue **out);

/*
 Render in monomial form, e.g. `"1 - Y + X*Y"`.

 # Safety
 `p` must be a live handle and `out` valid for writes.
 */
QzStatus qz_bipoly_to_string(const QzBiPoly *p, char **out);

/*
 # Safety
 `p` must be null or a handle not yet freed.
 */
void qz_bipoly_free(QzBiPoly *p);

/*
 Release a string returned by this library.

 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void qz_string_free(char *s);

#endif  /* QZETA_H */
