//! C ABI for the `qzeta` library.
//!
//! Results are returned through out-pointers as opaque handles; every
//! function returns a [`QzStatus`]. On failure a description is available
//! from [`qz_last_error_message`] on the same thread. Each handle type has a
//! matching `*_free` function, and strings returned by the library must be
//! released with [`qz_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qzeta::exact::{int, Rational};
use qzeta::zeta::{self, BiPoly, FitConfig, NPoly, QDesc, Route, ZetaQuery};
use qzeta::Error;

/// Status code returned by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DegenerateQ = 3,
    ZeroQNumber = 4,
    OutOfRange = 5,
    NonRational = 6,
    Valuation = 7,
    NoStabilization = 8,
    Internal = 9,
    Panic = 10,
}

/// An exact rational number.
pub struct QzValue {
    value: Rational,
}

/// A finite sequence of rationals.
pub struct QzSeries {
    values: Vec<Rational>,
}

/// A polynomial in `n`.
pub struct QzNPoly {
    poly: NPoly,
}

/// A polynomial in `X` and `Y`.
pub struct QzBiPoly {
    poly: BiPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> QzStatus {
    match e {
        Error::InvalidArgument(_) | Error::EmptyRange | Error::DimensionMismatch(_) => {
            QzStatus::InvalidArgument
        }
        Error::DegenerateQ(_) => QzStatus::DegenerateQ,
        Error::ZeroQNumber { .. } => QzStatus::ZeroQNumber,
        Error::OutOfValidityRange { .. } => QzStatus::OutOfRange,
        Error::NonRational(_) => QzStatus::NonRational,
        Error::Valuation(_) => QzStatus::Valuation,
        Error::NoStabilization { .. } => QzStatus::NoStabilization,
        _ => QzStatus::Internal,
    }
}

struct Fail(QzStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Run `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            QzStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("internal panic: {msg}"));
            QzStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(QzStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(QzStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn read_route(p: *const c_char) -> Result<Route, Fail> {
    if p.is_null() {
        return Ok(Route::Brute);
    }
    Ok(read_str(p, "route")?.parse()?)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s)
        .expect("no interior NUL in rendered values")
        .into_raw();
    Ok(())
}

fn checked_s(s: i64) -> Result<u64, Fail> {
    u64::try_from(s).ok().filter(|&s| s > 0).ok_or_else(|| {
        Fail(
            QzStatus::InvalidArgument,
            format!("s must be positive, got {s}"),
        )
    })
}

/// Message describing the most recent failure on this thread, or an empty
/// string. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn qz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Value of the sum at `q = ζ_n` (weakly increasing indices when `star` is
/// true, strictly increasing otherwise) computed by `route`, a route name
/// such as `"brute"` or `"genfun"`. A null `route` selects brute force.
///
/// # Safety
/// `route` must be null or a NUL-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn qz_zeta(
    n: u64,
    m: u64,
    s: i64,
    star: bool,
    route: *const c_char,
    out: *mut *mut QzValue,
) -> QzStatus {
    guard(|| {
        let route = read_route(route)?;
        let record = zeta::compute(&ZetaQuery::root(n, m, s, star), route)?;
        put(
            out,
            QzValue {
                value: record.value,
            },
        )
    })
}

/// As [`qz_zeta`] with `q` given as a string: `"zeta"`, `"zeta^a"` or a
/// rational such as `"3/5"`.
///
/// # Safety
/// `q` must be a NUL-terminated string, `route` null or a NUL-terminated
/// string, and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_zeta_at(
    n: u64,
    m: u64,
    s: i64,
    q: *const c_char,
    star: bool,
    route: *const c_char,
    out: *mut *mut QzValue,
) -> QzStatus {
    guard(|| {
        let q: QDesc = read_str(q, "q")?.parse()?;
        let route = read_route(route)?;
        let record = zeta::compute(&ZetaQuery::at(n, m, s, q, star), route)?;
        put(
            out,
            QzValue {
                value: record.value,
            },
        )
    })
}

/// Zeta-star values at `q = ζ_n` for `m = 0..=m_max`, from the generating
/// function.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_zeta_star_series(
    n: u64,
    m_max: u64,
    s: i64,
    out: *mut *mut QzSeries,
) -> QzStatus {
    guard(|| {
        let values = zeta::z_star_root_genfun(n, m_max, checked_s(s)?)?;
        put(out, QzSeries { values })
    })
}

/// Reconstruct the value at `q = ζ_n` as a polynomial in `n`, with the
/// default sampler.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_fit(m: u64, s: i64, star: bool, out: *mut *mut QzNPoly) -> QzStatus {
    guard(|| {
        let poly = zeta::fit_npoly(m, s, star, &FitConfig::default_for(m, star))?;
        put(out, QzNPoly { poly })
    })
}

/// `F_{s,l}(X, Y)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_fpoly(s: u64, l: u64, out: *mut *mut QzBiPoly) -> QzStatus {
    guard(|| {
        put(
            out,
            QzBiPoly {
                poly: zeta::f_poly(s, l)?,
            },
        )
    })
}

/// Parse a rational from `"p/q"` or `"p"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_value_parse(text: *const c_char, out: *mut *mut QzValue) -> QzStatus {
    guard(|| {
        let value = qzeta::exact::parse_rational(read_str(text, "text")?)?;
        put(out, QzValue { value })
    })
}

/// Render as `"p/q"`, or `"p"` for integers. Free with [`qz_string_free`].
///
/// # Safety
/// `v` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_value_to_string(v: *const QzValue, out: *mut *mut c_char) -> QzStatus {
    guard(|| put_string(out, get(v, "value")?.value.to_string()))
}

/// Whether two values are equal.
///
/// # Safety
/// `a` and `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_value_equal(
    a: *const QzValue,
    b: *const QzValue,
    out: *mut bool,
) -> QzStatus {
    guard(|| {
        let eq = get(a, "a")?.value == get(b, "b")?.value;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = eq;
        Ok(())
    })
}

/// # Safety
/// `v` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qz_value_free(v: *mut QzValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Number of entries.
///
/// # Safety
/// `series` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_series_len(series: *const QzSeries, out: *mut usize) -> QzStatus {
    guard(|| {
        let len = get(series, "series")?.values.len();
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = len;
        Ok(())
    })
}

/// Entry `i` as a new value handle.
///
/// # Safety
/// `series` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_series_get(
    series: *const QzSeries,
    i: usize,
    out: *mut *mut QzValue,
) -> QzStatus {
    guard(|| {
        let values = &get(series, "series")?.values;
        let value = values.get(i).cloned().ok_or_else(|| {
            Fail(
                QzStatus::InvalidArgument,
                format!("index {i} out of bounds for length {}", values.len()),
            )
        })?;
        put(out, QzValue { value })
    })
}

/// # Safety
/// `series` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qz_series_free(series: *mut QzSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Degree, or -1 for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_npoly_degree(p: *const QzNPoly, out: *mut i64) -> QzStatus {
    guard(|| {
        let d = get(p, "polynomial")?.poly.degree().map_or(-1, |d| d as i64);
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = d;
        Ok(())
    })
}

/// Coefficient of `n^i` as a new value handle.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_npoly_coeff(
    p: *const QzNPoly,
    i: usize,
    out: *mut *mut QzValue,
) -> QzStatus {
    guard(|| {
        let value = get(p, "polynomial")?.poly.poly().coeff(i);
        put(out, QzValue { value })
    })
}

/// Value of the polynomial at `n`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_npoly_eval(
    p: *const QzNPoly,
    n: i64,
    out: *mut *mut QzValue,
) -> QzStatus {
    guard(|| {
        let value = get(p, "polynomial")?.poly.poly().eval(&int(n));
        put(out, QzValue { value })
    })
}

/// Render in expanded form, e.g. `"1/12*n^2 - 1/12"`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_npoly_to_string(p: *const QzNPoly, out: *mut *mut c_char) -> QzStatus {
    guard(|| put_string(out, get(p, "polynomial")?.poly.to_string()))
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qz_npoly_free(p: *mut QzNPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Coefficient of `X^i Y^j` as a new value handle.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_bipoly_coeff(
    p: *const QzBiPoly,
    i: usize,
    j: usize,
    out: *mut *mut QzValue,
) -> QzStatus {
    guard(|| {
        let value = get(p, "polynomial")?.poly.coeff(i, j);
        put(out, QzValue { value })
    })
}

/// Render in monomial form, e.g. `"1 - Y + X*Y"`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qz_bipoly_to_string(
    p: *const QzBiPoly,
    out: *mut *mut c_char,
) -> QzStatus {
    guard(|| put_string(out, get(p, "polynomial")?.poly.to_string()))
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qz_bipoly_free(p: *mut QzBiPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
