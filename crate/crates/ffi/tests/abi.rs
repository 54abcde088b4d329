use std::ffi::{c_char, CStr, CString};
use std::ptr;

use qzeta_ffi::*;

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { qz_string_free(p) };
    s
}

fn value_string(v: *const QzValue) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qz_value_to_string(v, &mut s) }, QzStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qz_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn zeta_at_root_of_unity() {
    let route = CString::new("genfun").unwrap();
    let mut v = ptr::null_mut();
    let status = unsafe { qz_zeta(5, 2, 1, true, route.as_ptr(), &mut v) };
    assert_eq!(status, QzStatus::Ok);
    assert_eq!(value_string(v), "2");
    unsafe { qz_value_free(v) };

    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { qz_zeta(2, 3, 1, true, ptr::null(), &mut v) },
        QzStatus::Ok
    );
    assert_eq!(value_string(v), "1/8");
    unsafe { qz_value_free(v) };
}

#[test]
fn zeta_at_rational_q_matches_parsed_value() {
    let q = CString::new("2").unwrap();
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { qz_zeta_at(3, 1, 1, q.as_ptr(), true, ptr::null(), &mut v) },
        QzStatus::Ok
    );
    let text = CString::new("-4/3").unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { qz_value_parse(text.as_ptr(), &mut w) },
        QzStatus::Ok
    );
    let mut eq = false;
    assert_eq!(unsafe { qz_value_equal(v, w, &mut eq) }, QzStatus::Ok);
    assert!(eq);
    unsafe {
        qz_value_free(v);
        qz_value_free(w);
    }
}

#[test]
fn error_codes() {
    let mut v = ptr::null_mut();
    let route = CString::new("recurrence").unwrap();
    assert_eq!(
        unsafe { qz_zeta(7, 3, 2, true, route.as_ptr(), &mut v) },
        QzStatus::OutOfRange
    );
    assert!(last_error().contains("floor(n/2)"));

    let bogus = CString::new("bogus").unwrap();
    assert_eq!(
        unsafe { qz_zeta(7, 1, 2, true, bogus.as_ptr(), &mut v) },
        QzStatus::InvalidArgument
    );

    let one = CString::new("1").unwrap();
    assert_eq!(
        unsafe { qz_zeta_at(3, 1, 1, one.as_ptr(), true, ptr::null(), &mut v) },
        QzStatus::DegenerateQ
    );
    assert_eq!(
        unsafe { qz_zeta_at(3, 1, 1, ptr::null(), true, ptr::null(), &mut v) },
        QzStatus::NullPointer
    );
    assert!(v.is_null());

    // success clears the message
    assert_eq!(
        unsafe { qz_zeta(3, 1, 1, true, ptr::null(), &mut v) },
        QzStatus::Ok
    );
    assert_eq!(last_error(), "");
    unsafe { qz_value_free(v) };
}

#[test]
fn series_handle() {
    let mut series = ptr::null_mut();
    assert_eq!(
        unsafe { qz_zeta_star_series(4, 3, 1, &mut series) },
        QzStatus::Ok
    );
    let mut len = 0usize;
    assert_eq!(unsafe { qz_series_len(series, &mut len) }, QzStatus::Ok);
    assert_eq!(len, 4);
    let want = ["1", "3/2", "5/4", "5/8"];
    for (i, w) in want.iter().enumerate() {
        let mut v = ptr::null_mut();
        assert_eq!(unsafe { qz_series_get(series, i, &mut v) }, QzStatus::Ok);
        assert_eq!(value_string(v), *w);
        unsafe { qz_value_free(v) };
    }
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { qz_series_get(series, 4, &mut v) },
        QzStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qz_zeta_star_series(4, 3, 0, &mut ptr::null_mut()) },
        QzStatus::InvalidArgument
    );
    unsafe { qz_series_free(series) };
}

#[test]
fn fitted_polynomial_handle() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { qz_fit(2, 1, true, &mut p) }, QzStatus::Ok);
    let mut deg = 0i64;
    assert_eq!(unsafe { qz_npoly_degree(p, &mut deg) }, QzStatus::Ok);
    assert_eq!(deg, 2);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qz_npoly_to_string(p, &mut s) }, QzStatus::Ok);
    assert_eq!(take_string(s), "1/12*n^2 - 1/12");
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { qz_npoly_eval(p, 5, &mut v) }, QzStatus::Ok);
    assert_eq!(value_string(v), "2");
    unsafe { qz_value_free(v) };
    assert_eq!(unsafe { qz_npoly_coeff(p, 0, &mut v) }, QzStatus::Ok);
    assert_eq!(value_string(v), "-1/12");
    unsafe {
        qz_value_free(v);
        qz_npoly_free(p);
    }
}

#[test]
fn fpoly_handle() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { qz_fpoly(3, 2, &mut f) }, QzStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qz_bipoly_to_string(f, &mut s) }, QzStatus::Ok);
    assert_eq!(
        take_string(s),
        "1 - 3*Y + 3*Y^2 - 3*X*Y^2 - Y^3 + 2*X*Y^3 - X^2*Y^3"
    );
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { qz_bipoly_coeff(f, 2, 3, &mut v) }, QzStatus::Ok);
    assert_eq!(value_string(v), "-1");
    unsafe {
        qz_value_free(v);
        qz_bipoly_free(f);
    }
    assert_eq!(unsafe { qz_fpoly(7, 1, &mut f) }, QzStatus::InvalidArgument);
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        qz_value_free(ptr::null_mut());
        qz_series_free(ptr::null_mut());
        qz_npoly_free(ptr::null_mut());
        qz_bipoly_free(ptr::null_mut());
        qz_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(qz_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
