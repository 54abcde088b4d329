//! The checked-in header must declare every exported symbol, and a C program
//! built against it and the static library must run.

use std::path::{Path, PathBuf};
use std::process::Command;

const SYMBOLS: &[&str] = &[
    "qz_last_error_message",
    "qz_version",
    "qz_zeta",
    "qz_zeta_at",
    "qz_zeta_star_series",
    "qz_fit",
    "qz_fpoly",
    "qz_value_parse",
    "qz_value_to_string",
    "qz_value_equal",
    "qz_value_free",
    "qz_series_len",
    "qz_series_get",
    "qz_series_free",
    "qz_npoly_degree",
    "qz_npoly_coeff",
    "qz_npoly_eval",
    "qz_npoly_to_string",
    "qz_npoly_free",
    "qz_bipoly_coeff",
    "qz_bipoly_to_string",
    "qz_bipoly_free",
    "qz_string_free",
];

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn header() -> String {
    std::fs::read_to_string(crate_dir().join("include/qzeta.h"))
        .expect("header generated by build.rs")
}

#[test]
fn header_declares_all_symbols() {
    let h = header();
    for sym in SYMBOLS {
        assert!(h.contains(&format!("{sym}(")), "{sym} missing from header");
    }
    for handle in ["QzValue", "QzSeries", "QzNPoly", "QzBiPoly"] {
        assert!(
            h.contains(&format!("typedef struct {handle} {handle};")),
            "{handle} not opaque"
        );
    }
    assert!(h.contains("QZ_STATUS_OK = 0"));
    assert!(h.contains("QZ_STATUS_PANIC = 10"));
    assert!(h.starts_with("#ifndef QZETA_H"));
}

/// Directory holding the build's `libqzeta_ffi.a`, found next to this test
/// executable.
fn staticlib_dir() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?;
    let found = [deps, deps.parent()?]
        .into_iter()
        .find(|d| d.join("libqzeta_ffi.a").exists())
        .map(Path::to_path_buf);
    found
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib_dir) = staticlib_dir() else {
        panic!("libqzeta_ffi.a not found next to the test binary");
    };
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("qzeta_smoke");
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(lib_dir.join("libqzeta_ffi.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success(), "C smoke test failed to compile");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
