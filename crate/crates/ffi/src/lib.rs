//! C ABI for the valley-delta engine.
//!
//! Every function returns a [`VdStatus`]. On failure the message is kept per
//! thread and read with [`vd_last_error_message`]. Strings handed out by the
//! library are freed with [`vd_string_free`]; handles with their `_free`
//! function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use valley_delta::cli::{evaluate, Value};
use valley_delta::exactalg::{parse_rational, QTRational};
use valley_delta::identities::{run, Selectors, Summary, Verifier};
use valley_delta::paths::{contains, qt_enumerator, DecoratedPath, Family, Params};
use valley_delta::symfun::{Basis, Lambda};
use valley_delta::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    DegreeBound = 5,
    InvalidPath = 6,
    UnknownIdentity = 7,
    Arithmetic = 8,
    Panic = 9,
}

/// Exact element of `Q(q, t, z)`.
pub struct VdRational {
    inner: QTRational,
}

/// Memoizing identity checker with a fixed degree bound.
pub struct VdVerifier {
    inner: Verifier,
}

/// Decorated labelled path.
pub struct VdPath {
    inner: DecoratedPath,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> VdStatus {
    match e {
        Error::Exact(valley_delta::ExactError::Parse { .. }) | Error::Parse { .. } => VdStatus::Parse,
        Error::Exact(_) => VdStatus::Arithmetic,
        Error::DegreeBound { .. } => VdStatus::DegreeBound,
        Error::InvalidPartition(_) | Error::InvalidArgument(_) => VdStatus::InvalidArgument,
        Error::InvalidPath(_) => VdStatus::InvalidPath,
        Error::UnknownIdentity(_) => VdStatus::UnknownIdentity,
    }
}

struct Fail(VdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> VdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            VdStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            VdStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(VdStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(VdStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(VdStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(VdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(VdStatus::InvalidArgument, "output contains nul".into()))?;
    write_out(out, c.into_raw())
}

fn nonneg(v: i64, name: &str) -> Result<usize, Fail> {
    usize::try_from(v).map_err(|_| Fail(VdStatus::InvalidArgument, format!("{name} must be nonnegative")))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn vd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn vd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version.
#[no_mangle]
pub extern "C" fn vd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// ---- rationals ----------------------------------------------------------

/// Parses `text` such as `"(q + t)/(1 - q)"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_parse(text: *const c_char, out: *mut *mut VdRational) -> VdStatus {
    guard(|| {
        let r = parse_rational(read_str(text)?).map_err(Error::from)?;
        write_out(out, Box::into_raw(Box::new(VdRational { inner: r })))
    })
}

/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_free(r: *mut VdRational) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

unsafe fn binary(
    a: *const VdRational,
    b: *const VdRational,
    out: *mut *mut VdRational,
    op: impl FnOnce(&QTRational, &QTRational) -> Result<QTRational, Error>,
) -> VdStatus {
    guard(|| {
        let v = op(&handle(a)?.inner, &handle(b)?.inner)?;
        write_out(out, Box::into_raw(Box::new(VdRational { inner: v })))
    })
}

/// `*out = a + b`.
///
/// # Safety
/// Handles must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_add(a: *const VdRational, b: *const VdRational, out: *mut *mut VdRational) -> VdStatus {
    binary(a, b, out, |x, y| Ok(x + y))
}

/// `*out = a - b`.
///
/// # Safety
/// Handles must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_sub(a: *const VdRational, b: *const VdRational, out: *mut *mut VdRational) -> VdStatus {
    binary(a, b, out, |x, y| Ok(x - y))
}

/// `*out = a * b`.
///
/// # Safety
/// Handles must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_mul(a: *const VdRational, b: *const VdRational, out: *mut *mut VdRational) -> VdStatus {
    binary(a, b, out, |x, y| Ok(x * y))
}

/// `*out = a / b`; fails with `Arithmetic` when `b` is zero.
///
/// # Safety
/// Handles must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_div(a: *const VdRational, b: *const VdRational, out: *mut *mut VdRational) -> VdStatus {
    binary(a, b, out, |x, y| Ok(x.checked_div(y)?))
}

/// `*out = 1` if `a == b`, else `0`.
///
/// # Safety
/// Handles must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_equal(a: *const VdRational, b: *const VdRational, out: *mut i32) -> VdStatus {
    guard(|| write_out(out, i32::from(handle(a)?.inner == handle(b)?.inner)))
}

/// Canonical text of `r`; free with [`vd_string_free`].
///
/// # Safety
/// `r` must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_rational_to_string(r: *const VdRational, out: *mut *mut c_char) -> VdStatus {
    guard(|| write_string(out, handle(r)?.inner.to_canonical_string()))
}

// ---- symmetric functions --------------------------------------------------

/// Evaluates a symmetric-function expression such as
/// `"inner(nabla(e(3)), e(3))"`; functions are printed in the Schur basis.
///
/// # Safety
/// `expr` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_symfunc_eval(expr: *const c_char, degree_bound: u32, out: *mut *mut c_char) -> VdStatus {
    guard(|| {
        let lambda = Lambda::new(degree_bound);
        let text = match evaluate(&lambda, read_str(expr)?)? {
            Value::Scalar(c) => c.to_canonical_string(),
            Value::Func(f) => lambda.convert(&f, Basis::S)?.to_string(),
        };
        write_string(out, text)
    })
}

// ---- paths ----------------------------------------------------------------

/// Parses a path record (`{"steps": "NENE", "labels": [...], "dv": [...], "dr": [...]}`).
///
/// # Safety
/// `json` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_path_from_json(json: *const c_char, out: *mut *mut VdPath) -> VdStatus {
    guard(|| {
        let (p, _) = DecoratedPath::from_json(read_str(json)?)?;
        write_out(out, Box::into_raw(Box::new(VdPath { inner: p })))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn vd_path_free(p: *mut VdPath) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_path_area(p: *const VdPath, out: *mut u32) -> VdStatus {
    guard(|| write_out(out, handle(p)?.inner.area()))
}

/// # Safety
/// `p` must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_path_dinv(p: *const VdPath, out: *mut u32) -> VdStatus {
    guard(|| write_out(out, handle(p)?.inner.dinv()))
}

/// Reading word as a string of digits.
///
/// # Safety
/// `p` must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_path_reading_word(p: *const VdPath, out: *mut *mut c_char) -> VdStatus {
    guard(|| {
        let w = handle(p)?.inner.reading_word().iter().map(|v| v.to_string()).collect::<Vec<_>>().join("");
        write_string(out, w)
    })
}

/// Membership of `p` in the family `family` (`"LD"`, `"LSQ"`, `"LSQ'"`, `"D"`,
/// `"SQ'"`) with parameters `(m, n, k, d)`.
///
/// # Safety
/// `p` must be valid, `family` nul-terminated; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_path_in_family(
    p: *const VdPath,
    family: *const c_char,
    m: i64,
    n: i64,
    k: i64,
    d: i64,
    out: *mut i32,
) -> VdStatus {
    guard(|| {
        let family: Family = read_str(family)?.parse()?;
        let params = Params::new(nonneg(m, "m")?, nonneg(n, "n")?, nonneg(k, "k")?, nonneg(d, "d")?);
        write_out(out, i32::from(contains(family, params, &handle(p)?.inner)))
    })
}

/// q,t-enumerator of a family as canonical text, with the element count.
///
/// # Safety
/// `family` must be nul-terminated; `out` and `count` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn vd_enumerator(
    family: *const c_char,
    m: i64,
    n: i64,
    k: i64,
    d: i64,
    out: *mut *mut c_char,
    count: *mut u64,
) -> VdStatus {
    guard(|| {
        let family: Family = read_str(family)?.parse()?;
        let params = Params::new(nonneg(m, "m")?, nonneg(n, "n")?, nonneg(k, "k")?, nonneg(d, "d")?);
        let e = qt_enumerator(family, params)?;
        write_out(count, e.count)?;
        write_string(out, QTRational::from_mpoly(&e.total).to_canonical_string())
    })
}

// ---- identities -------------------------------------------------------------

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_verifier_new(degree_bound: u32, out: *mut *mut VdVerifier) -> VdStatus {
    guard(|| write_out(out, Box::into_raw(Box::new(VdVerifier { inner: Verifier::new(degree_bound) }))))
}

/// # Safety
/// `v` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn vd_verifier_free(v: *mut VdVerifier) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// `<Theta_{e_k} nabla E_{n-k,r}, e_{n-d} h_d>` as a rational handle.
///
/// # Safety
/// `v` must be valid; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vd_lhs_schroeder(v: *const VdVerifier, n: i64, k: i64, r: i64, d: i64, out: *mut *mut VdRational) -> VdStatus {
    guard(|| {
        let value = handle(v)?.inner.lhs_schroeder(n, k, r, d)?;
        write_out(out, Box::into_raw(Box::new(VdRational { inner: value })))
    })
}

/// Runs the sweep of identity `id` up to `n_max`; writes the JSON-lines
/// report stream (summary last) and the number of failed theorem checks.
///
/// # Safety
/// `v` must be valid, `id` nul-terminated; `out` and `failures` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn vd_verify(
    v: *const VdVerifier,
    id: *const c_char,
    n_max: i64,
    out: *mut *mut c_char,
    failures: *mut u64,
) -> VdStatus {
    guard(|| {
        let reports = run(&handle(v)?.inner, read_str(id)?, n_max, &Selectors::default())?;
        let summary = Summary::of(&reports);
        let mut text = String::new();
        for r in &reports {
            text.push_str(&r.to_json_line());
            text.push('\n');
        }
        text.push_str(&serde_json::json!({ "summary": summary }).to_string());
        text.push('\n');
        write_out(failures, summary.theorem_failures)?;
        write_string(out, text)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_round_trip() {
        let mut r: *mut VdRational = ptr::null_mut();
        let s = unsafe { vd_rational_parse(c"q +".as_ptr(), &mut r) };
        assert_eq!(s, VdStatus::Parse);
        assert!(!vd_last_error_message().is_null());
        let s = unsafe { vd_rational_parse(c"q + t".as_ptr(), &mut r) };
        assert_eq!(s, VdStatus::Ok);
        assert!(vd_last_error_message().is_null());
        unsafe { vd_rational_free(r) };
    }
}
