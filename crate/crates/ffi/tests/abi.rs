use std::ffi::{c_char, CStr};
use std::process::Command;
use std::ptr;

use valley_delta_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let v = CStr::from_ptr(s).to_str().unwrap().to_string();
    vd_string_free(s);
    v
}

#[test]
fn rational_arithmetic() {
    unsafe {
        let (mut a, mut b, mut c) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(vd_rational_parse(c"q + t".as_ptr(), &mut a), VdStatus::Ok);
        assert_eq!(vd_rational_parse(c"q - t".as_ptr(), &mut b), VdStatus::Ok);
        assert_eq!(vd_rational_mul(a, b, &mut c), VdStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(vd_rational_to_string(c, &mut s), VdStatus::Ok);
        assert_eq!(take(s), "q^2 - t^2");

        let mut zero = ptr::null_mut();
        let mut q = ptr::null_mut();
        assert_eq!(vd_rational_parse(c"0".as_ptr(), &mut zero), VdStatus::Ok);
        assert_eq!(vd_rational_div(a, zero, &mut q), VdStatus::Arithmetic);
        assert!(q.is_null());
        assert!(!vd_last_error_message().is_null());

        let mut eq = -1;
        assert_eq!(vd_rational_equal(a, a, &mut eq), VdStatus::Ok);
        assert_eq!(eq, 1);
        for h in [a, b, c, zero] {
            vd_rational_free(h);
        }
    }
}

#[test]
fn null_and_bad_input() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(vd_rational_parse(ptr::null(), &mut r), VdStatus::NullPointer);
        assert_eq!(vd_rational_parse(c"q".as_ptr(), ptr::null_mut()), VdStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(vd_rational_parse(bad.as_ptr().cast(), &mut r), VdStatus::InvalidUtf8);
        let mut s = ptr::null_mut();
        assert_eq!(vd_symfunc_eval(c"e(9)".as_ptr(), 4, &mut s), VdStatus::DegreeBound);
        let msg = CStr::from_ptr(vd_last_error_message()).to_str().unwrap();
        assert!(msg.contains("degree 9"), "{msg}");
        vd_rational_free(ptr::null_mut());
        vd_string_free(ptr::null_mut());
    }
}

#[test]
fn symfunc_and_paths() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(vd_symfunc_eval(c"inner(nabla(e(2)), e(2))".as_ptr(), 4, &mut s), VdStatus::Ok);
        assert_eq!(take(s), "q + t");

        let mut p = ptr::null_mut();
        let json = c"{\"steps\":\"NEEEENENNENNNENE\",\"labels\":[2,0,2,4,0,1,3,4],\"dv\":[2,8],\"dr\":[]}";
        assert_eq!(vd_path_from_json(json.as_ptr(), &mut p), VdStatus::Ok);
        let mut area = 0;
        assert_eq!(vd_path_area(p, &mut area), VdStatus::Ok);
        assert_eq!(area, 13);
        let mut w = ptr::null_mut();
        assert_eq!(vd_path_reading_word(p, &mut w), VdStatus::Ok);
        assert_eq!(take(w), "02401234");
        let mut member = -1;
        assert_eq!(vd_path_in_family(p, c"LSQ'".as_ptr(), 2, 6, 2, 0, &mut member), VdStatus::Ok);
        assert_eq!(member, 1);
        assert_eq!(vd_path_in_family(p, c"XY".as_ptr(), 2, 6, 2, 0, &mut member), VdStatus::InvalidArgument);
        vd_path_free(p);

        let mut e = ptr::null_mut();
        let mut count = 0;
        assert_eq!(vd_enumerator(c"D".as_ptr(), 0, 3, 0, 0, &mut e, &mut count), VdStatus::Ok);
        assert_eq!(count, 5);
        assert_eq!(take(e), "q^3 + q^2*t + q*t^2 + t^3 + q*t");
    }
}

#[test]
fn verifier() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(vd_verifier_new(4, &mut v), VdStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(vd_lhs_schroeder(v, 2, 0, 1, 0, &mut r), VdStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(vd_rational_to_string(r, &mut s), VdStatus::Ok);
        assert_eq!(take(s), "t");
        vd_rational_free(r);

        let mut out = ptr::null_mut();
        let mut failures = 99;
        assert_eq!(vd_verify(v, c"schroeder-valley".as_ptr(), 3, &mut out, &mut failures), VdStatus::Ok);
        assert_eq!(failures, 0);
        let text = take(out);
        assert!(text.lines().last().unwrap().starts_with("{\"summary\""));
        assert_eq!(vd_verify(v, c"nope".as_ptr(), 3, &mut out, &mut failures), VdStatus::UnknownIdentity);
        vd_verifier_free(v);
    }
}

#[test]
fn header_is_valid_c() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include").join("valley_delta.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["vd_rational_parse", "vd_verify", "vd_last_error_message", "VD_STATUS_OK", "typedef struct VdVerifier VdVerifier"] {
        assert!(text.contains(name), "{name} missing from the header");
    }
    let src = std::env::temp_dir().join("valley_delta_header_check.c");
    std::fs::write(&src, "#include \"valley_delta.h\"\nint main(void) { return vd_last_error_message() == 0 ? 0 : 1; }\n").unwrap();
    match Command::new("cc").arg("-fsyntax-only").arg("-Wall").arg("-Werror").arg("-I").arg(dir.join("include")).arg(&src).status() {
        Ok(status) => assert!(status.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler; header compile check skipped"),
    }
}
