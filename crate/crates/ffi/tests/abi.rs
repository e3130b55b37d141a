use std::ffi::CStr;
use std::ptr;

use su11_coherent_ffi::*;

fn last_error() -> String {
    let mut buf = [0 as std::ffi::c_char; 256];
    unsafe {
        su11_last_error_message(buf.as_mut_ptr(), buf.len());
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

unsafe fn new_state(family: u32, z: (f64, f64), m: u32, lambda: f64) -> *mut Su11State {
    let mut s = ptr::null_mut();
    assert_eq!(su11_state_new(family, z.0, z.1, m, lambda, SU11_DEFAULT_TAIL_TOL, &mut s), Su11Status::Ok);
    assert!(!s.is_null());
    s
}

#[test]
fn state_round_trip() {
    unsafe {
        let s = new_state(SU11_FAMILY_BGCS, (1.0, 0.0), 0, 0.5);
        let mut len = 0usize;
        assert_eq!(su11_state_len(s, &mut len), Su11Status::Ok);
        let mut re = vec![0.0; len];
        let mut im = vec![0.0; len];
        assert_eq!(su11_state_coefficients(s, re.as_mut_ptr(), im.as_mut_ptr(), len), Su11Status::Ok);
        // BGCS at λ = 1/2, z = 1: cₙ = 1/(n! √I₀(2)).
        let i0 = 2.279_585_302_336_067_f64;
        assert!((re[0] - 1.0 / i0.sqrt()).abs() < 1e-15);
        assert!((re[3] - 1.0 / (6.0 * i0.sqrt())).abs() < 1e-15);
        assert!(im.iter().all(|v| *v == 0.0));

        let mut tail = -1.0;
        assert_eq!(su11_state_tail_bound(s, &mut tail), Su11Status::Ok);
        assert!((0.0..=1e-15).contains(&tail));

        let (mut ore, mut oim) = (0.0, 0.0);
        assert_eq!(su11_state_overlap(s, s, &mut ore, &mut oim), Su11Status::Ok);
        assert!((ore - 1.0).abs() < 1e-14 && oim.abs() < 1e-15);
        su11_state_free(s);
    }
}

#[test]
fn observables_agree_with_closed_forms() {
    unsafe {
        for (family, m) in [(SU11_FAMILY_NBGCS, 3), (SU11_FAMILY_PABGCS, 2)] {
            let s = new_state(family, (0.8, 0.6), m, 2.5);
            let mut direct = Su11Observables::default();
            let mut closed = Su11Observables::default();
            assert_eq!(su11_state_observables(s, &mut direct), Su11Status::Ok);
            assert_eq!(su11_closed_observables(family, 0.8, 0.6, m, 2.5, &mut closed), Su11Status::Ok);
            for (a, b) in [
                (direct.exp_n, closed.exp_n),
                (direct.exp_n2, closed.exp_n2),
                (direct.exp_jp_re, closed.exp_jp_re),
                (direct.exp_jp_im, closed.exp_jp_im),
                (direct.exp_jp_jm, closed.exp_jp_jm),
                (direct.mandel_q, closed.mandel_q),
            ] {
                assert!((a - b).abs() <= 1e-10 * a.abs().max(1.0), "{a} vs {b}");
            }
            su11_state_free(s);
        }
    }
}

#[test]
fn bgcs_spot_values() {
    unsafe {
        let s = new_state(SU11_FAMILY_BGCS, (1.0, 0.0), 0, 0.5);
        let mut o = Su11Observables::default();
        assert_eq!(su11_state_observables(s, &mut o), Su11Status::Ok);
        assert!((o.exp_n - 0.697_774_657_964_008).abs() < 1e-12);
        assert!((o.mandel_q - -0.264_647_2).abs() < 1e-6);
        su11_state_free(s);

        let s = new_state(SU11_FAMILY_PABGCS, (0.0, 0.0), 0, 0.5);
        assert_eq!(su11_state_observables(s, &mut o), Su11Status::Ok);
        assert!(o.g2.is_nan());
        su11_state_free(s);
    }
}

#[test]
fn moments_and_measure() {
    unsafe {
        let mut r = 0.0;
        assert_eq!(su11_moment_ratio(SU11_FAMILY_NBGCS, 7, 3, 2.5, &mut r), Su11Status::Ok);
        assert!((r - 1.0).abs() < 1e-12);
        assert_eq!(su11_moment_ratio(SU11_FAMILY_PABGCS, 7, 3, 2.5, &mut r), Su11Status::Ok);
        assert!((r - 0.5).abs() < 1e-12);
        let mut k = 0.0;
        assert_eq!(su11_measure_m0(1.0, 0.5, &mut k), Su11Status::Ok);
        assert!((k - 0.165_286).abs() < 5e-7);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(su11_state_new(7, 1.0, 0.0, 0, 0.5, 0.0, &mut s), Su11Status::InvalidParameter);
        assert!(s.is_null());
        assert!(last_error().contains("family code 7"));

        assert_eq!(su11_state_new(SU11_FAMILY_NBGCS, 1.0, 0.0, 0, -0.7, 0.0, &mut s), Su11Status::InvalidParameter);
        assert_eq!(su11_state_new(SU11_FAMILY_NBGCS, 1.0, 0.0, 0, 0.5, 0.0, ptr::null_mut()), Su11Status::NullPointer);
        assert_eq!(su11_state_len(ptr::null(), &mut 0usize), Su11Status::NullPointer);
        assert_eq!(last_error(), "null pointer: state");

        let s = new_state(SU11_FAMILY_NBGCS, (1.0, 0.0), 1, 0.5);
        let mut re = [0.0; 4];
        let mut im = [0.0; 4];
        assert_eq!(su11_state_coefficients(s, re.as_mut_ptr(), im.as_mut_ptr(), 4), Su11Status::BufferTooSmall);
        su11_state_free(s);
        su11_state_free(ptr::null_mut());

        let mut v = 0.0;
        assert_eq!(su11_measure_m0(-1.0, 0.5, &mut v), Su11Status::InvalidParameter);
        assert_eq!(su11_moment_ratio(SU11_FAMILY_BGCS, 1, 2, 0.5, &mut v), Su11Status::InvalidParameter);
    }
}

#[test]
fn error_message_length_query() {
    unsafe {
        let mut s = ptr::null_mut();
        su11_state_new(9, 0.0, 0.0, 0, 0.5, 0.0, &mut s);
        let full = su11_last_error_message(ptr::null_mut(), 0);
        assert_eq!(full, last_error().len());
        let mut small = [1 as std::ffi::c_char; 5];
        assert_eq!(su11_last_error_message(small.as_mut_ptr(), small.len()), full);
        assert_eq!(small[4], 0);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(su11_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/su11_coherent.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["su11_state_new", "su11_state_free", "su11_last_error_message", "SU11_STATUS_BUFFER_TOO_SMALL"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match std::process::Command::new(&cc).args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", header]).output() {
        Ok(out) => assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr)),
        Err(_) => eprintln!("no C compiler ({cc}); syntax check skipped"),
    }
}
