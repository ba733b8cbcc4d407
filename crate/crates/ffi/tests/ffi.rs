use std::ffi::{CStr, CString};
use std::ptr;

use special_cocycles_ffi::*;

#[test]
fn cocycle_round_trip() {
    unsafe {
        let mut c: *mut ScCochain = ptr::null_mut();
        assert_eq!(sc_psi_new(1, 1, 2, 1, &mut c), ScStatus::Ok);
        let mut closed = false;
        assert_eq!(sc_cochain_is_closed(c, &mut closed), ScStatus::Ok);
        assert!(closed);
        let mut eq = false;
        assert_eq!(sc_cochain_is_equivariant(c, &mut eq), ScStatus::Ok);
        assert!(eq);
        let mut n = 0usize;
        assert_eq!(sc_cochain_num_terms(c, &mut n), ScStatus::Ok);
        assert_eq!(n, 4);

        let mut v: *mut ScMultivector = ptr::null_mut();
        assert_eq!(sc_vz_vector_new(1, 1, 2, 1, &mut v), ScStatus::Ok);
        let mut val: *mut ScFockPoly = ptr::null_mut();
        assert_eq!(sc_evaluate(c, v, &mut val), ScStatus::Ok);
        let mut want: *mut ScFockPoly = ptr::null_mut();
        assert_eq!(sc_kv_product_new(2, 1, 1, 1, &mut want), ScStatus::Ok);
        let mut same = false;
        assert_eq!(sc_fock_poly_equal(val, want, &mut same), ScStatus::Ok);
        assert!(same);
        let mut harm = false;
        assert_eq!(sc_fock_poly_is_harmonic(val, &mut harm), ScStatus::Ok);
        assert!(harm);

        let mut s: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(sc_fock_poly_to_string(val, &mut s), ScStatus::Ok);
        assert!(CStr::from_ptr(s).to_str().unwrap().contains("z''"));
        sc_string_free(s);

        sc_fock_poly_free(val);
        sc_fock_poly_free(want);
        sc_multivector_free(v);
        sc_cochain_free(c);
    }
}

#[test]
fn errors_are_status_codes() {
    unsafe {
        let mut c: *mut ScCochain = ptr::null_mut();
        assert_eq!(sc_psi_new(1, 1, 9, 4, &mut c), ScStatus::InvalidArgument);
        assert!(c.is_null());
        assert_eq!(sc_psi_new(1, 0, 2, 1, ptr::null_mut()), ScStatus::NullPointer);
        let mut b = false;
        assert_eq!(sc_cochain_is_closed(ptr::null(), &mut b), ScStatus::NullPointer);
        let mut d = 0u64;
        assert_eq!(
            sc_special_hom_dimension(2, 1, 2, 1, 1, &mut d),
            ScStatus::InvalidArgument
        );
        let bad = [1u32, 3];
        assert_eq!(
            sc_lr_coefficient(bad.as_ptr(), 2, ptr::null(), 0, ptr::null(), 0, &mut d),
            ScStatus::InvalidArgument
        );
        let msg = CStr::from_ptr(sc_status_message(ScStatus::NullPointer));
        assert_eq!(msg.to_str().unwrap(), "null pointer");
        sc_cochain_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());
    }
}

#[test]
fn scalar_queries() {
    unsafe {
        let (l, m, n) = ([1u32, 1], [1u32], [2u32, 1]);
        let mut c = 0u64;
        assert_eq!(
            sc_lr_coefficient(l.as_ptr(), 2, m.as_ptr(), 1, n.as_ptr(), 2, &mut c),
            ScStatus::Ok
        );
        assert_eq!(c, 1);
        assert_eq!(sc_special_hom_dimension(3, 1, 1, 0, 3, &mut c), ScStatus::Ok);
        assert_eq!(c, 1);
        let mut k = 0usize;
        assert_eq!(sc_isotypic_multiplicity(2, 1, 1, 1, 2, &mut k), ScStatus::Ok);
        assert_eq!(k, 1);
        let mut ok = false;
        assert_eq!(sc_product_formula_check(2, 1, &mut ok), ScStatus::Ok);
        assert!(ok);
        let mut ch: *mut ScMultivector = ptr::null_mut();
        assert_eq!(sc_chern_element_new(2, 2, &mut ch), ScStatus::Ok);
        assert_eq!(sc_multivector_is_invariant(ch, &mut ok), ScStatus::Ok);
        assert!(ok);
        sc_multivector_free(ch);
    }
}

#[test]
fn run_checks_returns_json() {
    let s = |t: &str| CString::new(t).unwrap();
    let (p, q, a, b, checks) = (s("1-2"), s("1"), s("0-1"), s("0-1"), s("closedness,chern-invariance"));
    unsafe {
        let mut ok = false;
        let mut out: *mut std::ffi::c_char = ptr::null_mut();
        let st = sc_run_checks(
            p.as_ptr(),
            q.as_ptr(),
            a.as_ptr(),
            b.as_ptr(),
            checks.as_ptr(),
            2,
            &mut ok,
            &mut out,
        );
        assert_eq!(st, ScStatus::Ok);
        assert!(ok);
        let json = CStr::from_ptr(out).to_str().unwrap().to_owned();
        sc_string_free(out);
        assert!(json.contains("\"records\""));
        assert!(json.contains("chern-invariance"));

        let bad = s("bogus");
        let st = sc_run_checks(
            p.as_ptr(),
            q.as_ptr(),
            a.as_ptr(),
            b.as_ptr(),
            bad.as_ptr(),
            1,
            &mut ok,
            &mut out,
        );
        assert_eq!(st, ScStatus::InvalidArgument);
        let st = sc_run_checks(
            ptr::null(),
            q.as_ptr(),
            a.as_ptr(),
            b.as_ptr(),
            checks.as_ptr(),
            1,
            &mut ok,
            &mut out,
        );
        assert_eq!(st, ScStatus::NullPointer);
    }
}

#[test]
fn header_declares_exports() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/special_cocycles.h")).unwrap();
    for f in ["sc_psi_new", "sc_run_checks", "sc_string_free", "ScStatus", "ScCochain"] {
        assert!(h.contains(f), "{f}");
    }
}
