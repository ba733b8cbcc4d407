//! C ABI over the special-cocycles library. Objects cross the boundary as opaque handles that
//! the caller releases with the matching `_free`; every call returns an `ScStatus`.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use special_cocycles::cochain::{self, Cochain};
use special_cocycles::fock::{self, FockDims, FockPoly};
use special_cocycles::liealg::{self, Multivector, PDims};
use special_cocycles::partition::{self, Partition};
use special_cocycles::schrodinger;
use special_cocycles::verify::{self, CheckConfig};
use special_cocycles::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Panic = 3,
    Utf8 = 4,
}

/// Cochain handle.
pub struct ScCochain(Cochain);

/// Fock polynomial handle, carrying its dimensions.
pub struct ScFockPoly {
    dims: FockDims,
    poly: FockPoly,
}

/// Exterior algebra element handle.
pub struct ScMultivector(Multivector);

impl From<Error> for ScStatus {
    fn from(_: Error) -> Self {
        ScStatus::InvalidArgument
    }
}

fn guard(f: impl FnOnce() -> Result<(), ScStatus>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ScStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => ScStatus::Panic,
    }
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), ScStatus> {
    if out.is_null() {
        return Err(ScStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, v: T) -> Result<(), ScStatus> {
    if out.is_null() {
        return Err(ScStatus::NullPointer);
    }
    out.write(Box::into_raw(Box::new(v)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), ScStatus> {
    if out.is_null() {
        return Err(ScStatus::NullPointer);
    }
    let c = CString::new(s).map_err(|_| ScStatus::Utf8)?;
    out.write(c.into_raw());
    Ok(())
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, ScStatus> {
    p.as_ref().ok_or(ScStatus::NullPointer)
}

unsafe fn get_str<'a>(p: *const c_char) -> Result<&'a str, ScStatus> {
    if p.is_null() {
        return Err(ScStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| ScStatus::Utf8)
}

unsafe fn get_partition(parts: *const u32, len: usize) -> Result<Partition, ScStatus> {
    if len == 0 {
        return Ok(Partition::empty());
    }
    if parts.is_null() {
        return Err(ScStatus::NullPointer);
    }
    Ok(Partition::new(std::slice::from_raw_parts(parts, len).to_vec())?)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn sc_status_message(status: ScStatus) -> *const c_char {
    let s: &'static CStr = match status {
        ScStatus::Ok => c"ok",
        ScStatus::NullPointer => c"null pointer",
        ScStatus::InvalidArgument => c"invalid argument",
        ScStatus::Panic => c"internal panic",
        ScStatus::Utf8 => c"invalid UTF-8",
    };
    s.as_ptr()
}

/// Release a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `psi_{bq,aq}` for `U(p,q) x U(a,b)`.
#[no_mangle]
pub unsafe extern "C" fn sc_psi_new(b: u32, a: u32, p: u32, q: u32, out: *mut *mut ScCochain) -> ScStatus {
    guard(|| put_box(out, ScCochain(cochain::psi(b, a, p, q)?)))
}

#[no_mangle]
pub unsafe extern "C" fn sc_cochain_free(c: *mut ScCochain) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of (blade, monomial) terms.
#[no_mangle]
pub unsafe extern "C" fn sc_cochain_num_terms(c: *const ScCochain, out: *mut usize) -> ScStatus {
    guard(|| put(out, get(c)?.0.num_terms()))
}

/// Whether the differential of the cochain vanishes.
#[no_mangle]
pub unsafe extern "C" fn sc_cochain_is_closed(c: *const ScCochain, out: *mut bool) -> ScStatus {
    guard(|| put(out, cochain::differential(&get(c)?.0).is_zero()))
}

/// Whether the cochain commutes with every basis element of `k`.
#[no_mangle]
pub unsafe extern "C" fn sc_cochain_is_equivariant(c: *const ScCochain, out: *mut bool) -> ScStatus {
    guard(|| {
        let c = &get(c)?.0;
        let ok = c
            .dims
            .pdims()
            .k_basis()
            .into_iter()
            .all(|x| cochain::equivariance_defect(c, x).is_zero());
        put(out, ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_cochain_to_string(c: *const ScCochain, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, get(c)?.0.to_string()))
}

/// The Vogan-Zuckerman vector `e(bq,aq)`.
#[no_mangle]
pub unsafe extern "C" fn sc_vz_vector_new(b: u32, a: u32, p: u32, q: u32, out: *mut *mut ScMultivector) -> ScStatus {
    guard(|| put_box(out, ScMultivector(liealg::vz_vector(b, a, p, q)?)))
}

/// The Chern element `c_q`.
#[no_mangle]
pub unsafe extern "C" fn sc_chern_element_new(p: u32, q: u32, out: *mut *mut ScMultivector) -> ScStatus {
    guard(|| put_box(out, ScMultivector(liealg::chern_element(p, q)?)))
}

#[no_mangle]
pub unsafe extern "C" fn sc_multivector_free(m: *mut ScMultivector) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Whether every basis element of `k` kills the element.
#[no_mangle]
pub unsafe extern "C" fn sc_multivector_is_invariant(m: *const ScMultivector, out: *mut bool) -> ScStatus {
    guard(|| {
        let m = &get(m)?.0;
        put(out, m.dims.k_basis().into_iter().all(|x| m.k_action(x).is_zero()))
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_multivector_to_string(m: *const ScMultivector, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, get(m)?.0.to_string()))
}

/// Evaluate a cochain on a multivector of the same `(p,q)`.
#[no_mangle]
pub unsafe extern "C" fn sc_evaluate(
    c: *const ScCochain,
    v: *const ScMultivector,
    out: *mut *mut ScFockPoly,
) -> ScStatus {
    guard(|| {
        let c = &get(c)?.0;
        let poly = cochain::evaluate(c, &get(v)?.0)?;
        put_box(out, ScFockPoly { dims: c.dims, poly })
    })
}

/// `Delta~_a^q Delta_b^q`.
#[no_mangle]
pub unsafe extern "C" fn sc_kv_product_new(p: u32, q: u32, a: u32, b: u32, out: *mut *mut ScFockPoly) -> ScStatus {
    guard(|| {
        let dims = FockDims::new(p, q, a, b)?;
        put_box(
            out,
            ScFockPoly {
                dims,
                poly: cochain::kv_product(&dims)?,
            },
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_fock_poly_free(f: *mut ScFockPoly) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sc_fock_poly_equal(f: *const ScFockPoly, g: *const ScFockPoly, out: *mut bool) -> ScStatus {
    guard(|| put(out, get(f)?.poly == get(g)?.poly))
}

/// Annihilated by every Laplacian of its dimensions.
#[no_mangle]
pub unsafe extern "C" fn sc_fock_poly_is_harmonic(f: *const ScFockPoly, out: *mut bool) -> ScStatus {
    guard(|| {
        let f = get(f)?;
        put(out, fock::is_harmonic(&f.dims, &f.poly))
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_fock_poly_to_string(f: *const ScFockPoly, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, get(f)?.poly.to_string()))
}

/// Littlewood-Richardson coefficient `c^lambda_{mu,nu}`; partitions as part arrays.
#[no_mangle]
pub unsafe extern "C" fn sc_lr_coefficient(
    lambda: *const u32,
    lambda_len: usize,
    mu: *const u32,
    mu_len: usize,
    nu: *const u32,
    nu_len: usize,
    out: *mut u64,
) -> ScStatus {
    guard(|| {
        let (l, m, n) = (
            get_partition(lambda, lambda_len)?,
            get_partition(mu, mu_len)?,
            get_partition(nu, nu_len)?,
        );
        put(out, partition::lr_coefficient(&l, &m, &n))
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_special_hom_dimension(p: u32, q: u32, a: u32, b: u32, n: u32, out: *mut u64) -> ScStatus {
    guard(|| put(out, partition::special_hom_dimension(p, q, a, b, n)?))
}

#[no_mangle]
pub unsafe extern "C" fn sc_isotypic_multiplicity(
    p: u32,
    q: u32,
    a: u32,
    b: u32,
    degree: u32,
    out: *mut usize,
) -> ScStatus {
    guard(|| put(out, cochain::isotypic_multiplicity(p, q, a, b, degree)?))
}

/// Whether the Bargmann image of `psi_{q,0} ^ psi_{0,q}` is `2^q phi_{q,q}`.
#[no_mangle]
pub unsafe extern "C" fn sc_product_formula_check(p: u32, q: u32, out: *mut bool) -> ScStatus {
    guard(|| {
        PDims::new(p, q)?;
        put(out, schrodinger::product_formula_check(p, q)?)
    })
}

/// Run checks over a grid and return the JSON report. Ranges use the CLI syntax
/// (`N`, `A-B`, `A..B`, `A..=B`); `checks` is `all` or a comma list. `success` reports
/// whether no cell failed.
#[no_mangle]
pub unsafe extern "C" fn sc_run_checks(
    p: *const c_char,
    q: *const c_char,
    a: *const c_char,
    b: *const c_char,
    checks: *const c_char,
    jobs: usize,
    success: *mut bool,
    out_json: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        let config = CheckConfig {
            p: get_str(p)?.parse()?,
            q: get_str(q)?.parse()?,
            a: get_str(a)?.parse()?,
            b: get_str(b)?.parse()?,
            checks: verify::parse_checks(get_str(checks)?)?,
            jobs,
            max_degree: None,
        };
        let report = verify::run(&config)?;
        put(success, report.success())?;
        put_string(out_json, report.to_json())
    })
}
