//! Acceptance run: one line per criterion. Criteria listed in `KNOWN_FAILURES` are expected
//! to fail for the stated reason; the run fails if any other criterion fails or if a known
//! failure starts passing.

use std::process::ExitCode;
use std::time::Instant;

use special_cocycles::cochain::{
    differential, equivariance_defect, evaluate, isotypic_multiplicity, kv_product, natural_eigenvalue, psi,
    vz_value_is_harmonic,
};
use special_cocycles::fock::{
    det_delta, det_delta_tilde, is_harmonic, k_side_action, weil_p_action, FockDims, FockPoly, KSide,
};
use special_cocycles::liealg::{chern_element, vz_vector, PDims, PIndex};
use special_cocycles::partition::{
    conjugate, exterior_decomposition, schur_dim, special_hom_dimension, special_hom_dimension_rule,
};
use special_cocycles::schrodinger::{
    bargmann_cochain, bilinear_form, km_cocycle, nonfactorization_demo, product_formula_check,
};
use special_cocycles::Scalar;

type Outcome = Result<(), String>;
type Criterion = fn() -> Outcome;

const KNOWN_FAILURES: &[(usize, &str)] = &[
    (
        3,
        "psi_{2q,2q} regroups into blocks with sign (-1)^(q*q), so the two-block image is -4 phi ^ phi at q=1",
    ),
    (
        4,
        "phi_{1,1} computed from the raising operators is phi0 sum (zbar z - delta/(2 pi)), not 2 phi0 sum zbar z",
    ),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn grid(pmax: u32, qmax: u32) -> impl Iterator<Item = (u32, u32, u32, u32)> {
    (1..=pmax).flat_map(move |p| {
        (1..=qmax).flat_map(move |q| (0..=p).flat_map(move |a| (0..=p - a).map(move |b| (p, q, a, b))))
    })
}

fn closedness() -> Outcome {
    for p in 1..=4 {
        for q in 1..=3 {
            for (b, a) in [(1, 0), (0, 1)] {
                let d = differential(&psi(b, a, p, q).map_err(err)?);
                ensure(d.is_zero(), || {
                    format!("d psi one-sided (b={b},a={a}) at p={p} q={q}: {d}")
                })?;
            }
        }
    }
    for (p, q, a, b) in grid(4, 2) {
        let d = differential(&psi(b, a, p, q).map_err(err)?);
        ensure(d.is_zero(), || format!("d psi at (p,q,a,b)=({p},{q},{a},{b}): {d}"))?;
    }
    Ok(())
}

fn vz_evaluation() -> Outcome {
    for (p, q, a, b) in grid(4, 2) {
        let got = evaluate(&psi(b, a, p, q).map_err(err)?, &vz_vector(b, a, p, q).map_err(err)?).map_err(err)?;
        let want = kv_product(&FockDims::new(p, q, a, b).map_err(err)?).map_err(err)?;
        ensure(got == want, || format!("({p},{q},{a},{b}): {got} vs {want}"))?;
    }
    Ok(())
}

fn product_formula() -> Outcome {
    for p in 1..=3 {
        for q in 1..=2 {
            ensure(product_formula_check(p, q).map_err(err)?, || {
                format!("n=1 fails at p={p} q={q}")
            })?;
        }
    }
    let lhs = bargmann_cochain(&psi(2, 2, 2, 1).map_err(err)?, 2).map_err(err)?;
    let rhs = km_cocycle(2, 1, 2).map_err(err)?.scale(&Scalar::from_int(4));
    if lhs == rhs.scale(&Scalar::from_int(-1)) {
        return Err("n=2, p=2, q=1: image equals -4 phi ^ phi".into());
    }
    ensure(lhs == rhs, || "n=2, p=2, q=1: image differs from 4 phi ^ phi".into())
}

fn nonfactorization() -> Outcome {
    for p in 1..=3 {
        let (internal, km) = nonfactorization_demo(p).map_err(err)?;
        let shown_internal = bilinear_form(p, 2, 2).map_err(err)?;
        let shown_km = bilinear_form(p, 2, 1).map_err(err)?;
        ensure(internal == shown_internal, || {
            format!("p={p}: same-block product {internal}")
        })?;
        ensure(internal != km, || format!("p={p}: forms coincide"))?;
        ensure(km == shown_km, || format!("p={p}: phi_11 = {km}"))?;
    }
    Ok(())
}

fn equivariance() -> Outcome {
    for (p, q, a, b) in grid(3, 2).chain(grid(4, 1).filter(|c| c.0 == 4)) {
        let phi = psi(b, a, p, q).map_err(err)?;
        let dims = phi.dims;
        for x in dims.pdims().k_basis() {
            let d = equivariance_defect(&phi, x);
            ensure(d.is_zero(), || format!("({p},{q},{a},{b}) {x}: {d}"))?;
        }
        for mu in p + 1..=p + q {
            for (_, f) in phi.terms() {
                let want = f.scale(&Scalar::from_int(a as i64 - b as i64));
                ensure(k_side_action(&dims, KSide::GlQ(mu, mu), f) == want, || {
                    format!("({p},{q},{a},{b}) gl(q)[{mu},{mu}] eigenvalue")
                })?;
            }
        }
        let value = evaluate(&phi, &vz_vector(b, a, p, q).map_err(err)?).map_err(err)?;
        for i in 1..=a {
            let e = natural_eigenvalue(&dims, KSide::GlA(i, i), &value);
            ensure(e == Some(-(q as i64)), || {
                format!("({p},{q},{a},{b}) gl(a)[{i},{i}]: {e:?}")
            })?;
        }
        for j in 1..=b {
            let e = natural_eigenvalue(&dims, KSide::GlB(j, j), &value);
            ensure(e == Some(q as i64), || {
                format!("({p},{q},{a},{b}) gl(b)[{j},{j}]: {e:?}")
            })?;
        }
    }
    Ok(())
}

fn vacuum_character() -> Outcome {
    let one = FockPoly::one();
    for p in 1..=3 {
        for q in 1..=3 {
            for a in 0..=3 {
                for b in 0..=3 {
                    let dims = FockDims::new(p, q, a, b).map_err(err)?;
                    let want = [(KSide::GlP(1, 1), 0), (KSide::GlQ(p + 1, p + 1), a as i64 - b as i64)]
                        .into_iter()
                        .chain((a > 0).then_some((KSide::GlA(1, 1), q as i64)))
                        .chain((b > 0).then_some((KSide::GlB(1, 1), p as i64)));
                    for (x, w) in want {
                        let got = k_side_action(&dims, x, &one);
                        ensure(got == one.scale(&Scalar::from_int(w)), || {
                            format!("({p},{q},{a},{b}) {x}: {got}")
                        })?;
                    }
                    // the Weil operators of p bracket into k with the same character
                    let (x, y) = (PIndex::prime(1, p + 1), PIndex::dprime(1, p + 1));
                    let br = weil_p_action(&dims, x, &weil_p_action(&dims, y, &one)).sub(&weil_p_action(
                        &dims,
                        y,
                        &weil_p_action(&dims, x, &one),
                    ));
                    let w = k_side_action(&dims, KSide::GlQ(p + 1, p + 1), &one).sub(&k_side_action(
                        &dims,
                        KSide::GlP(1, 1),
                        &one,
                    ));
                    ensure(br == w, || format!("({p},{q},{a},{b}) bracket {br}"))?;
                }
            }
        }
    }
    Ok(())
}

fn harmonicity() -> Outcome {
    for p in 1..=4 {
        let dims = FockDims::new(p, 1, p, p).map_err(err)?;
        for k in 1..=p {
            let dk = det_delta(&dims, k).map_err(err)?;
            let dtk = det_delta_tilde(&dims, k).map_err(err)?;
            ensure(is_harmonic(&dims, &dk), || format!("Delta_{k}, p={p}"))?;
            ensure(is_harmonic(&dims, &dtk), || format!("Delta~_{k}, p={p}"))?;
            for l in 1..=p - k {
                let dl = det_delta_tilde(&dims, l).map_err(err)?;
                for (e1, e2) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                    let f = dk.pow(e1).mul(&dl.pow(e2));
                    ensure(is_harmonic(&dims, &f), || {
                        format!("Delta_{k}^{e1} Delta~_{l}^{e2}, p={p}")
                    })?;
                }
            }
        }
    }
    for (p, q, a, b) in grid(4, 2) {
        ensure(vz_value_is_harmonic(b, a, p, q).map_err(err)?, || {
            format!("value at ({p},{q},{a},{b})")
        })?;
    }
    Ok(())
}

fn multiplicity_one() -> Outcome {
    for (p, q, a, b) in [
        (2, 1, 1, 1),
        (3, 1, 1, 1),
        (3, 1, 2, 1),
        (2, 2, 1, 1),
        (3, 1, 1, 0),
        (3, 1, 0, 1),
    ] {
        let m = isotypic_multiplicity(p, q, a, b, (a + b) * q).map_err(err)?;
        ensure(m == 1, || format!("({p},{q},{a},{b}): {m}"))?;
    }
    Ok(())
}

fn binomial(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinatorics() -> Outcome {
    for p in 1..=4 {
        for q in 1..=4 {
            for r in 0..=p * q {
                let s: u128 = exterior_decomposition(p, q, r)
                    .iter()
                    .map(|l| schur_dim(l, p) * schur_dim(&conjugate(l), q))
                    .sum();
                ensure(s == binomial(p * q, r), || format!("p={p} q={q} R={r}: {s}"))?;
            }
        }
    }
    for p in 1..=5 {
        for q in 1..=3 {
            for a in 0..=p {
                for b in 0..=p - a {
                    for n in 0..=p {
                        let got = special_hom_dimension(p, q, a, b, n).map_err(err)?;
                        let want = special_hom_dimension_rule(p, a, b, n);
                        ensure(got == want, || format!("({p},{q},{a},{b}) n={n}: {got} vs {want}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn chern_invariance() -> Outcome {
    for p in 1..=4 {
        for q in 1..=4 {
            let c = chern_element(p, q).map_err(err)?;
            ensure(!c.is_zero(), || format!("c_q vanishes at p={p} q={q}"))?;
            for x in PDims::new(p, q).map_err(err)?.k_basis() {
                let d = c.k_action(x);
                ensure(d.is_zero(), || format!("p={p} q={q} {x}: {d}"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("closedness", closedness),
        ("vz evaluation", vz_evaluation),
        ("local product formula", product_formula),
        ("non-factorization", nonfactorization),
        ("equivariance", equivariance),
        ("vacuum character", vacuum_character),
        ("harmonicity", harmonicity),
        ("multiplicity one", multiplicity_one),
        ("combinatorics", combinatorics),
        ("chern invariance", chern_invariance),
    ];
    let mut ok = true;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let n = n + 1;
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n).map(|(_, why)| *why);
        match (&outcome, known) {
            (Ok(()), None) => println!("criterion {n:>2} {name}: PASS ({ms} ms)"),
            (Err(e), Some(why)) => println!("criterion {n:>2} {name}: FAIL (expected: {why}) [{e}] ({ms} ms)"),
            (Err(e), None) => {
                ok = false;
                println!("criterion {n:>2} {name}: FAIL [{e}] ({ms} ms)");
            }
            (Ok(()), Some(_)) => {
                ok = false;
                println!("criterion {n:>2} {name}: PASS but listed as a known failure ({ms} ms)");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
