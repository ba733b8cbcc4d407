//! Cochains `Hom(Lambda p, P)` stored as `sum_m xi_m (x) f_m`, the differential,
//! the special cocycles and their checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::fock::{
    is_harmonic, k_side_action, laplacian, natural_action, plus_weight_slice, weil_p_action_on, Family, FockDims,
    FockMonomial, FockPoly, FockVar, KSide,
};
use crate::liealg::{bits, wedge_sign, Algebra, KBasis, Kind, Multivector, PIndex};
use crate::linalg::{rank, SparseRow};
use crate::scalar::Scalar;

/// A finite sum of covector blades tensored with Fock polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub dims: FockDims,
    terms: BTreeMap<u64, FockPoly>,
}

impl Cochain {
    pub fn zero(dims: FockDims) -> Self {
        Cochain {
            dims,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-0 cochain with value `f`.
    pub fn constant(dims: FockDims, f: FockPoly) -> Self {
        let mut c = Cochain::zero(dims);
        c.add_term(0, &f);
        c
    }

    pub fn one(dims: FockDims) -> Self {
        Cochain::constant(dims, FockPoly::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &FockPoly)> {
        self.terms.iter().map(|(m, f)| (*m, f))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of exterior basis monomials carrying a nonzero value.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `(blade, polynomial monomial)` pairs.
    pub fn num_terms(&self) -> usize {
        self.terms.values().map(|f| f.len()).sum()
    }

    pub fn add_term(&mut self, mask: u64, f: &FockPoly) {
        if f.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_default();
        e.add_assign(f);
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, o: &Cochain) -> Cochain {
        let mut r = self.clone();
        for (m, f) in &o.terms {
            r.add_term(*m, f);
        }
        r
    }

    pub fn sub(&self, o: &Cochain) -> Cochain {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let mut r = Cochain::zero(self.dims);
        for (m, f) in &self.terms {
            r.add_term(*m, &f.scale(c));
        }
        r
    }

    /// The value polynomial attached to a blade.
    pub fn value(&self, mask: u64) -> FockPoly {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    /// `(#prime, #doubleprime)` if every blade has it.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let pd = self.dims.pdims();
        let mut it = self.terms.keys().map(|m| pd.bidegree(*m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// W-coordinates occupied by the values: `(positive i's, negative j's)`.
    pub fn w_blocks(&self) -> (BTreeSet<u32>, BTreeSet<u32>) {
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for f in self.terms.values() {
            for v in f.variables() {
                match v.family {
                    Family::ZPrime | Family::WDPrime => plus.insert(v.w),
                    Family::ZDPrime | Family::WPrime => minus.insert(v.w),
                };
            }
        }
        (plus, minus)
    }

    /// All Fock variables occurring in the values.
    pub fn variables(&self) -> BTreeSet<FockVar> {
        self.terms.values().flat_map(|f| f.variables()).collect()
    }

    /// The exterior part of the term at `mask` as a covector.
    pub fn blade(&self, mask: u64) -> Multivector {
        Multivector::blade(self.dims.pdims(), Algebra::Covectors, mask, Scalar::one())
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, v)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v}) (x) {}", self.blade(*m))?;
        }
        Ok(())
    }
}

/// Wedge of the exterior parts with multiplication of values.
fn wedge_product(phi: &Cochain, psi: &Cochain) -> Cochain {
    let mut r = Cochain::zero(phi.dims);
    for (m1, f1) in &phi.terms {
        for (m2, f2) in &psi.terms {
            if let Some(s) = wedge_sign(*m1, *m2) {
                r.add_term(m1 | m2, &f1.mul(f2).scale(&Scalar::from_int(s)));
            }
        }
    }
    r
}

/// Product of cochains living on disjoint W-coordinate blocks.
pub fn outer_wedge(phi: &Cochain, psi: &Cochain) -> Result<Cochain> {
    if phi.dims != psi.dims {
        return Err(Error::OutOfRange("cochains built for different parameters".into()));
    }
    let (p1, m1) = phi.w_blocks();
    let (p2, m2) = psi.w_blocks();
    if !p1.is_disjoint(&p2) || !m1.is_disjoint(&m2) {
        return Err(Error::OverlappingBlocks);
    }
    Ok(wedge_product(phi, psi))
}

fn one_sided_cocycle(dims: FockDims, block: u32, var: fn(u32, u32) -> FockVar, idx: fn(u32, u32) -> PIndex) -> Cochain {
    let pd = dims.pdims();
    let (p, q) = (dims.p, dims.q);
    let mut r = Cochain::zero(dims);
    // iterate all (alpha_1..alpha_q) in [1,p]^q
    let total = (p as u64).pow(q);
    for code in 0..total {
        let mut c = code;
        let mut mask = 0u64;
        let mut sign = 1i64;
        let mut mono = FockMonomial::one();
        for k in 0..q {
            let alpha = (c % p as u64) as u32 + 1;
            c /= p as u64;
            let bit = 1u64 << pd.bit(idx(alpha, p + 1 + k));
            sign *= wedge_sign(mask, bit).expect("distinct mu");
            mask |= bit;
            mono = mono.mul_var(&var(alpha, block));
        }
        r.add_term(mask, &FockPoly::term(mono, Scalar::from_int(sign)));
    }
    r
}

/// `psi_{q,0}` on negative W-coordinate `block`:
/// `sum_{alpha} z''[a1,block]...z''[aq,block] (x) xi'[a1,p+1] ^ ... ^ xi'[aq,p+q]`.
pub fn psi_q0(dims: FockDims, block: u32) -> Result<Cochain> {
    if block == 0 || block > dims.b {
        return Err(Error::OutOfRange(format!("block {block} not in 1..={}", dims.b)));
    }
    Ok(one_sided_cocycle(dims, block, FockVar::zpp, PIndex::prime))
}

/// `psi_{0,q}` on positive W-coordinate `block`:
/// `sum_{alpha} z'[a1,block]...z'[aq,block] (x) xi''[a1,p+1] ^ ... ^ xi''[aq,p+q]`.
pub fn psi_0q(dims: FockDims, block: u32) -> Result<Cochain> {
    if block == 0 || block > dims.a {
        return Err(Error::OutOfRange(format!("block {block} not in 1..={}", dims.a)));
    }
    Ok(one_sided_cocycle(dims, block, FockVar::zp, PIndex::dprime))
}

/// `psi_{bq,0} = psi_{q,0}[1] ^ ... ^ psi_{q,0}[b]`.
pub fn psi_b0(dims: FockDims) -> Result<Cochain> {
    let mut r = Cochain::one(dims);
    for j in 1..=dims.b {
        r = outer_wedge(&r, &psi_q0(dims, j)?)?;
    }
    Ok(r)
}

/// `psi_{0,aq} = psi_{0,q}[1] ^ ... ^ psi_{0,q}[a]`.
pub fn psi_0a(dims: FockDims) -> Result<Cochain> {
    let mut r = Cochain::one(dims);
    for i in 1..=dims.a {
        r = outer_wedge(&r, &psi_0q(dims, i)?)?;
    }
    Ok(r)
}

/// The special cocycle `psi_{bq,aq} = psi_{bq,0} ^ psi_{0,aq}` for `U(p,q) x U(a,b)`.
pub fn psi(b: u32, a: u32, p: u32, q: u32) -> Result<Cochain> {
    let dims = FockDims::new(p, q, a, b)?;
    outer_wedge(&psi_b0(dims)?, &psi_0a(dims)?)
}

/// `(d', d'')`: the parts of the differential raising the prime, resp. double prime, degree.
pub fn differential_parts(phi: &Cochain) -> (Cochain, Cochain) {
    let plus: Vec<u32> = (1..=phi.dims.a).collect();
    let minus: Vec<u32> = (1..=phi.dims.b).collect();
    differential_parts_on(phi, &plus, &minus)
}

/// The parts of the differential of the Weil representation on the given W-coordinates only.
pub fn differential_parts_on(phi: &Cochain, plus: &[u32], minus: &[u32]) -> (Cochain, Cochain) {
    let dims = phi.dims;
    let pd = dims.pdims();
    let mut parts = (Cochain::zero(dims), Cochain::zero(dims));
    for (m, f) in &phi.terms {
        for idx in pd.indices() {
            let bit = 1u64 << pd.bit(idx);
            let Some(s) = wedge_sign(bit, *m) else { continue };
            let g = weil_p_action_on(idx, f, plus, minus);
            if g.is_zero() {
                continue;
            }
            let target = if idx.kind == Kind::Prime {
                &mut parts.0
            } else {
                &mut parts.1
            };
            target.add_term(m | bit, &g.scale(&Scalar::from_int(s)));
        }
    }
    parts
}

/// The differential on the given W-coordinates only.
pub fn differential_on(phi: &Cochain, plus: &[u32], minus: &[u32]) -> Cochain {
    let (d1, d2) = differential_parts_on(phi, plus, minus);
    d1.add(&d2)
}

/// `d phi = sum xi'[a,m] ^ omega(x[a,m]) phi + sum xi''[a,m] ^ omega(y[a,m]) phi`.
pub fn differential(phi: &Cochain) -> Cochain {
    let (d1, d2) = differential_parts(phi);
    d1.add(&d2)
}

/// `sum_m <xi_m, v> f_m`.
pub fn evaluate(phi: &Cochain, v: &Multivector) -> Result<FockPoly> {
    if v.algebra != Algebra::Vectors || v.dims != phi.dims.pdims() {
        return Err(Error::MixedAlgebra);
    }
    let mut r = FockPoly::zero();
    for (m, f) in &phi.terms {
        let c = v.coeff(*m);
        if !c.is_zero() {
            r.add_assign(&f.scale(&c));
        }
    }
    Ok(r)
}

/// The cochain `v -> X.phi(v) - phi(X.v)` with the twisted action on values.
pub fn equivariance_defect(phi: &Cochain, x: KBasis) -> Cochain {
    let mut r = Cochain::zero(phi.dims);
    let xs = KSide::from(x);
    for (m, f) in &phi.terms {
        r.add_term(*m, &k_side_action(&phi.dims, xs, f));
        for (m2, c) in phi.blade(*m).k_action(x).terms() {
            r.add_term(m2, &f.scale(c));
        }
    }
    r
}

/// The value `Delta~_a^q Delta_b^q` expected on the Vogan-Zuckerman vector.
pub fn kv_product(dims: &FockDims) -> Result<FockPoly> {
    let mut r = FockPoly::one();
    if dims.a > 0 {
        r = r.mul(&crate::fock::det_delta_tilde(dims, dims.a)?.pow(dims.q));
    }
    if dims.b > 0 {
        r = r.mul(&crate::fock::det_delta(dims, dims.b)?.pow(dims.q));
    }
    Ok(r)
}

/// Highest gl(p) weight `(q^b, 0^(p-a-b), (-q)^a)` of the special K-type.
pub fn special_weight(dims: &FockDims) -> Vec<i64> {
    let q = dims.q as i64;
    let mut w = vec![q; dims.b as usize];
    w.extend(std::iter::repeat_n(0, (dims.p - dims.a - dims.b) as usize));
    w.extend(std::iter::repeat_n(-q, dims.a as usize));
    w
}

type LinearOp = Box<dyn Fn(&FockPoly) -> FockPoly>;

/// Dimension of the space of harmonic highest weight vectors of the special K-type in the
/// given degree of `P+`: the joint kernel of the gl(p) raising operators and all Laplacians on
/// the weight slice. gl(q) acts on `P+` by the scalar `a-b`, so its weight condition is automatic.
pub fn isotypic_multiplicity(p: u32, q: u32, a: u32, b: u32, degree: u32) -> Result<usize> {
    if a + b > p {
        return Err(Error::OutOfRange(format!("a+b > p (a={a}, b={b}, p={p})")));
    }
    let dims = FockDims::new(p, q, a, b)?;
    let slice = plus_weight_slice(&dims, &special_weight(&dims), degree);
    if slice.is_empty() {
        return Ok(0);
    }
    let col: BTreeMap<&FockMonomial, usize> = slice.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ops: Vec<LinearOp> = Vec::new();
    for alpha in 1..p {
        ops.push(Box::new(move |f| {
            natural_action(&dims, KSide::GlP(alpha, alpha + 1), f)
        }));
    }
    for i in 1..=a {
        for j in 1..=b {
            ops.push(Box::new(move |f| laplacian(&dims, i, j, f)));
        }
    }
    let mut rows: BTreeMap<(usize, FockMonomial), SparseRow> = BTreeMap::new();
    for (k, op) in ops.iter().enumerate() {
        for m in &slice {
            let img = op(&FockPoly::term(m.clone(), Scalar::one()));
            for (tm, c) in img.terms() {
                let g = c.as_gauss().expect("integer operator entries");
                rows.entry((k, tm.clone())).or_default().insert(col[m], g);
            }
        }
    }
    Ok(slice.len() - rank(rows.into_values().collect()))
}

/// Harmonic check of the value on the Vogan-Zuckerman vector.
pub fn vz_value_is_harmonic(b: u32, a: u32, p: u32, q: u32) -> Result<bool> {
    let phi = psi(b, a, p, q)?;
    let v = crate::liealg::vz_vector(b, a, p, q)?;
    Ok(is_harmonic(&phi.dims, &evaluate(&phi, &v)?))
}

/// Natural (untwisted) action of a diagonal gl(a) or gl(b) element checked to be `c` times identity.
pub fn natural_eigenvalue(dims: &FockDims, x: KSide, f: &FockPoly) -> Option<i64> {
    let img = natural_action(dims, x, f);
    let (m, c) = f.terms().next()?;
    let d = img.coeff(m);
    for cand in -64i64..=64 {
        if c.mul_ref(&Scalar::from_int(cand)) == d {
            return (img == f.scale(&Scalar::from_int(cand))).then_some(cand);
        }
    }
    None
}

/// Every blade of the cochain, as index lists, for diagnostics.
pub fn blade_indices(dims: &FockDims, mask: u64) -> Vec<PIndex> {
    let pd = dims.pdims();
    bits(mask).map(|b| pd.index(b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{det_delta, det_delta_tilde};
    use crate::liealg::vz_vector;
    use crate::poly::Monomial;

    fn dims(p: u32, q: u32, a: u32, b: u32) -> FockDims {
        FockDims::new(p, q, a, b).unwrap()
    }

    fn xi_prime(d: &FockDims, alpha: u32, mu: u32) -> u64 {
        1u64 << d.pdims().bit(PIndex::prime(alpha, mu))
    }

    fn xi_dprime(d: &FockDims, alpha: u32, mu: u32) -> u64 {
        1u64 << d.pdims().bit(PIndex::dprime(alpha, mu))
    }

    #[test]
    fn one_sided_cocycles_small() {
        let d = dims(1, 1, 1, 1);
        let c = psi_q0(d, 1).unwrap();
        let mut expect = Cochain::zero(d);
        expect.add_term(xi_prime(&d, 1, 2), &FockPoly::var(FockVar::zpp(1, 1)));
        assert_eq!(c, expect);
        let c = psi_0q(d, 1).unwrap();
        let mut expect = Cochain::zero(d);
        expect.add_term(xi_dprime(&d, 1, 2), &FockPoly::var(FockVar::zp(1, 1)));
        assert_eq!(c, expect);

        let d = dims(2, 1, 1, 1);
        let c = psi_q0(d, 1).unwrap();
        let mut expect = Cochain::zero(d);
        expect.add_term(xi_prime(&d, 1, 3), &FockPoly::var(FockVar::zpp(1, 1)));
        expect.add_term(xi_prime(&d, 2, 3), &FockPoly::var(FockVar::zpp(2, 1)));
        assert_eq!(c, expect);
        assert_eq!(psi_0q(d, 1).unwrap().bidegree(), Some((0, 1)));
        assert!(psi_q0(d, 2).is_err());
    }

    #[test]
    fn psi_q0_with_two_mu() {
        // p=2, q=2: sum over (a1,a2) of z''[a1]z''[a2] xi'[a1,3]^xi'[a2,4]
        let d = dims(2, 2, 0, 1);
        let c = psi_q0(d, 1).unwrap();
        assert_eq!(c.bidegree(), Some((2, 0)));
        assert_eq!(c.len(), 4);
        let z = |a| FockPoly::var(FockVar::zpp(a, 1));
        // xi'[2,3]^xi'[1,4] is stored as -xi'[1,4]^xi'[2,3]
        let mask = xi_prime(&d, 2, 3) | xi_prime(&d, 1, 4);
        assert_eq!(c.value(mask), z(2).mul(&z(1)).neg());
    }

    #[test]
    fn general_cocycle_examples() {
        assert_eq!(psi(1, 0, 2, 1).unwrap(), psi_q0(dims(2, 1, 0, 1), 1).unwrap());
        let c = psi(1, 1, 2, 1).unwrap();
        assert_eq!(c.num_terms(), 4);
        assert_eq!(c.bidegree(), Some((1, 1)));
        assert_eq!(psi(0, 0, 2, 1).unwrap(), Cochain::one(dims(2, 1, 0, 0)));
    }

    #[test]
    fn outer_wedge_rules() {
        let d = dims(2, 1, 1, 2);
        let a = psi_q0(d, 1).unwrap();
        assert_eq!(outer_wedge(&a, &a), Err(Error::OverlappingBlocks));
        assert!(outer_wedge(&a, &Cochain::zero(d)).unwrap().is_zero());
        let b = psi_q0(d, 2).unwrap();
        assert_eq!(outer_wedge(&a, &b).unwrap().bidegree(), Some((2, 0)));
    }

    #[test]
    fn differential_of_constant() {
        let d = dims(1, 1, 1, 1);
        let dc = differential(&Cochain::one(d));
        let mut expect = Cochain::zero(d);
        expect.add_term(
            xi_prime(&d, 1, 2),
            &FockPoly::var(FockVar::zpp(1, 1)).mul(&FockPoly::var(FockVar::wp(2, 1))),
        );
        expect.add_term(
            xi_dprime(&d, 1, 2),
            &FockPoly::var(FockVar::zp(1, 1)).mul(&FockPoly::var(FockVar::wpp(2, 1))),
        );
        assert_eq!(dc, expect);
    }

    #[test]
    fn one_sided_cocycles_are_closed() {
        for p in 1..=3 {
            for q in 1..=2 {
                assert!(differential(&psi_q0(dims(p, q, 0, 1), 1).unwrap()).is_zero());
                assert!(differential(&psi_0q(dims(p, q, 1, 0), 1).unwrap()).is_zero());
                // alone in a larger dual pair the other block's multiplication terms survive
                assert!(!differential(&psi_q0(dims(p, q, 1, 1), 1).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn evaluation_on_vz_vectors() {
        let d = dims(2, 1, 1, 1);
        let v = vz_vector(1, 1, 2, 1).unwrap();
        let val = evaluate(&psi(1, 1, 2, 1).unwrap(), &v).unwrap();
        let expect = det_delta_tilde(&d, 1).unwrap().mul(&det_delta(&d, 1).unwrap());
        assert_eq!(val, expect);
        assert_eq!(kv_product(&d).unwrap(), expect);
        let wrong_degree = vz_vector(1, 0, 2, 1).unwrap();
        assert!(evaluate(&psi(1, 1, 2, 1).unwrap(), &wrong_degree).unwrap().is_zero());
    }

    #[test]
    fn prefactor_from_vz_definition_flips_sign() {
        // with the extra (-1)^{bq} in front of xtilde_1 ^ ... ^ xtilde_b the value is (-1)^{bq} Delta_b^q
        let (p, q, b) = (2, 1, 1);
        let d = dims(p, q, 0, b);
        let e = vz_vector(b, 0, p, q).unwrap().scale(&Scalar::from_int(-1));
        let val = evaluate(&psi(b, 0, p, q).unwrap(), &e).unwrap();
        assert_eq!(val, det_delta(&d, 1).unwrap().neg());
    }

    #[test]
    fn equivariance_small() {
        let phi = psi(1, 1, 2, 1).unwrap();
        for x in phi.dims.pdims().k_basis() {
            assert!(equivariance_defect(&phi, x).is_zero(), "{x}");
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(isotypic_multiplicity(2, 1, 1, 1, 2).unwrap(), 1);
        assert_eq!(isotypic_multiplicity(3, 1, 1, 0, 1).unwrap(), 1);
        assert_eq!(isotypic_multiplicity(2, 1, 1, 1, 3).unwrap(), 0);
        assert_eq!(isotypic_multiplicity(2, 1, 1, 1, 1).unwrap(), 0);
        assert!(isotypic_multiplicity(2, 1, 2, 1, 3).is_err());
    }

    #[test]
    fn multiplicity_in_a_higher_degree_vanishes() {
        assert_eq!(isotypic_multiplicity(2, 1, 1, 1, 4).unwrap(), 0);
    }

    #[test]
    fn natural_eigenvalues_on_vz_value() {
        let d = dims(3, 2, 1, 1);
        let f = kv_product(&d).unwrap();
        assert_eq!(natural_eigenvalue(&d, KSide::GlA(1, 1), &f), Some(-2));
        assert_eq!(natural_eigenvalue(&d, KSide::GlB(1, 1), &f), Some(2));
        let g = FockPoly::var(FockVar::zp(1, 1)).add(&FockPoly::var(FockVar::zp(1, 1)).pow(2));
        assert_eq!(natural_eigenvalue(&d, KSide::GlA(1, 1), &g), None);
    }

    #[test]
    fn blade_index_listing() {
        let d = dims(2, 1, 0, 0);
        let m = xi_prime(&d, 2, 3) | xi_dprime(&d, 1, 3);
        assert_eq!(blade_indices(&d, m), vec![PIndex::prime(2, 3), PIndex::dprime(1, 3)]);
        let _ = Monomial::<FockVar>::one();
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const D: FockDims = FockDims { p: 2, q: 1, a: 1, b: 1 };

        fn vars() -> Vec<FockVar> {
            vec![
                FockVar::zp(1, 1),
                FockVar::zp(2, 1),
                FockVar::zpp(1, 1),
                FockVar::zpp(2, 1),
                FockVar::wp(3, 1),
                FockVar::wpp(3, 1),
            ]
        }

        fn arb_cochain() -> impl Strategy<Value = Cochain> {
            prop::collection::vec((0u64..16, prop::collection::vec(0usize..6, 0..3), -2i64..3), 0..4).prop_map(
                |terms| {
                    let vs = vars();
                    let mut c = Cochain::zero(D);
                    for (mask, idx, k) in terms {
                        let m = Monomial::from_powers(idx.into_iter().map(|i| (vs[i], 1)));
                        c.add_term(mask, &FockPoly::term(m, Scalar::from_int(k)));
                    }
                    c
                },
            )
        }

        fn parity(c: &Cochain) -> Option<u32> {
            let mut it = c.terms().map(|(m, _)| m.count_ones() % 2);
            let f = it.next()?;
            it.all(|x| x == f).then_some(f)
        }

        proptest! {
            #[test]
            fn each_part_squares_to_zero(c in arb_cochain()) {
                let (d1, d2) = differential_parts(&c);
                prop_assert!(differential_parts(&d1).0.is_zero());
                prop_assert!(differential_parts(&d2).1.is_zero());
            }

            #[test]
            fn leibniz_rule_for_block_products(k in 0usize..4) {
                let d = FockDims { p: 2, q: 1, a: 1, b: 2 };
                let pieces = [
                    psi_q0(d, 1).unwrap(),
                    Cochain::constant(d, FockPoly::var(FockVar::zpp(1, 1))),
                    Cochain::one(d),
                    psi_q0(d, 1).unwrap().add(&Cochain::constant(d, FockPoly::var(FockVar::zpp(2, 1)))),
                ];
                let phi = pieces[k].clone();
                let psi2 = psi_q0(d, 2).unwrap().add(&Cochain::constant(d, FockPoly::var(FockVar::wp(3, 2))));
                if let Some(par) = parity(&phi) {
                    let s = if par == 0 { 1 } else { -1 };
                    let lhs = differential(&outer_wedge(&phi, &psi2).unwrap());
                    let rhs = wedge_product(&differential_on(&phi, &[1], &[1]), &psi2)
                        .add(&wedge_product(&phi, &differential_on(&psi2, &[], &[2])).scale(&Scalar::from_int(s)));
                    prop_assert_eq!(lhs, rhs);
                }
            }

            #[test]
            fn d_commutes_with_k(c in arb_cochain(), xi in 0usize..5) {
                let x = D.pdims().k_basis()[xi];
                let lhs = equivariance_defect(&differential(&c), x);
                let rhs = differential(&equivariance_defect(&c, x));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn d_squared_vanishes_on_invariant_cochains() {
        // the K-fixed degree-0 cochains: constants and, for a=b=1, the invariant sum_alpha z'z''
        let d = dims(2, 1, 1, 1);
        let inv = FockPoly::var(FockVar::zp(1, 1))
            .mul(&FockPoly::var(FockVar::zpp(1, 1)))
            .add(&FockPoly::var(FockVar::zp(2, 1)).mul(&FockPoly::var(FockVar::zpp(2, 1))));
        for f in [FockPoly::one(), inv] {
            let c = Cochain::constant(d, f);
            assert!(differential(&differential(&c)).is_zero());
        }
        let phi = psi(1, 1, 2, 1).unwrap();
        assert!(differential(&differential(&phi)).is_zero());
    }
}
