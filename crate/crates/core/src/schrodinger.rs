//! The split Schrodinger model: forms valued in polynomials in `z`, `zbar` times powers of the
//! Gaussian `phi0 = exp(-pi z zbar)` per W-block, the Kudla-Millson cocycle, and the Bargmann
//! intertwiner from the Fock model.

use std::collections::BTreeMap;
use std::fmt;

use crate::cochain::{psi, psi_0q, psi_q0, Cochain};
use crate::error::{Error, Result};
use crate::fock::{Family, FockDims, FockPoly};
use crate::liealg::{bits, wedge_sign, Algebra, Multivector, PDims, PIndex};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `z[alpha,block]` or, with `conj`, `zbar[alpha,block]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SVar {
    pub block: u32,
    pub alpha: u32,
    pub conj: bool,
}

impl SVar {
    pub fn z(alpha: u32, block: u32) -> Self {
        SVar {
            block,
            alpha,
            conj: false,
        }
    }

    pub fn zbar(alpha: u32, block: u32) -> Self {
        SVar {
            block,
            alpha,
            conj: true,
        }
    }

    pub fn conjugate(&self) -> Self {
        SVar {
            conj: !self.conj,
            ..*self
        }
    }
}

impl fmt::Display for SVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.conj { "zb" } else { "z" };
        write!(f, "{name}[{},{}]", self.alpha, self.block)
    }
}

pub type SPoly = Poly<SVar>;

/// `poly * prod_k phi0_k^weights[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchrodFn {
    pub weights: Vec<u32>,
    pub poly: SPoly,
}

impl SchrodFn {
    /// `phi0` in every one of `n` blocks.
    pub fn vacuum(n: u32) -> Self {
        SchrodFn {
            weights: vec![1; n as usize],
            poly: SPoly::one(),
        }
    }

    /// `phi0` in block `block` only, among `n` blocks.
    pub fn phi0(block: u32, n: u32) -> Self {
        let mut weights = vec![0; n as usize];
        weights[(block - 1) as usize] = 1;
        SchrodFn {
            weights,
            poly: SPoly::one(),
        }
    }

    fn weight(&self, block: u32) -> Result<u32> {
        match self.weights.get((block as usize).wrapping_sub(1)) {
            Some(&g) if g > 0 => Ok(g),
            _ => Err(Error::ZeroWeight(block)),
        }
    }

    fn with_poly(&self, poly: SPoly) -> SchrodFn {
        SchrodFn {
            weights: self.weights.clone(),
            poly,
        }
    }

    /// Pointwise product; Gaussian weights add block by block.
    pub fn mul(&self, o: &SchrodFn) -> SchrodFn {
        let n = self.weights.len().max(o.weights.len());
        let weights = (0..n)
            .map(|k| self.weights.get(k).copied().unwrap_or(0) + o.weights.get(k).copied().unwrap_or(0))
            .collect();
        SchrodFn {
            weights,
            poly: self.poly.mul(&o.poly),
        }
    }
}

impl fmt::Display for SchrodFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.poly)?;
        for (k, g) in self.weights.iter().enumerate() {
            if *g > 0 {
                write!(f, "*phi0^{g}[{}]", k + 1)?;
            }
        }
        Ok(())
    }
}

fn inv_sqrt2() -> Scalar {
    Scalar::one().div_unit(&Scalar::sqrt2()).expect("unit")
}

fn inv_pi() -> Scalar {
    Scalar::pi_pow(-1)
}

/// `(c_mul * v * P + c_der * dP/dv') phi0^g` where `v'` is the conjugate variable and the
/// Gaussian contributes `-g pi v` to `d/dv'`: returns the polynomial part of
/// `(s v + t d/dv')(P phi0^g)` as `(s + ... )`.
fn first_order(f: &SchrodFn, v: SVar, s: &Scalar, t: &Scalar) -> Result<SPoly> {
    let g = f.weight(v.block)?;
    // d/dv'(P phi0^g) = (dP/dv' - g pi v P) phi0^g, with t carrying a 1/pi
    let coeff_v = s.add_ref(
        &t.mul_ref(&Scalar::from_int(g as i64))
            .mul_ref(&Scalar::pi_pow(1))
            .neg_ref(),
    );
    let dp = f.poly.deriv(&v.conjugate()).scale(t);
    Ok(f.poly.mul_var(&v).scale(&coeff_v).add(&dp))
}

/// `(1/sqrt2)(z - (1/pi) d/dzbar)` in the given block.
pub fn creation_z(alpha: u32, block: u32, f: &SchrodFn) -> Result<SchrodFn> {
    let p = first_order(f, SVar::z(alpha, block), &Scalar::one(), &inv_pi().neg_ref())?;
    Ok(f.with_poly(p.scale(&inv_sqrt2())))
}

/// `(1/sqrt2)(zbar - (1/pi) d/dz)` in the given block.
pub fn creation_zbar(alpha: u32, block: u32, f: &SchrodFn) -> Result<SchrodFn> {
    let p = first_order(f, SVar::zbar(alpha, block), &Scalar::one(), &inv_pi().neg_ref())?;
    Ok(f.with_poly(p.scale(&inv_sqrt2())))
}

/// `(1/sqrt2)(z + (1/pi) d/dzbar)` in the given block.
pub fn annihilation_z(alpha: u32, block: u32, f: &SchrodFn) -> Result<SchrodFn> {
    let p = first_order(f, SVar::z(alpha, block), &Scalar::one(), &inv_pi())?;
    Ok(f.with_poly(p.scale(&inv_sqrt2())))
}

/// `(1/sqrt2)(zbar + (1/pi) d/dz)` in the given block.
pub fn annihilation_zbar(alpha: u32, block: u32, f: &SchrodFn) -> Result<SchrodFn> {
    let p = first_order(f, SVar::zbar(alpha, block), &Scalar::one(), &inv_pi())?;
    Ok(f.with_poly(p.scale(&inv_sqrt2())))
}

/// Which product of forms: `Internal` multiplies functions of the same block (Gaussian powers add),
/// `Outer` requires the two factors to live on disjoint blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WedgeKind {
    Internal,
    Outer,
}

/// Finite sum of covector blades tensored with Schrodinger functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchrodForm {
    pub dims: PDims,
    terms: BTreeMap<(u64, Vec<u32>), SPoly>,
}

impl SchrodForm {
    pub fn zero(dims: PDims) -> Self {
        SchrodForm {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn function(dims: PDims, f: SchrodFn) -> Self {
        let mut r = SchrodForm::zero(dims);
        r.add_term(0, &f);
        r
    }

    pub fn add_term(&mut self, mask: u64, f: &SchrodFn) {
        if f.poly.is_zero() {
            return;
        }
        let key = (mask, f.weights.clone());
        let e = self.terms.entry(key.clone()).or_default();
        e.add_assign(&f.poly);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Iterate `(blade, function)`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, SchrodFn)> + '_ {
        self.terms.iter().map(|((m, w), p)| {
            (
                *m,
                SchrodFn {
                    weights: w.clone(),
                    poly: p.clone(),
                },
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &SchrodForm) -> SchrodForm {
        let mut r = self.clone();
        for (m, f) in o.terms() {
            r.add_term(m, &f);
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> SchrodForm {
        let mut r = SchrodForm::zero(self.dims);
        for (m, f) in self.terms() {
            r.add_term(
                m,
                &SchrodFn {
                    poly: f.poly.scale(c),
                    weights: f.weights,
                },
            );
        }
        r
    }

    /// Distinct Gaussian weight vectors occurring.
    pub fn weight_vectors(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.terms.keys().map(|(_, w)| w.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// `(#prime, #doubleprime)` if every blade has it.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|(m, _)| self.dims.bidegree(*m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Blocks carrying a positive Gaussian weight somewhere.
    fn support(&self) -> Vec<bool> {
        let mut s = Vec::new();
        for (_, w) in self.terms.keys() {
            if s.len() < w.len() {
                s.resize(w.len(), false);
            }
            for (k, g) in w.iter().enumerate() {
                s[k] |= *g > 0;
            }
        }
        s
    }

    pub fn wedge(&self, o: &SchrodForm, kind: WedgeKind) -> Result<SchrodForm> {
        if self.dims != o.dims {
            return Err(Error::MixedAlgebra);
        }
        if kind == WedgeKind::Outer {
            let (a, b) = (self.support(), o.support());
            if a.iter().zip(&b).any(|(x, y)| *x && *y) {
                return Err(Error::OverlappingBlocks);
            }
        }
        let mut r = SchrodForm::zero(self.dims);
        for (m1, f1) in self.terms() {
            for (m2, f2) in o.terms() {
                if let Some(s) = wedge_sign(m1, m2) {
                    let mut f = f1.mul(&f2);
                    f.poly = f.poly.scale(&Scalar::from_int(s));
                    r.add_term(m1 | m2, &f);
                }
            }
        }
        Ok(r)
    }

    /// Apply a function-level operator to every term and multiply by the covector on the left.
    fn left_apply(&self, idx: PIndex, op: impl Fn(&SchrodFn) -> Result<SchrodFn>) -> Result<SchrodForm> {
        let bit = 1u64 << self.dims.bit(idx);
        let mut r = SchrodForm::zero(self.dims);
        for (m, f) in self.terms() {
            let Some(s) = wedge_sign(bit, m) else { continue };
            let mut g = op(&f)?;
            g.poly = g.poly.scale(&Scalar::from_int(s));
            r.add_term(m | bit, &g);
        }
        Ok(r)
    }
}

impl fmt::Display for SchrodForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, func)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let blade = Multivector::blade(self.dims, Algebra::Covectors, m, Scalar::one());
            write!(f, "{func} (x) {blade}")?;
        }
        Ok(())
    }
}

/// `(zbar - (1/pi) d/dz)` without normalization.
fn raw_zbar(alpha: u32, block: u32, f: &SchrodFn) -> Result<SchrodFn> {
    Ok(f.with_poly(first_order(
        f,
        SVar::zbar(alpha, block),
        &Scalar::one(),
        &inv_pi().neg_ref(),
    )?))
}

/// `(z - (1/pi) d/dzbar)` without normalization.
fn raw_z(alpha: u32, block: u32, f: &SchrodFn) -> Result<SchrodFn> {
    Ok(f.with_poly(first_order(
        f,
        SVar::z(alpha, block),
        &Scalar::one(),
        &inv_pi().neg_ref(),
    )?))
}

/// `D+_mu = sum_alpha (zbar_alpha - (1/pi) d/dz_alpha) (x) xi'[alpha,mu]` in the given block.
pub fn d_plus(mu: u32, block: u32, form: &SchrodForm) -> Result<SchrodForm> {
    let mut r = SchrodForm::zero(form.dims);
    for alpha in 1..=form.dims.p {
        r = r.add(&form.left_apply(PIndex::prime(alpha, mu), |f| raw_zbar(alpha, block, f))?);
    }
    Ok(r)
}

/// `Dbar+_mu = sum_alpha (z_alpha - (1/pi) d/dzbar_alpha) (x) xi''[alpha,mu]` in the given block.
pub fn dbar_plus(mu: u32, block: u32, form: &SchrodForm) -> Result<SchrodForm> {
    let mut r = SchrodForm::zero(form.dims);
    for alpha in 1..=form.dims.p {
        r = r.add(&form.left_apply(PIndex::dprime(alpha, mu), |f| raw_z(alpha, block, f))?);
    }
    Ok(r)
}

/// `phi_{q,q}` in block `block` of `n`:
/// `2^{-2q} D+_{p+1} ... D+_{p+q} Dbar+_{p+1} ... Dbar+_{p+q} phi0`.
pub fn km_cocycle_block(p: u32, q: u32, block: u32, n: u32) -> Result<SchrodForm> {
    let dims = PDims::new(p, q)?;
    if block == 0 || block > n {
        return Err(Error::OutOfRange(format!("block {block} not in 1..={n}")));
    }
    let mut form = SchrodForm::function(dims, SchrodFn::phi0(block, n));
    for nu in (p + 1..=p + q).rev() {
        form = dbar_plus(nu, block, &form)?;
    }
    for mu in (p + 1..=p + q).rev() {
        form = d_plus(mu, block, &form)?;
    }
    let norm = Scalar::one()
        .div_unit(&Scalar::from_int(1i64 << (2 * q)))
        .expect("unit");
    Ok(form.scale(&norm))
}

/// `phi_{nq,nq}`: the outer product of the block copies of `phi_{q,q}`.
pub fn km_cocycle(p: u32, q: u32, n: u32) -> Result<SchrodForm> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut r = km_cocycle_block(p, q, 1, n)?;
    for k in 2..=n {
        r = r.wedge(&km_cocycle_block(p, q, k, n)?, WedgeKind::Outer)?;
    }
    Ok(r)
}

/// Bargmann intertwiner on polynomials in `z'[alpha,k]`, `z''[alpha,k]`, `k <= n`:
/// `B(1) = phi0`, `z'` acts by `creation_z` and `z''` by `creation_zbar` in block `k`.
pub fn bargmann(f: &FockPoly, p: u32, n: u32) -> Result<SchrodFn> {
    let mut total = SPoly::zero();
    for (m, c) in f.terms() {
        let mut g = SchrodFn::vacuum(n);
        for (v, e) in m.powers().iter().rev() {
            if v.w == 0 || v.w > n || v.v == 0 || v.v > p {
                return Err(Error::BadVariable(v.to_string()));
            }
            for _ in 0..*e {
                g = match v.family {
                    Family::ZPrime => creation_z(v.v, v.w, &g)?,
                    Family::ZDPrime => creation_zbar(v.v, v.w, &g)?,
                    _ => return Err(Error::BadVariable(v.to_string())),
                };
            }
        }
        total.add_assign(&g.poly.scale(c));
    }
    Ok(SchrodFn {
        weights: vec![1; n as usize],
        poly: total,
    })
}

/// `(B (x) 1)` applied to the values of a cochain, using `n` blocks.
pub fn bargmann_cochain(c: &Cochain, n: u32) -> Result<SchrodForm> {
    let dims = c.dims.pdims();
    let mut r = SchrodForm::zero(dims);
    for (m, f) in c.terms() {
        r.add_term(m, &bargmann(f, dims.p, n)?);
    }
    Ok(r)
}

/// Both sides of `(B (x) 1)(psi_{nq,nq}) = 2^{nq} phi_{nq,nq}`.
pub fn product_formula_sides(p: u32, q: u32, n: u32) -> Result<(SchrodForm, SchrodForm)> {
    let lhs = bargmann_cochain(&psi(n, n, p, q)?, n)?;
    let rhs = km_cocycle(p, q, n)?.scale(&Scalar::from_int(1i64 << (n * q)));
    Ok((lhs, rhs))
}

/// `(B (x) 1)(psi_{q,0} ^ psi_{0,q}) == 2^q phi_{q,q}`.
pub fn product_formula_check(p: u32, q: u32) -> Result<bool> {
    let (l, r) = product_formula_sides(p, q, 1)?;
    Ok(l == r)
}

/// The blockwise-grouped cocycle `(psi_{q,0}[1] ^ psi_{0,q}[1]) ^ ... ^ (psi_{q,0}[n] ^ psi_{0,q}[n])`.
pub fn psi_blockwise(p: u32, q: u32, n: u32) -> Result<Cochain> {
    let dims = FockDims::new(p, q, n, n)?;
    let mut r = Cochain::one(dims);
    for k in 1..=n {
        let pair = crate::cochain::outer_wedge(&psi_q0(dims, k)?, &psi_0q(dims, k)?)?;
        r = crate::cochain::outer_wedge(&r, &pair)?;
    }
    Ok(r)
}

/// For `q = 1`: the same-block product `B(psi_{1,0}) ^ B(psi_{0,1})` and `phi_{1,1}`.
pub fn nonfactorization_demo(p: u32) -> Result<(SchrodForm, SchrodForm)> {
    let dims = FockDims::new(p, 1, 1, 1)?;
    let left = bargmann_cochain(&psi_q0(dims, 1)?, 1)?;
    let right = bargmann_cochain(&psi_0q(dims, 1)?, 1)?;
    let internal = left.wedge(&right, WedgeKind::Internal)?;
    Ok((internal, km_cocycle(p, 1, 1)?))
}

/// `c * phi0^g * sum_{a,b} zbar_a z_b (x) xi'[a,p+1] ^ xi''[b,p+1]` for `q = 1`.
pub fn bilinear_form(p: u32, c: i64, g: u32) -> Result<SchrodForm> {
    let dims = PDims::new(p, 1)?;
    let mut r = SchrodForm::zero(dims);
    for a in 1..=p {
        for b in 1..=p {
            let m = (1u64 << dims.bit(PIndex::prime(a, p + 1))) | (1u64 << dims.bit(PIndex::dprime(b, p + 1)));
            let poly = SPoly::var(SVar::zbar(a, 1))
                .mul(&SPoly::var(SVar::z(b, 1)))
                .scale(&Scalar::from_int(c));
            r.add_term(m, &SchrodFn { weights: vec![g], poly });
        }
    }
    Ok(r)
}

/// Blades of a form as index lists, for diagnostics.
pub fn form_blades(form: &SchrodForm) -> Vec<Vec<PIndex>> {
    form.terms
        .keys()
        .map(|(m, _)| bits(*m).map(|b| form.dims.index(b)).collect())
        .collect()
}
