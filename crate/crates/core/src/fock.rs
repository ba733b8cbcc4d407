//! The polynomial Fock model `P(V (x) W) = P+ (x) P-` with the Weil operators of `p`,
//! the lowering Laplacians, Kashiwara-Vergne determinants and the action of
//! `gl(p) + gl(q) + gl(a) + gl(b)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{signed_permutations, Kind, PIndex};
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;

/// Variable families, in serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// `z'[alpha,i]`, `1 <= alpha <= p`, `1 <= i <= a`.
    ZPrime,
    /// `z''[alpha,j]`, `1 <= alpha <= p`, `1 <= j <= b`.
    ZDPrime,
    /// `w'[mu,j]`, `p < mu <= p+q`, `1 <= j <= b`.
    WPrime,
    /// `w''[mu,i]`, `p < mu <= p+q`, `1 <= i <= a`.
    WDPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FockVar {
    pub family: Family,
    /// `alpha` or `mu`.
    pub v: u32,
    /// `i` or `j`.
    pub w: u32,
}

impl FockVar {
    pub fn zp(alpha: u32, i: u32) -> Self {
        FockVar {
            family: Family::ZPrime,
            v: alpha,
            w: i,
        }
    }

    pub fn zpp(alpha: u32, j: u32) -> Self {
        FockVar {
            family: Family::ZDPrime,
            v: alpha,
            w: j,
        }
    }

    pub fn wp(mu: u32, j: u32) -> Self {
        FockVar {
            family: Family::WPrime,
            v: mu,
            w: j,
        }
    }

    pub fn wpp(mu: u32, i: u32) -> Self {
        FockVar {
            family: Family::WDPrime,
            v: mu,
            w: i,
        }
    }

    /// Whether the variable belongs to the positive part `P+`.
    pub fn is_plus(&self) -> bool {
        matches!(self.family, Family::ZPrime | Family::ZDPrime)
    }
}

impl fmt::Display for FockVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::ZPrime => "z'",
            Family::ZDPrime => "z''",
            Family::WPrime => "w'",
            Family::WDPrime => "w''",
        };
        write!(f, "{name}[{},{}]", self.v, self.w)
    }
}

pub type FockMonomial = Monomial<FockVar>;
pub type FockPoly = Poly<FockVar>;

/// Parameters of the dual pair `U(p,q) x U(a,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FockDims {
    pub p: u32,
    pub q: u32,
    pub a: u32,
    pub b: u32,
}

impl FockDims {
    pub fn new(p: u32, q: u32, a: u32, b: u32) -> Result<Self> {
        crate::liealg::PDims::new(p, q)?;
        Ok(FockDims { p, q, a, b })
    }

    pub fn pdims(&self) -> crate::liealg::PDims {
        crate::liealg::PDims { p: self.p, q: self.q }
    }

    /// Check that a variable's indices are in range.
    pub fn admits(&self, v: &FockVar) -> bool {
        let v_ok = match v.family {
            Family::ZPrime | Family::ZDPrime => (1..=self.p).contains(&v.v),
            Family::WPrime | Family::WDPrime => (self.p + 1..=self.p + self.q).contains(&v.v),
        };
        let w_ok = match v.family {
            Family::ZPrime | Family::WDPrime => (1..=self.a).contains(&v.w),
            Family::ZDPrime | Family::WPrime => (1..=self.b).contains(&v.w),
        };
        v_ok && w_ok
    }
}

fn second_derivative(f: &FockPoly, u: &FockVar, v: &FockVar) -> FockPoly {
    f.deriv(u).deriv(v)
}

/// The Weil operator of a basis element of `p`, summed over W-coordinates:
/// `x[alpha,mu] -> sum_i d2/dz'[alpha,i]dw''[mu,i] + sum_j z''[alpha,j] w'[mu,j]` and
/// `y[alpha,mu] -> sum_i z'[alpha,i] w''[mu,i] + sum_j d2/dz''[alpha,j]dw'[mu,j]`.
pub fn weil_p_action(dims: &FockDims, idx: PIndex, f: &FockPoly) -> FockPoly {
    let plus: Vec<u32> = (1..=dims.a).collect();
    let minus: Vec<u32> = (1..=dims.b).collect();
    weil_p_action_on(idx, f, &plus, &minus)
}

/// The Weil operator restricted to the given positive (`i`) and negative (`j`) W-coordinates.
pub fn weil_p_action_on(idx: PIndex, f: &FockPoly, plus: &[u32], minus: &[u32]) -> FockPoly {
    let (alpha, mu) = (idx.alpha, idx.mu);
    let mut r = FockPoly::zero();
    match idx.kind {
        Kind::Prime => {
            for &i in plus {
                r.add_assign(&second_derivative(f, &FockVar::zp(alpha, i), &FockVar::wpp(mu, i)));
            }
            for &j in minus {
                r.add_assign(&f.mul_var(&FockVar::zpp(alpha, j)).mul_var(&FockVar::wp(mu, j)));
            }
        }
        Kind::DoublePrime => {
            for &i in plus {
                r.add_assign(&f.mul_var(&FockVar::zp(alpha, i)).mul_var(&FockVar::wpp(mu, i)));
            }
            for &j in minus {
                r.add_assign(&second_derivative(f, &FockVar::zpp(alpha, j), &FockVar::wp(mu, j)));
            }
        }
    }
    r
}

/// `Delta[i,j] = sum_alpha d2/dz'[alpha,i]dz''[alpha,j]`.
pub fn laplacian(dims: &FockDims, i: u32, j: u32, f: &FockPoly) -> FockPoly {
    let mut r = FockPoly::zero();
    for alpha in 1..=dims.p {
        r.add_assign(&second_derivative(f, &FockVar::zp(alpha, i), &FockVar::zpp(alpha, j)));
    }
    r
}

/// Annihilated by every `Delta[i,j]`.
pub fn is_harmonic(dims: &FockDims, f: &FockPoly) -> bool {
    (1..=dims.a).all(|i| (1..=dims.b).all(|j| laplacian(dims, i, j, f).is_zero()))
}

/// Determinant of the matrix of variables `var(row, col)`.
fn det(rows: &[u32], cols: &[u32], var: impl Fn(u32, u32) -> FockVar) -> FockPoly {
    let mut r = FockPoly::zero();
    for (perm, sign) in signed_permutations(rows.len()) {
        let m = Monomial::from_powers(rows.iter().zip(&perm).map(|(&row, &c)| (var(row, cols[c]), 1)));
        r.add_term(m, &Scalar::from_int(sign));
    }
    r
}

/// `Delta_k = det(z''[alpha,j])`, `1 <= alpha, j <= k`.
pub fn det_delta(dims: &FockDims, k: u32) -> Result<FockPoly> {
    if k == 0 || k > dims.p.min(dims.b) {
        return Err(Error::OutOfRange(format!("Delta_{k} needs 1 <= k <= min(p,b)")));
    }
    let idx: Vec<u32> = (1..=k).collect();
    Ok(det(&idx, &idx, FockVar::zpp))
}

/// `Delta~_l = det(z'[alpha,j])`, `p-l+1 <= alpha <= p`, `1 <= j <= l`.
pub fn det_delta_tilde(dims: &FockDims, l: u32) -> Result<FockPoly> {
    if l == 0 || l > dims.p.min(dims.a) {
        return Err(Error::OutOfRange(format!("Delta~_{l} needs 1 <= l <= min(p,a)")));
    }
    let rows: Vec<u32> = (dims.p - l + 1..=dims.p).collect();
    let cols: Vec<u32> = (1..=l).collect();
    Ok(det(&rows, &cols, FockVar::zp))
}

/// Basis element of `gl(p) + gl(q) + gl(a) + gl(b)` acting on the Fock space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KSide {
    GlP(u32, u32),
    GlQ(u32, u32),
    GlA(u32, u32),
    GlB(u32, u32),
}

impl fmt::Display for KSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KSide::GlP(r, s) => write!(f, "gl(p)[{r},{s}]"),
            KSide::GlQ(r, s) => write!(f, "gl(q)[{r},{s}]"),
            KSide::GlA(r, s) => write!(f, "gl(a)[{r},{s}]"),
            KSide::GlB(r, s) => write!(f, "gl(b)[{r},{s}]"),
        }
    }
}

impl From<crate::liealg::KBasis> for KSide {
    fn from(x: crate::liealg::KBasis) -> Self {
        match x {
            crate::liealg::KBasis::Plus(a, b) => KSide::GlP(a, b),
            crate::liealg::KBasis::Minus(m, n) => KSide::GlQ(m, n),
        }
    }
}

impl FockDims {
    /// Every basis element of the four blocks.
    pub fn k_side_basis(&self) -> Vec<KSide> {
        let mut v = Vec::new();
        let square = |lo: u32, hi: u32| (lo..=hi).flat_map(move |r| (lo..=hi).map(move |s| (r, s)));
        v.extend(square(1, self.p).map(|(r, s)| KSide::GlP(r, s)));
        v.extend(square(self.p + 1, self.p + self.q).map(|(r, s)| KSide::GlQ(r, s)));
        v.extend(square(1, self.a).map(|(r, s)| KSide::GlA(r, s)));
        v.extend(square(1, self.b).map(|(r, s)| KSide::GlB(r, s)));
        v
    }
}

/// `sum over targets of c * t * d/ds f` for pairs `(t, s)`.
fn vector_field(f: &FockPoly, pairs: impl Iterator<Item = (FockVar, FockVar)>, c: i64) -> FockPoly {
    let mut r = FockPoly::zero();
    for (t, s) in pairs {
        r.add_assign(&f.deriv(&s).mul_var(&t));
    }
    r.scale(&Scalar::from_int(c))
}

/// Untwisted linear action on variables. Weights: `z'[alpha,i]` has `-e_alpha` and `-e_i`,
/// `z''[alpha,j]` has `+e_alpha` and `+e_j`, `w'[mu,j]` has `-e_mu` and `-e_j`,
/// `w''[mu,i]` has `+e_mu` and `+e_i`. These make the Weil operators of `p` equivariant.
pub fn natural_action(dims: &FockDims, x: KSide, f: &FockPoly) -> FockPoly {
    match x {
        KSide::GlP(r, s) => vector_field(f, (1..=dims.a).map(|i| (FockVar::zp(s, i), FockVar::zp(r, i))), -1).add(
            &vector_field(f, (1..=dims.b).map(|j| (FockVar::zpp(r, j), FockVar::zpp(s, j))), 1),
        ),
        KSide::GlQ(r, s) => vector_field(f, (1..=dims.b).map(|j| (FockVar::wp(s, j), FockVar::wp(r, j))), -1).add(
            &vector_field(f, (1..=dims.a).map(|i| (FockVar::wpp(r, i), FockVar::wpp(s, i))), 1),
        ),
        KSide::GlA(r, s) => {
            vector_field(f, (1..=dims.p).map(|al| (FockVar::zp(al, s), FockVar::zp(al, r))), -1).add(&vector_field(
                f,
                (dims.p + 1..=dims.p + dims.q).map(|mu| (FockVar::wpp(mu, r), FockVar::wpp(mu, s))),
                1,
            ))
        }
        KSide::GlB(r, s) => {
            vector_field(f, (1..=dims.p).map(|al| (FockVar::zpp(al, r), FockVar::zpp(al, s))), 1).add(&vector_field(
                f,
                (dims.p + 1..=dims.p + dims.q).map(|mu| (FockVar::wp(mu, s), FockVar::wp(mu, r))),
                -1,
            ))
        }
    }
}

/// Scalar by which a diagonal element acts on the vacuum in the twisted model:
/// 0 on `gl(p)`, `a-b` on `gl(q)`, `q` on `gl(a)`, `p` on `gl(b)`.
pub fn vacuum_shift(dims: &FockDims, x: KSide) -> i64 {
    match x {
        KSide::GlP(r, s) if r == s => 0,
        KSide::GlQ(r, s) if r == s => dims.a as i64 - dims.b as i64,
        KSide::GlA(r, s) if r == s => dims.q as i64,
        KSide::GlB(r, s) if r == s => dims.p as i64,
        _ => 0,
    }
}

/// The twisted action: natural action plus the vacuum character on diagonal elements.
pub fn k_side_action(dims: &FockDims, x: KSide, f: &FockPoly) -> FockPoly {
    let shift = vacuum_shift(dims, x);
    natural_action(dims, x, f).add(&f.scale(&Scalar::from_int(shift)))
}

/// gl(p)-weight of a monomial: `#z''[alpha,.] - #z'[alpha,.]` for each `alpha`.
pub fn gl_p_weight(dims: &FockDims, m: &FockMonomial) -> Vec<i64> {
    let mut w = vec![0i64; dims.p as usize];
    for (v, e) in m.powers() {
        match v.family {
            Family::ZPrime => w[(v.v - 1) as usize] -= *e as i64,
            Family::ZDPrime => w[(v.v - 1) as usize] += *e as i64,
            _ => {}
        }
    }
    w
}

/// All `P+` monomials of the given total degree and gl(p)-weight.
pub fn plus_weight_slice(dims: &FockDims, weight: &[i64], degree: u32) -> Vec<FockMonomial> {
    // per row alpha: n'' - n' = weight[alpha]; sum over rows of n'' + n' = degree
    fn compositions(n: u32, parts: u32) -> Vec<Vec<u32>> {
        if parts == 0 {
            return if n == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in compositions(n - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let p = dims.p as usize;
    let mut out = Vec::new();
    // choose n'_alpha row by row
    fn rows(
        dims: &FockDims,
        weight: &[i64],
        alpha: usize,
        left: i64,
        acc: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if alpha == weight.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let w = weight[alpha];
        let mut np: i64 = (-w).max(0);
        loop {
            let npp = np + w;
            let used = np + npp;
            if used > left {
                break;
            }
            if (np == 0 || dims.a > 0) && (npp == 0 || dims.b > 0) {
                acc.push((np as u32, npp as u32));
                rows(dims, weight, alpha + 1, left - used, acc, out);
                acc.pop();
            }
            np += 1;
        }
    }
    let mut row_choices = Vec::new();
    rows(dims, weight, 0, degree as i64, &mut Vec::new(), &mut row_choices);
    for choice in row_choices {
        let mut partial: Vec<FockMonomial> = vec![Monomial::one()];
        for (alpha, &(np, npp)) in choice.iter().enumerate().take(p) {
            let al = alpha as u32 + 1;
            let mut next = Vec::new();
            for cp in compositions(np, dims.a) {
                for cpp in compositions(npp, dims.b) {
                    let row = Monomial::from_powers(
                        cp.iter()
                            .enumerate()
                            .map(|(i, &e)| (FockVar::zp(al, i as u32 + 1), e))
                            .chain(
                                cpp.iter()
                                    .enumerate()
                                    .map(|(j, &e)| (FockVar::zpp(al, j as u32 + 1), e)),
                            ),
                    );
                    for m in &partial {
                        next.push(m.mul(&row));
                    }
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out.sort();
    out
}
