//! The exterior algebras of `p = p' + p''` and its dual, the action of
//! `k = gl(p) + gl(q)` on them, the Vogan-Zuckerman vectors and the Chern element.
//!
//! Basis conventions: `x[a,m]` is the matrix unit `e_{a m}` in `p'` (upper right block),
//! `y[a,m]` is `e_{m a}` in `p''` (lower left block), with `1 <= a <= p < m <= p+q`.
//! `xi'[a,m]` and `xi''[a,m]` are the dual bases.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Gauss, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Prime,
    DoublePrime,
}

/// Basis index of `p`: `x[alpha,mu]` for `Prime`, `y[alpha,mu]` for `DoublePrime`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PIndex {
    pub kind: Kind,
    pub alpha: u32,
    pub mu: u32,
}

impl PIndex {
    pub fn prime(alpha: u32, mu: u32) -> Self {
        PIndex {
            kind: Kind::Prime,
            alpha,
            mu,
        }
    }

    pub fn dprime(alpha: u32, mu: u32) -> Self {
        PIndex {
            kind: Kind::DoublePrime,
            alpha,
            mu,
        }
    }
}

/// Basis element of `k`: `Plus(a,b)` is `e_{ab}` in `gl(p)`, `Minus(m,n)` is `e_{mn}` in `gl(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KBasis {
    Plus(u32, u32),
    Minus(u32, u32),
}

impl fmt::Display for KBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KBasis::Plus(a, b) => write!(f, "E+[{a},{b}]"),
            KBasis::Minus(m, n) => write!(f, "E-[{m},{n}]"),
        }
    }
}

/// Dimensions `(p, q)` and the bit layout of blades: primes first, then double primes,
/// each lexicographic in `(alpha, mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PDims {
    pub p: u32,
    pub q: u32,
}

impl PDims {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 || 2 * p * q > 64 {
            return Err(Error::OutOfRange(format!("need p,q >= 1 and 2pq <= 64 (p={p}, q={q})")));
        }
        Ok(PDims { p, q })
    }

    pub fn n_bits(&self) -> u32 {
        2 * self.p * self.q
    }

    pub fn bit(&self, idx: PIndex) -> u32 {
        debug_assert!(idx.alpha >= 1 && idx.alpha <= self.p);
        debug_assert!(idx.mu > self.p && idx.mu <= self.p + self.q);
        let base = match idx.kind {
            Kind::Prime => 0,
            Kind::DoublePrime => self.p * self.q,
        };
        base + (idx.alpha - 1) * self.q + (idx.mu - self.p - 1)
    }

    pub fn index(&self, bit: u32) -> PIndex {
        let pq = self.p * self.q;
        let (kind, r) = if bit < pq {
            (Kind::Prime, bit)
        } else {
            (Kind::DoublePrime, bit - pq)
        };
        PIndex {
            kind,
            alpha: r / self.q + 1,
            mu: r % self.q + self.p + 1,
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = PIndex> + '_ {
        (0..self.n_bits()).map(|b| self.index(b))
    }

    /// `(#prime, #doubleprime)` of a blade.
    pub fn bidegree(&self, mask: u64) -> (u32, u32) {
        let pq = self.p * self.q;
        let prime_mask = if pq == 64 { u64::MAX } else { (1u64 << pq) - 1 };
        ((mask & prime_mask).count_ones(), (mask & !prime_mask).count_ones())
    }

    /// Torus weight of a blade of vectors, as a vector of length `p+q`.
    pub fn vector_weight(&self, mask: u64) -> Vec<i64> {
        let mut w = vec![0i64; (self.p + self.q) as usize];
        for b in bits(mask) {
            let idx = self.index(b);
            let (a, m) = ((idx.alpha - 1) as usize, (idx.mu - 1) as usize);
            let s = if idx.kind == Kind::Prime { 1 } else { -1 };
            w[a] += s;
            w[m] -= s;
        }
        w
    }

    /// All basis elements of `k`: `gl(p)` first, then `gl(q)`.
    pub fn k_basis(&self) -> Vec<KBasis> {
        let (p, q) = (self.p, self.q);
        let mut v = Vec::new();
        for a in 1..=p {
            for b in 1..=p {
                v.push(KBasis::Plus(a, b));
            }
        }
        for m in p + 1..=p + q {
            for n in p + 1..=p + q {
                v.push(KBasis::Minus(m, n));
            }
        }
        v
    }

    /// Adjoint image of a basis vector of `p` under `X` (matrix units map basis to basis).
    pub fn ad(&self, x: KBasis, idx: PIndex) -> Option<(PIndex, i64)> {
        match (x, idx.kind) {
            (KBasis::Plus(a, b), Kind::Prime) if idx.alpha == b => Some((PIndex::prime(a, idx.mu), 1)),
            (KBasis::Plus(a, b), Kind::DoublePrime) if idx.alpha == a => Some((PIndex::dprime(b, idx.mu), -1)),
            (KBasis::Minus(m, n), Kind::Prime) if idx.mu == m => Some((PIndex::prime(idx.alpha, n), -1)),
            (KBasis::Minus(m, n), Kind::DoublePrime) if idx.mu == n => Some((PIndex::dprime(idx.alpha, m), 1)),
            _ => None,
        }
    }

    /// Per-bit images of `X` on basis 1-vectors of the given algebra.
    fn action_table(&self, x: KBasis, algebra: Algebra) -> Vec<Option<(u32, i64)>> {
        let n = self.n_bits() as usize;
        let mut t = vec![None; n];
        for b in 0..self.n_bits() {
            if let Some((img, c)) = self.ad(x, self.index(b)) {
                let ib = self.bit(img);
                match algebra {
                    Algebra::Vectors => t[b as usize] = Some((ib, c)),
                    // (X xi)(v) = -xi(X v): xi_{ib} picks up -c xi_b
                    Algebra::Covectors => t[ib as usize] = Some((b, -c)),
                }
            }
        }
        t
    }
}

/// Iterate set bits from low to high.
pub fn bits(mut mask: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros();
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Sign of `e_A ^ e_B` relative to the sorted blade `A|B`; `None` if they overlap.
pub fn wedge_sign(a: u64, b: u64) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let inversions: u32 = bits(b).map(|j| ((a >> j) >> 1).count_ones()).sum();
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

fn between_mask(i: u32, j: u32) -> u64 {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let upto_hi = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
    upto_hi & !((2u64 << lo) - 1)
}

/// Apply a derivation given by per-bit images to one blade.
pub(crate) fn derive_blade(mask: u64, table: &[Option<(u32, i64)>]) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    for t in bits(mask) {
        let Some((t2, c)) = table[t as usize] else { continue };
        if t2 == t {
            out.push((mask, c));
        } else if mask & (1u64 << t2) == 0 {
            let rest = mask & !(1u64 << t);
            let sign = if (rest & between_mask(t, t2)).count_ones().is_multiple_of(2) {
                1
            } else {
                -1
            };
            out.push((rest | (1u64 << t2), sign * c));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Algebra {
    /// The exterior algebra of `p`.
    Vectors,
    /// The exterior algebra of `p*`.
    Covectors,
}

/// Element of the exterior algebra of `p` or `p*` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    pub dims: PDims,
    pub algebra: Algebra,
    terms: BTreeMap<u64, Scalar>,
}

impl Multivector {
    pub fn zero(dims: PDims, algebra: Algebra) -> Self {
        Multivector {
            dims,
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dims: PDims, algebra: Algebra, c: Scalar) -> Self {
        Multivector::blade(dims, algebra, 0, c)
    }

    pub fn one(dims: PDims, algebra: Algebra) -> Self {
        Multivector::scalar(dims, algebra, Scalar::one())
    }

    pub fn blade(dims: PDims, algebra: Algebra, mask: u64, c: Scalar) -> Self {
        let mut m = Multivector::zero(dims, algebra);
        m.add_term(mask, &c);
        m
    }

    /// Basis vector `x[alpha,mu]` or `y[alpha,mu]` of `p`.
    pub fn vector(dims: PDims, idx: PIndex) -> Self {
        Multivector::blade(dims, Algebra::Vectors, 1u64 << dims.bit(idx), Scalar::one())
    }

    /// Dual basis covector `xi'[alpha,mu]` or `xi''[alpha,mu]`.
    pub fn covector(dims: PDims, idx: PIndex) -> Self {
        Multivector::blade(dims, Algebra::Covectors, 1u64 << dims.bit(idx), Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u64) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, mask: u64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(mask).add_ref(c);
        if s.is_zero() {
            self.terms.remove(&mask);
        } else {
            self.terms.insert(mask, s);
        }
    }

    fn check_same(&self, o: &Multivector) -> Result<()> {
        if self.algebra != o.algebra || self.dims != o.dims {
            return Err(Error::MixedAlgebra);
        }
        Ok(())
    }

    pub fn add(&self, o: &Multivector) -> Result<Multivector> {
        self.check_same(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Multivector) -> Result<Multivector> {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        let mut r = Multivector::zero(self.dims, self.algebra);
        for (m, x) in &self.terms {
            r.add_term(*m, &x.mul_ref(c));
        }
        r
    }

    pub fn wedge(&self, o: &Multivector) -> Result<Multivector> {
        self.check_same(o)?;
        let mut r = Multivector::zero(self.dims, self.algebra);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                if let Some(s) = wedge_sign(*ma, *mb) {
                    r.add_term(ma | mb, &ca.mul_ref(cb).mul_ref(&Scalar::from_int(s)));
                }
            }
        }
        Ok(r)
    }

    /// `(#prime, #doubleprime)` if all terms share it.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| self.dims.bidegree(*m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Derivation extension of the `k`-action (adjoint on `p`, contragredient on `p*`).
    pub fn k_action(&self, x: KBasis) -> Multivector {
        let table = self.dims.action_table(x, self.algebra);
        let mut r = Multivector::zero(self.dims, self.algebra);
        for (m, c) in &self.terms {
            for (m2, s) in derive_blade(*m, &table) {
                r.add_term(m2, &c.mul_ref(&Scalar::from_int(s)));
            }
        }
        r
    }

    fn fmt_blade(&self, mask: u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if mask == 0 {
            return write!(f, "1");
        }
        for (n, b) in bits(mask).enumerate() {
            if n > 0 {
                write!(f, "^")?;
            }
            let idx = self.dims.index(b);
            let name = match (self.algebra, idx.kind) {
                (Algebra::Vectors, Kind::Prime) => "x",
                (Algebra::Vectors, Kind::DoublePrime) => "y",
                (Algebra::Covectors, Kind::Prime) => "xi'",
                (Algebra::Covectors, Kind::DoublePrime) => "xi''",
            };
            write!(f, "{name}[{},{}]", idx.alpha, idx.mu)?;
        }
        Ok(())
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut masks: Vec<u64> = self.terms.keys().copied().collect();
        masks.sort_by_key(|m| (m.count_ones(), bits(*m).collect::<Vec<_>>()));
        for (n, m) in masks.into_iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}]*", self.terms[&m])?;
            self.fmt_blade(m, f)?;
        }
        Ok(())
    }
}

/// Duality pairing of a covector with a vector; dual blades pair to 1.
pub fn pair(omega: &Multivector, v: &Multivector) -> Result<Scalar> {
    if omega.algebra != Algebra::Covectors || v.algebra != Algebra::Vectors || omega.dims != v.dims {
        return Err(Error::MixedAlgebra);
    }
    let mut s = Scalar::zero();
    for (m, c) in &omega.terms {
        if let Some(d) = v.terms.get(m) {
            s += &c.mul_ref(d);
        }
    }
    Ok(s)
}

/// `xtilde_alpha = (-1)^q (v_alpha (x) v*_{p+1}) ^ ... ^ (v_alpha (x) v*_{p+q})`, where
/// `v_alpha (x) v*_mu = -x[alpha,mu]`; the signs cancel to `x[alpha,p+1] ^ ... ^ x[alpha,p+q]`.
pub fn xtilde(dims: PDims, alpha: u32) -> Multivector {
    let mut r = Multivector::scalar(
        dims,
        Algebra::Vectors,
        Scalar::from_int(if dims.q.is_multiple_of(2) { 1 } else { -1 }),
    );
    for mu in dims.p + 1..=dims.p + dims.q {
        let t = Multivector::vector(dims, PIndex::prime(alpha, mu)).scale(&Scalar::from_int(-1));
        r = r.wedge(&t).expect("same algebra");
    }
    r
}

/// `ftilde_beta = (v_{p+1} (x) v*_beta) ^ ... ^ (v_{p+q} (x) v*_beta) = y[beta,p+1] ^ ... ^ y[beta,p+q]`.
pub fn ftilde(dims: PDims, beta: u32) -> Multivector {
    let mut r = Multivector::one(dims, Algebra::Vectors);
    for mu in dims.p + 1..=dims.p + dims.q {
        r = r
            .wedge(&Multivector::vector(dims, PIndex::dprime(beta, mu)))
            .expect("same algebra");
    }
    r
}

/// The Vogan-Zuckerman vector `e(bq,aq) = (xtilde_1 ^ ... ^ xtilde_b) ^ (ftilde_{p-a+1} ^ ... ^ ftilde_p)`,
/// spanning the top exterior power of `u cap p` for the rectangle parabolic.
pub fn vz_vector(b: u32, a: u32, p: u32, q: u32) -> Result<Multivector> {
    if a + b > p {
        return Err(Error::OutOfRange(format!("a+b > p (a={a}, b={b}, p={p})")));
    }
    let dims = PDims::new(p, q)?;
    let mut r = Multivector::one(dims, Algebra::Vectors);
    for alpha in 1..=b {
        r = r.wedge(&xtilde(dims, alpha))?;
    }
    for beta in p - a + 1..=p {
        r = r.wedge(&ftilde(dims, beta))?;
    }
    Ok(r)
}

/// Why a multivector is not a highest weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HwFailure {
    Zero,
    NotEigenvector(KBasis),
    NotAnnihilated(KBasis),
}

impl fmt::Display for HwFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HwFailure::Zero => write!(f, "zero multivector"),
            HwFailure::NotEigenvector(x) => write!(f, "not an eigenvector of {x}"),
            HwFailure::NotAnnihilated(x) => write!(f, "not annihilated by raising operator {x}"),
        }
    }
}

/// Raising operators of the fixed Borel: `E+[a,a+1]` and `E-[m+1,m]`.
pub fn raising_operators(dims: PDims) -> Vec<KBasis> {
    let mut v: Vec<KBasis> = (1..dims.p).map(|a| KBasis::Plus(a, a + 1)).collect();
    v.extend((dims.p + 1..dims.p + dims.q).map(|m| KBasis::Minus(m + 1, m)));
    v
}

/// Check torus eigenvector and annihilation by raising operators; returns the weight.
pub fn highest_weight_check(v: &Multivector) -> std::result::Result<Vec<i64>, HwFailure> {
    let dims = v.dims;
    let (&m0, _) = v.terms.iter().next().ok_or(HwFailure::Zero)?;
    let mut w = dims.vector_weight(m0);
    if v.algebra == Algebra::Covectors {
        w.iter_mut().for_each(|x| *x = -*x);
    }
    let torus = (1..=dims.p)
        .map(|a| KBasis::Plus(a, a))
        .chain((dims.p + 1..=dims.p + dims.q).map(|m| KBasis::Minus(m, m)));
    for (i, h) in torus.enumerate() {
        if v.k_action(h) != v.scale(&Scalar::from_int(w[i])) {
            return Err(HwFailure::NotEigenvector(h));
        }
    }
    for x in raising_operators(dims) {
        if !v.k_action(x).is_zero() {
            return Err(HwFailure::NotAnnihilated(x));
        }
    }
    Ok(w)
}

/// Curvature two-form `Omega[mu,nu] = sum_alpha xi''[alpha,mu] ^ xi'[alpha,nu]`.
pub fn curvature(dims: PDims, mu: u32, nu: u32) -> Multivector {
    let mut r = Multivector::zero(dims, Algebra::Covectors);
    for alpha in 1..=dims.p {
        let t = Multivector::covector(dims, PIndex::dprime(alpha, mu))
            .wedge(&Multivector::covector(dims, PIndex::prime(alpha, nu)))
            .expect("same algebra");
        r = r.add(&t).expect("same algebra");
    }
    r
}

/// Permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|s| {
            let inv = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| s[i] > s[j])
                .count();
            (s, if inv % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// `(-i/(2 pi))^q / q!` as an exact scalar.
pub fn chern_prefactor(q: u32) -> Scalar {
    let minus_i = Gauss::i().neg();
    let mut c = Gauss::one();
    for _ in 0..q {
        c = c.mul(&minus_i);
    }
    let denom: i64 = (1..=q as i64).product::<i64>() * (1i64 << q);
    let c = c.mul(&Gauss::new(
        num::BigRational::new(1.into(), denom.into()),
        num::BigRational::from_integer(0.into()),
    ));
    Scalar::monomial(c, 0, -(q as i32))
}

/// Chern element built from a family of curvature two-forms:
/// `prefactor * sum_{s,t} sgn(s) sgn(t) prod_i Omega[p+s(i), p+t(i)]`.
fn chern_from(dims: PDims, omega: impl Fn(u32, u32) -> Multivector) -> Multivector {
    let q = dims.q as usize;
    let om: Vec<Vec<Multivector>> = (0..q)
        .map(|i| {
            (0..q)
                .map(|j| omega(dims.p + 1 + i as u32, dims.p + 1 + j as u32))
                .collect()
        })
        .collect();
    let perms = signed_permutations(q);
    let mut total = Multivector::zero(dims, Algebra::Covectors);
    for (s, ss) in &perms {
        for (t, st) in &perms {
            let mut prod = Multivector::one(dims, Algebra::Covectors);
            for i in 0..q {
                prod = prod.wedge(&om[s[i]][t[i]]).expect("same algebra");
            }
            total = total
                .add(&prod.scale(&Scalar::from_int(ss * st)))
                .expect("same algebra");
        }
    }
    total.scale(&chern_prefactor(dims.q))
}

/// The K-invariant Chern element `c_q` of bidegree `(q,q)` in the exterior algebra of `p*`.
pub fn chern_element(p: u32, q: u32) -> Result<Multivector> {
    let dims = PDims::new(p, q)?;
    Ok(chern_from(dims, |m, n| curvature(dims, m, n)))
}

/// The same sum with `Omega[mu,nu] = sum_alpha xi''[alpha,nu] ^ xi'[alpha,nu]`, i.e. the
/// curvature taken independent of the first index. It vanishes identically for `q >= 2`.
pub fn chern_element_first_index_dropped(p: u32, q: u32) -> Result<Multivector> {
    let dims = PDims::new(p, q)?;
    Ok(chern_from(dims, |_, n| curvature(dims, n, n)))
}
