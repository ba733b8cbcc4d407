//! Exact scalars in Q(i)[sqrt2] tensored with Laurent monomials in a formal symbol pi.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A Gaussian rational `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gauss { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Gauss::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn zero() -> Self {
        Gauss::from_int(0)
    }

    pub fn one() -> Self {
        Gauss::from_int(1)
    }

    pub fn i() -> Self {
        Gauss::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    pub fn neg(&self) -> Gauss {
        Gauss::new(-&self.re, -&self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Gauss> {
        if self.is_zero() {
            return None;
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(Gauss::new(&self.re / &n, -&self.im / &n))
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// Exponent key of a basis monomial: power of pi first, then power of sqrt2 (0 or 1).
type Key = (i32, u8);

/// Exact scalar: finite sum of `c * sqrt2^e * pi^k` with `c` Gaussian rational.
///
/// Terms are kept sorted by `(k, e)` with no zero coefficients, so derived
/// equality is equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(Key, Gauss)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(Gauss::from_int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::from_gauss(Gauss::new(BigRational::from_integer(n), BigRational::zero()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(Gauss::new(BigRational::new(n.into(), d.into()), BigRational::zero()))
    }

    pub fn from_gauss(g: Gauss) -> Self {
        Scalar::monomial(g, 0, 0)
    }

    /// `c * sqrt2^sqrt2_exp * pi^pi_exp`, with even powers of sqrt2 folded into `c`.
    pub fn monomial(c: Gauss, sqrt2_exp: i32, pi_exp: i32) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        let e = sqrt2_exp.rem_euclid(2);
        let half = (sqrt2_exp - e) / 2;
        let two = BigRational::from_integer(2.into());
        let factor = if half >= 0 {
            num::pow(two, half as usize)
        } else {
            num::pow(two, (-half) as usize).recip()
        };
        let c = Gauss::new(&c.re * &factor, &c.im * &factor);
        Scalar {
            terms: vec![((pi_exp, e as u8), c)],
        }
    }

    pub fn i() -> Self {
        Scalar::from_gauss(Gauss::i())
    }

    pub fn sqrt2() -> Self {
        Scalar::monomial(Gauss::one(), 1, 0)
    }

    pub fn pi_pow(k: i32) -> Self {
        Scalar::monomial(Gauss::one(), 0, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1 == Gauss::one()
    }

    /// Number of stored `(pi, sqrt2)` terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The Gaussian rational value if the scalar has no sqrt2 or pi part.
    pub fn as_gauss(&self) -> Option<Gauss> {
        match self.terms.as_slice() {
            [] => Some(Gauss::zero()),
            [((0, 0), g)] => Some(g.clone()),
            _ => None,
        }
    }

    /// Iterate `(pi_exp, sqrt2_exp, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, u8, &Gauss)> {
        self.terms.iter().map(|((k, e), g)| (*k, *e, g))
    }

    fn from_unsorted(mut raw: Vec<(Key, Gauss)>) -> Self {
        raw.sort_by_key(|a| a.0);
        let mut terms: Vec<(Key, Gauss)> = Vec::with_capacity(raw.len());
        for (k, g) in raw {
            match terms.last_mut() {
                Some((lk, lg)) if *lk == k => *lg = lg.add(&g),
                _ => terms.push((k, g)),
            }
        }
        terms.retain(|(_, g)| !g.is_zero());
        Scalar { terms }
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ka, ga) = &self.terms[i];
            let (kb, gb) = &o.terms[j];
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    out.push((*ka, ga.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*kb, gb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ga.add(gb);
                    if !s.is_zero() {
                        out.push((*ka, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Scalar { terms: out }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let two = Gauss::from_int(2);
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for ((ka, ea), ga) in &self.terms {
            for ((kb, eb), gb) in &o.terms {
                let mut g = ga.mul(gb);
                let e = ea + eb;
                if e == 2 {
                    g = g.mul(&two);
                }
                raw.push(((ka + kb, e % 2), g));
            }
        }
        Scalar::from_unsorted(raw)
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, g)| (*k, g.neg())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact division by a monomial unit `c * sqrt2^e * pi^k`.
    pub fn div_unit(&self, u: &Scalar) -> Result<Scalar> {
        let [((k, e), c)] = u.terms.as_slice() else {
            return Err(Error::NonMonomialDivisor(u.to_string()));
        };
        let cinv = c.inv().expect("canonical terms are nonzero");
        // 1/sqrt2 = sqrt2/2
        let inv = if *e == 1 {
            Scalar::monomial(cinv, -1, -k)
        } else {
            Scalar::monomial(cinv, 0, -k)
        };
        Ok(self.mul_ref(&inv))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((k, e), g)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({g})")?;
            if *e == 1 {
                write!(f, "*sqrt2")?;
            }
            if *k != 0 {
                write!(f, "*pi^{k}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.add_ref(&o)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_ref(o);
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_ref(&o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
