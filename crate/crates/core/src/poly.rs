//! Sparse multivariate polynomials with exact scalar coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Monomial as a sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial<V>(Vec<(V, u32)>);

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: V) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (V, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in powers {
            for _ in 0..e {
                m = m.mul_var(&v);
            }
        }
        m
    }

    pub fn powers(&self) -> &[(V, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, o: &Monomial<V>) -> Monomial<V> {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            match self.0[i].0.cmp(&o.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(o.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + o.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&o.0[j..]);
        Monomial(out)
    }

    pub fn mul_var(&self, v: &V) -> Monomial<V> {
        let mut out = self.0.clone();
        match out.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => out[i].1 += 1,
            Err(i) => out.insert(i, (v.clone(), 1)),
        }
        Monomial(out)
    }

    /// `d/dv` of the monomial as `(multiplicity, monomial)`, or `None` if `v` is absent.
    pub fn deriv(&self, v: &V) -> Option<(u32, Monomial<V>)> {
        let i = self.0.binary_search_by(|(w, _)| w.cmp(v)).ok()?;
        let e = self.0[i].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some((e, Monomial(out)))
    }
}

impl<V: fmt::Display> fmt::Display for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial as a map from monomials to nonzero scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<V: Ord> {
    terms: BTreeMap<Monomial<V>, Scalar>,
}

impl<V: Ord + Clone> Default for Poly<V> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<V: Ord + Clone> Poly<V> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: V) -> Self {
        Poly::term(Monomial::var(v), Scalar::one())
    }

    pub fn term(m: Monomial<V>, c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, &c);
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial<V>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Poly<V>) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add(&self, o: &Poly<V>) -> Poly<V> {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &Poly<V>) -> Poly<V> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly<V> {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Poly<V> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul_ref(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, o: &Poly<V>) -> Poly<V> {
        let mut r = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), &ca.mul_ref(cb));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Poly<V> {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn mul_var(&self, v: &V) -> Poly<V> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.mul_var(v), c.clone())).collect(),
        }
    }

    pub fn deriv(&self, v: &V) -> Poly<V> {
        let mut r = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.deriv(v) {
                r.add_term(dm, &c.mul_ref(&Scalar::from_int(e as i64)));
            }
        }
        r
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Every variable occurring in some term.
    pub fn variables(&self) -> std::collections::BTreeSet<V> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(v, _)| v.clone()))
            .collect()
    }
}

impl<V: Ord + fmt::Display> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]*{m}")?;
        }
        Ok(())
    }
}
