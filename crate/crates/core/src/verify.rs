//! Batch verification runner: named checks over parameter grids, with text and JSON reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::{
    differential, equivariance_defect, evaluate, isotypic_multiplicity, kv_product, natural_eigenvalue, psi,
    vz_value_is_harmonic,
};
use crate::error::{Error, Result};
use crate::fock::{det_delta, det_delta_tilde, is_harmonic, k_side_action, weil_p_action, FockDims, FockPoly, KSide};
use crate::liealg::{chern_element, vz_vector, PDims, PIndex};
use crate::partition::{
    conjugate, exterior_decomposition, schur_dim, special_hom_dimension, special_hom_dimension_rule,
};
use crate::scalar::Scalar;
use crate::schrodinger::{
    bargmann_cochain, bilinear_form, km_cocycle, nonfactorization_demo, product_formula_sides, psi_blockwise,
};

/// Inclusive parameter range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: u32,
    pub hi: u32,
}

impl ParamRange {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::Config(format!("empty range {lo}..={hi}")));
        }
        Ok(ParamRange { lo, hi })
    }

    pub fn single(v: u32) -> Self {
        ParamRange { lo: v, hi: v }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    /// Accepts `N`, `A-B`, `A..B` and `A..=B`, all inclusive.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Config(format!("bad range `{s}`")))
        };
        let (lo, hi) = if let Some((l, h)) = s.split_once("..=") {
            (num(l)?, num(h)?)
        } else if let Some((l, h)) = s.split_once("..") {
            (num(l)?, num(h)?)
        } else if let Some((l, h)) = s.split_once('-') {
            (num(l)?, num(h)?)
        } else {
            let v = num(s)?;
            (v, v)
        };
        ParamRange::new(lo, hi)
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.lo, self.hi)
    }
}

/// Which parameters a check is indexed by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    P,
    PQ,
    PQAB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Closedness,
    VzEvaluation,
    Equivariance,
    VacuumCharacter,
    Harmonicity,
    MultiplicityOne,
    RectangleMultiplicity,
    ExteriorDimension,
    ChernInvariance,
    ProductFormula,
    Nonfactorization,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Closedness,
        Check::VzEvaluation,
        Check::Equivariance,
        Check::VacuumCharacter,
        Check::Harmonicity,
        Check::MultiplicityOne,
        Check::RectangleMultiplicity,
        Check::ExteriorDimension,
        Check::ChernInvariance,
        Check::ProductFormula,
        Check::Nonfactorization,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Closedness => "closedness",
            Check::VzEvaluation => "vz-evaluation",
            Check::Equivariance => "equivariance",
            Check::VacuumCharacter => "vacuum-character",
            Check::Harmonicity => "harmonicity",
            Check::MultiplicityOne => "multiplicity-one",
            Check::RectangleMultiplicity => "rectangle-multiplicity",
            Check::ExteriorDimension => "exterior-dimension",
            Check::ChernInvariance => "chern-invariance",
            Check::ProductFormula => "product-formula",
            Check::Nonfactorization => "nonfactorization",
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            Check::ExteriorDimension | Check::ChernInvariance | Check::ProductFormula => Shape::PQ,
            Check::Nonfactorization => Shape::P,
            _ => Shape::PQAB,
        }
    }

    /// Whether cells with `a + b > p` are skipped.
    fn needs_ab_le_p(&self) -> bool {
        !matches!(self, Check::VacuumCharacter)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown check `{s}`")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parse `all` or a comma list of check names; an empty string selects nothing.
pub fn parse_checks(s: &str) -> Result<Vec<Check>> {
    if s.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut v = Vec::new();
    for part in s.split(',').filter(|t| !t.trim().is_empty()) {
        let c: Check = part.parse()?;
        if !v.contains(&c) {
            v.push(c);
        }
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub p: ParamRange,
    pub q: ParamRange,
    pub a: ParamRange,
    pub b: ParamRange,
    pub checks: Vec<Check>,
    pub jobs: usize,
    /// Multiplicity cells whose degree exceeds this are skipped.
    pub max_degree: Option<u32>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            p: ParamRange { lo: 1, hi: 3 },
            q: ParamRange { lo: 1, hi: 2 },
            a: ParamRange { lo: 0, hi: 3 },
            b: ParamRange { lo: 0, hi: 3 },
            checks: Check::ALL.to_vec(),
            jobs: 1,
            max_degree: None,
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<()> {
        if self.p.lo == 0 || self.q.lo == 0 {
            return Err(Error::Config("p and q must be at least 1".into()));
        }
        if self.p.hi * self.q.hi > 32 {
            return Err(Error::Config(format!("p*q = {} exceeds 32", self.p.hi * self.q.hi)));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.p)?;
        for (n, v) in [("q", self.q), ("a", self.a), ("b", self.b)] {
            if let Some(v) = v {
                write!(f, " {n}={v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub params: Params,
    pub status: Status,
    pub millis: u64,
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let w = self.records.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.records {
            let params = r.params.to_string();
            s.push_str(&format!(
                "{:<w$}  {:<16}  {:<7}  {:>7}ms",
                r.name, params, r.status, r.millis
            ));
            if let Some(c) = &r.counterexample {
                s.push_str("  ");
                s.push_str(c);
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "{} pass, {} fail, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Outcome of one cell: `Ok(None)` pass, `Ok(Some(cx))` failure with counterexample.
type Outcome = Result<Option<String>>;

fn fail_if(cond: bool, cx: impl FnOnce() -> String) -> Option<String> {
    cond.then(cx)
}

fn check_closedness(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    let d = differential(&psi(b, a, p, q)?);
    Ok(fail_if(!d.is_zero(), || d.to_string()))
}

fn check_vz_evaluation(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    let got = evaluate(&psi(b, a, p, q)?, &vz_vector(b, a, p, q)?)?;
    let want = kv_product(&FockDims::new(p, q, a, b)?)?;
    Ok(fail_if(got != want, || format!("value {got} expected {want}")))
}

fn check_equivariance(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    let phi = psi(b, a, p, q)?;
    let dims = phi.dims;
    for x in dims.pdims().k_basis() {
        let d = equivariance_defect(&phi, x);
        if !d.is_zero() {
            return Ok(Some(format!("{x}: {d}")));
        }
    }
    for mu in p + 1..=p + q {
        let x = KSide::GlQ(mu, mu);
        for (m, f) in phi.terms() {
            let want = f.scale(&Scalar::from_int(a as i64 - b as i64));
            if k_side_action(&dims, x, f) != want {
                return Ok(Some(format!("{x} on value at blade {m:#x}: {f}")));
            }
        }
    }
    let value = evaluate(&phi, &vz_vector(b, a, p, q)?)?;
    let expected = (1..=a)
        .map(|i| (KSide::GlA(i, i), -(q as i64)))
        .chain((1..=b).map(|j| (KSide::GlB(j, j), q as i64)));
    for (x, want) in expected {
        let got = natural_eigenvalue(&dims, x, &value);
        if got != Some(want) {
            return Ok(Some(format!("{x}: eigenvalue {got:?} expected {want}")));
        }
    }
    Ok(None)
}

fn check_vacuum_character(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    let dims = FockDims::new(p, q, a, b)?;
    let one = FockPoly::one();
    let diag = dims.k_side_basis().into_iter().filter(|x| match *x {
        KSide::GlP(r, s) | KSide::GlQ(r, s) | KSide::GlA(r, s) | KSide::GlB(r, s) => r == s,
    });
    for x in diag {
        let want = match x {
            KSide::GlP(..) => 0,
            KSide::GlQ(..) => a as i64 - b as i64,
            KSide::GlA(..) => q as i64,
            KSide::GlB(..) => p as i64,
        };
        let got = k_side_action(&dims, x, &one);
        if got != one.scale(&Scalar::from_int(want)) {
            return Ok(Some(format!("{x}: {got} expected {want}")));
        }
    }
    // [w(x[alpha,mu]), w(y[alpha,mu])] acts on the vacuum as e_mu_mu - e_alpha_alpha does
    for alpha in 1..=p {
        for mu in p + 1..=p + q {
            let (x, y) = (PIndex::prime(alpha, mu), PIndex::dprime(alpha, mu));
            let xy = weil_p_action(&dims, x, &weil_p_action(&dims, y, &one));
            let yx = weil_p_action(&dims, y, &weil_p_action(&dims, x, &one));
            let want = k_side_action(&dims, KSide::GlQ(mu, mu), &one).sub(&k_side_action(
                &dims,
                KSide::GlP(alpha, alpha),
                &one,
            ));
            let got = xy.sub(&yx);
            if got != want {
                return Ok(Some(format!("bracket at ({alpha},{mu}): {got} expected {want}")));
            }
        }
    }
    Ok(None)
}

fn check_harmonicity(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    let dims = FockDims::new(p, q, a, b)?;
    let mut cands: Vec<(String, FockPoly)> = Vec::new();
    for k in 1..=p.min(b) {
        cands.push((format!("Delta_{k}"), det_delta(&dims, k)?));
    }
    for l in 1..=p.min(a) {
        cands.push((format!("Delta~_{l}"), det_delta_tilde(&dims, l)?));
    }
    for k in 1..=p.min(b) {
        for l in 1..=a.min(p - k) {
            let (dk, dl) = (det_delta(&dims, k)?, det_delta_tilde(&dims, l)?);
            for e1 in 1..=q {
                for e2 in 1..=q {
                    cands.push((format!("Delta_{k}^{e1} Delta~_{l}^{e2}"), dk.pow(e1).mul(&dl.pow(e2))));
                }
            }
        }
    }
    for (name, f) in cands {
        if !is_harmonic(&dims, &f) {
            return Ok(Some(format!("{name} not harmonic")));
        }
    }
    Ok(fail_if(!vz_value_is_harmonic(b, a, p, q)?, || {
        "value on the Vogan-Zuckerman vector not harmonic".into()
    }))
}

fn check_multiplicity(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    let m = isotypic_multiplicity(p, q, a, b, (a + b) * q)?;
    Ok(fail_if(m != 1, || format!("multiplicity {m}")))
}

fn check_rectangle(p: u32, q: u32, a: u32, b: u32) -> Outcome {
    for n in 0..=p {
        let got = special_hom_dimension(p, q, a, b, n)?;
        let want = special_hom_dimension_rule(p, a, b, n);
        if got != want {
            return Ok(Some(format!("n={n}: {got} expected {want}")));
        }
    }
    Ok(None)
}

fn binomial(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_exterior_dimension(p: u32, q: u32) -> Outcome {
    for r in 0..=p * q {
        let sum: u128 = exterior_decomposition(p, q, r)
            .iter()
            .map(|l| schur_dim(l, p) * schur_dim(&conjugate(l), q))
            .sum();
        if sum != binomial(p * q, r) {
            return Ok(Some(format!("R={r}: {sum} expected {}", binomial(p * q, r))));
        }
    }
    Ok(None)
}

fn check_chern(p: u32, q: u32) -> Outcome {
    let c = chern_element(p, q)?;
    if c.is_zero() {
        return Ok(Some("Chern element vanishes".into()));
    }
    for x in PDims::new(p, q)?.k_basis() {
        let d = c.k_action(x);
        if !d.is_zero() {
            return Ok(Some(format!("{x}: {d}")));
        }
    }
    Ok(None)
}

fn check_product_formula(p: u32, q: u32) -> Outcome {
    let (lhs, rhs) = product_formula_sides(p, q, 1)?;
    if lhs != rhs {
        return Ok(Some(format!("n=1: {}", lhs.add(&rhs.scale(&Scalar::from_int(-1))))));
    }
    if q == 1 && p <= 3 {
        let lhs = bargmann_cochain(&psi_blockwise(p, q, 2)?, 2)?;
        let rhs = km_cocycle(p, q, 2)?.scale(&Scalar::from_int(1 << (2 * q)));
        if lhs != rhs {
            return Ok(Some(format!("n=2: {}", lhs.add(&rhs.scale(&Scalar::from_int(-1))))));
        }
    }
    Ok(None)
}

fn check_nonfactorization(p: u32) -> Outcome {
    let (internal, km) = nonfactorization_demo(p)?;
    let want = bilinear_form(p, 2, 2)?;
    if internal != want {
        return Ok(Some(format!("same-block product {internal}")));
    }
    if km.weight_vectors() != vec![vec![1]] {
        return Ok(Some(format!("Kudla-Millson form {km}")));
    }
    Ok(fail_if(internal == km, || "forms coincide".into()))
}

fn run_cell(check: Check, params: Params) -> Outcome {
    let (p, q, a, b) = (
        params.p,
        params.q.unwrap_or(1),
        params.a.unwrap_or(0),
        params.b.unwrap_or(0),
    );
    match check {
        Check::Closedness => check_closedness(p, q, a, b),
        Check::VzEvaluation => check_vz_evaluation(p, q, a, b),
        Check::Equivariance => check_equivariance(p, q, a, b),
        Check::VacuumCharacter => check_vacuum_character(p, q, a, b),
        Check::Harmonicity => check_harmonicity(p, q, a, b),
        Check::MultiplicityOne => check_multiplicity(p, q, a, b),
        Check::RectangleMultiplicity => check_rectangle(p, q, a, b),
        Check::ExteriorDimension => check_exterior_dimension(p, q),
        Check::ChernInvariance => check_chern(p, q),
        Check::ProductFormula => check_product_formula(p, q),
        Check::Nonfactorization => check_nonfactorization(p),
    }
}

/// Cells of a check in grid order, with whether each is skipped.
pub fn cells(config: &CheckConfig, check: Check) -> Vec<(Params, bool)> {
    let mut v = Vec::new();
    for p in config.p.iter() {
        match check.shape() {
            Shape::P => v.push((
                Params {
                    p,
                    q: None,
                    a: None,
                    b: None,
                },
                false,
            )),
            Shape::PQ => v.extend(config.q.iter().map(|q| {
                (
                    Params {
                        p,
                        q: Some(q),
                        a: None,
                        b: None,
                    },
                    false,
                )
            })),
            Shape::PQAB => {
                for q in config.q.iter() {
                    for a in config.a.iter() {
                        for b in config.b.iter() {
                            let mut skip = check.needs_ab_le_p() && a + b > p;
                            if check == Check::MultiplicityOne {
                                skip |= config.max_degree.is_some_and(|cap| (a + b) * q > cap);
                            }
                            v.push((
                                Params {
                                    p,
                                    q: Some(q),
                                    a: Some(a),
                                    b: Some(b),
                                },
                                skip,
                            ));
                        }
                    }
                }
            }
        }
    }
    v
}

/// Run the selected checks over the grid with at most `jobs` workers.
pub fn run(config: &CheckConfig) -> Result<Report> {
    config.validate()?;
    let jobs: Vec<(Check, Params, bool)> = config
        .checks
        .iter()
        .flat_map(|&c| cells(config, c).into_iter().map(move |(p, s)| (c, p, s)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let records: Vec<Record> = pool.install(|| {
        jobs.par_iter()
            .map(|&(check, params, skip)| {
                let name = check.name().to_string();
                if skip {
                    return Record {
                        name,
                        params,
                        status: Status::Skipped,
                        millis: 0,
                        counterexample: None,
                    };
                }
                let start = Instant::now();
                let outcome = run_cell(check, params);
                let millis = start.elapsed().as_millis() as u64;
                let (status, counterexample) = match outcome {
                    Ok(None) => (Status::Pass, None),
                    Ok(Some(cx)) => (Status::Fail, Some(cx)),
                    Err(e) => (Status::Fail, Some(format!("error: {e}"))),
                };
                Record {
                    name,
                    params,
                    status,
                    millis,
                    counterexample,
                }
            })
            .collect()
    });
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(Report { records, summary })
}
