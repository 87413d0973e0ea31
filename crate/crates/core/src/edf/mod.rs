//! Edit-distance-function envelopes.
//!
//! Every closed form handled here is a minimum of linear-fractional pieces
//! `(a·p + b)/(c·p + d)`. Two pieces cross at a root of a quadratic with
//! rational coefficients, so maxima are rationals or quadratic surds and can
//! be reported exactly.

mod surd;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::crg::{CanonicalForm, Crg};
use crate::embedding::ForbFamily;
use crate::enumerate::{family_members, min_g_over, Side};
use crate::error::{Error, Result};
use crate::rational::{dyadic_grid, int, ratio, to_f64, Rational};

pub use surd::{Exact, Surd};

/// `p ↦ (a·p + b)/(c·p + d)`, with a denominator that does not vanish on
/// `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinFrac {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl LinFrac {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        // c·p + d is affine, so it vanishes somewhere on [0, 1] iff its
        // endpoint values do not share a strict sign.
        let at0 = d.clone();
        let at1 = &c + &d;
        if at0.is_zero() || at1.is_zero() || at0.is_positive() != at1.is_positive() {
            return Err(Error::InvalidParameters(format!(
                "denominator {c}·p + {d} vanishes on [0, 1]"
            )));
        }
        Ok(LinFrac { a, b, c, d })
    }

    fn ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        LinFrac::new(int(a), int(b), int(c), int(d)).expect("valid constant piece")
    }

    /// `p / m`.
    pub fn p_over(m: i64) -> Self {
        LinFrac::ints(1, 0, 0, m)
    }

    /// `(1 - p) / m`.
    pub fn q_over(m: i64) -> Self {
        LinFrac::ints(-1, 1, 0, m)
    }

    pub fn eval(&self, p: &Rational) -> Rational {
        (&self.a * p + &self.b) / (&self.c * p + &self.d)
    }

    pub fn eval_f64(&self, p: f64) -> f64 {
        (to_f64(&self.a) * p + to_f64(&self.b)) / (to_f64(&self.c) * p + to_f64(&self.d))
    }

    /// Coefficients `(A, B, C)` of `A·p² + B·p + C = 0` whose roots are the
    /// crossings of `self` and `other`.
    fn crossing_quadratic(&self, other: &LinFrac) -> (Rational, Rational, Rational) {
        let (s, o) = (self, other);
        let qa = &s.a * &o.c - &o.a * &s.c;
        let qb = &s.a * &o.d + &s.b * &o.c - &o.a * &s.d - &o.b * &s.c;
        let qc = &s.b * &o.d - &o.b * &s.d;
        (qa, qb, qc)
    }

    /// Crossings of the two pieces inside `[0, 1]`. Identical pieces have no
    /// isolated crossing and yield nothing.
    pub fn crossings(&self, other: &LinFrac) -> Vec<Exact> {
        let (qa, qb, qc) = self.crossing_quadratic(other);
        let unit = |x: f64| (-1e-12..=1.0 + 1e-12).contains(&x);
        if qa.is_zero() {
            if qb.is_zero() {
                return Vec::new();
            }
            let root = -qc / qb;
            return if root >= Rational::zero() && root <= Rational::one() {
                vec![Exact::Rational(root)]
            } else {
                Vec::new()
            };
        }
        let disc = &qb * &qb - Rational::from_integer(4.into()) * &qa * &qc;
        if disc.is_negative() {
            return Vec::new();
        }
        let two_a = Rational::from_integer(2.into()) * &qa;
        let u = -&qb / &two_a;
        let v = Rational::one() / &two_a;
        let mut roots = vec![Exact::from_parts(u.clone(), v.clone(), &disc)];
        if !disc.is_zero() {
            roots.push(Exact::from_parts(u, -v, &disc));
        }
        roots.into_iter().filter(|r| unit(r.to_f64())).collect()
    }

    pub fn at_exact(&self, p: &Exact) -> Exact {
        p.linear_fractional(&self.a, &self.b, &self.c, &self.d)
    }
}

/// `b + a·p` written compactly, e.g. `1-p`, `1+4p`, `p`, `3`; the flag
/// tells whether more than one term was printed.
fn affine(a: &Rational, b: &Rational) -> (String, bool) {
    let coeff = |r: &Rational| {
        if r.is_one() {
            String::new()
        } else if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("({r})")
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (true, _) => (format!("{b}"), false),
        (false, true) if a.is_negative() => (format!("-{}p", coeff(&-a)), false),
        (false, true) => (format!("{}p", coeff(a)), false),
        (false, false) => {
            let sign = if a.is_negative() { '-' } else { '+' };
            (format!("{b}{sign}{}p", coeff(&a.abs())), true)
        }
    }
}

impl fmt::Display for LinFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, num_compound) = affine(&self.a, &self.b);
        let (den, den_compound) = affine(&self.c, &self.d);
        let wrap = |s: String, compound: bool| if compound { format!("({s})") } else { s };
        if self.c.is_zero() && self.d.is_one() {
            return f.write_str(&num);
        }
        write!(f, "{}/{}", wrap(num, num_compound), wrap(den, den_compound || !self.c.is_zero()))
    }
}

/// Pointwise minimum of finitely many pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub pieces: Vec<LinFrac>,
}

impl Envelope {
    pub fn new(pieces: Vec<LinFrac>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidParameters("envelope needs at least one piece".into()));
        }
        Ok(Envelope { pieces })
    }

    pub fn value(&self, p: &Rational) -> Rational {
        self.pieces
            .iter()
            .map(|f| f.eval(p))
            .min()
            .expect("nonempty envelope")
    }

    pub fn value_f64(&self, p: f64) -> f64 {
        self.pieces
            .iter()
            .map(|f| f.eval_f64(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn values(&self, grid: &[Rational]) -> Vec<Rational> {
        grid.iter().map(|p| self.value(p)).collect()
    }
}

/// `min{ p/(ω-1), (1-p)/(α-1) }`.
pub fn split_edf(alpha: usize, omega: usize) -> Result<Envelope> {
    check_split_params(alpha, omega)?;
    Envelope::new(vec![
        LinFrac::p_over(omega as i64 - 1),
        LinFrac::q_over(alpha as i64 - 1),
    ])
}

/// `((ω-1)/(α+ω-2), 1/(α+ω-2))`.
pub fn split_max_point(alpha: usize, omega: usize) -> Result<(Rational, Rational)> {
    check_split_params(alpha, omega)?;
    let s = (alpha + omega - 2) as i64;
    Ok((ratio(omega as i64 - 1, s), ratio(1, s)))
}

fn check_split_params(alpha: usize, omega: usize) -> Result<()> {
    if alpha < 2 || omega < 2 {
        return Err(Error::InvalidParameters(format!(
            "split envelope needs alpha, omega >= 2 (got {alpha}, {omega}); \
             complete or empty graphs have the one-piece forms p/(ω-1) and (1-p)/(α-1)"
        )));
    }
    Ok(())
}

/// `p/(ω-1)`, the envelope of Forb(K_ω).
pub fn forb_complete_edf(omega: usize) -> Result<Envelope> {
    if omega < 2 {
        return Err(Error::InvalidParameters("omega must be at least 2".into()));
    }
    Envelope::new(vec![LinFrac::p_over(omega as i64 - 1)])
}

/// `(1-p)/(α-1)`, the envelope of Forb of the empty graph on `α` vertices.
pub fn forb_empty_edf(alpha: usize) -> Result<Envelope> {
    if alpha < 2 {
        return Err(Error::InvalidParameters("alpha must be at least 2".into()));
    }
    Envelope::new(vec![LinFrac::q_over(alpha as i64 - 1)])
}

/// `min{ p/3, p/(1+4p), (1-p)/2 }`.
pub fn h9_edf() -> Envelope {
    Envelope {
        pieces: vec![LinFrac::p_over(3), LinFrac::ints(1, 0, 4, 1), LinFrac::q_over(2)],
    }
}

/// `min{ p/(1+2p), (1-p)/2 }`.
pub fn c6_star_edf() -> Envelope {
    Envelope {
        pieces: vec![LinFrac::ints(1, 0, 2, 1), LinFrac::q_over(2)],
    }
}

/// Whether second differences of `values` (taken on a uniform grid) are
/// all non-positive. Returns the index of the first offending middle point.
pub fn first_convex_kink(values: &[Rational]) -> Option<usize> {
    values.windows(3).position(|w| &w[0] + &w[2] > &w[1] + &w[1]).map(|i| i + 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxPoint {
    pub p_star: f64,
    pub d_star: f64,
    /// Final ternary-search bracket for `p*`.
    pub bracket: (f64, f64),
    /// Exact `(p*, d*)` when the maximum sits at an endpoint or at a crossing
    /// of two pieces.
    pub exact: Option<(Exact, Exact)>,
    /// The maximum is attained at two or more points of the verification
    /// grid.
    pub flat: bool,
}

const VERIFY_GRID: u32 = 64;

/// Maximizer of a concave envelope by ternary search to within `tol`, with
/// an exact form when two pieces cross at the maximum or the maximum is at an
/// endpoint.
pub fn max_point(env: &Envelope, tol: f64) -> Result<MaxPoint> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameters(format!("tolerance must be positive, got {tol}")));
    }
    let grid: Vec<Rational> = (0..=VERIFY_GRID).map(|i| ratio(i as i64, VERIFY_GRID as i64)).collect();
    let values = env.values(&grid);
    if let Some(i) = first_convex_kink(&values) {
        return Err(Error::NotConcave(grid[i].clone()));
    }

    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > tol {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if env.value_f64(m1) < env.value_f64(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let p_hat = 0.5 * (lo + hi);
    let d_hat = env.value_f64(p_hat);

    let exact = exact_max(env, p_hat, tol);
    let (p_star, d_star) = match &exact {
        Some((p, d)) => (p.to_f64(), d.to_f64()),
        None => (p_hat, d_hat),
    };

    let top = values.iter().max().expect("nonempty grid");
    // Two grid points sharing the top value can also straddle a peak; the
    // envelope is constant between them only if their midpoint matches too.
    let first = values.iter().position(|v| v == top).expect("top is a value");
    let last = values.iter().rposition(|v| v == top).expect("top is a value");
    let flat = last > first && env.value(&((&grid[first] + &grid[last]) / int(2))) == *top;
    if to_f64(top) > d_star + tol.max(1e-12) {
        return Err(Error::NotConcave(grid[values.iter().position(|v| v == top).unwrap_or(0)].clone()));
    }

    Ok(MaxPoint {
        p_star,
        d_star,
        bracket: (lo, hi),
        exact,
        flat,
    })
}

fn exact_max(env: &Envelope, p_hat: f64, tol: f64) -> Option<(Exact, Exact)> {
    let near = |x: f64| (x - p_hat).abs() <= 10.0 * tol + 1e-9;
    // Endpoint maxima.
    for end in [0i64, 1] {
        if near(end as f64) {
            let p = int(end);
            return Some((Exact::Rational(p.clone()), Exact::Rational(env.value(&p))));
        }
    }
    // Crossing of two pieces that both attain the envelope there.
    let mut best: Option<(f64, Exact, Exact)> = None;
    for (i, f) in env.pieces.iter().enumerate() {
        for g in &env.pieces[i + 1..] {
            for root in f.crossings(g) {
                let x = root.to_f64();
                if !near(x) {
                    continue;
                }
                let d = f.at_exact(&root);
                let dv = d.to_f64();
                if (dv - env.value_f64(x)).abs() > 1e-12 {
                    continue;
                }
                let dist = (x - p_hat).abs();
                if best.as_ref().is_none_or(|(b, _, _)| dist < *b) {
                    best = Some((dist, root, d));
                }
            }
        }
    }
    best.map(|(_, p, d)| (p, d))
}

/// Whether `env_h(p) = env_hbar(1 - p)` at every grid point.
pub fn symmetry_pair(env_h: &Envelope, env_hbar: &Envelope, grid: &[Rational]) -> bool {
    grid.iter()
        .all(|p| env_h.value(p) == env_hbar.value(&(Rational::one() - p)))
}

/// One grid point of an envelope computed from CRGs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopeRow {
    pub p: Rational,
    pub value: Rational,
    pub argmin: Crg,
    pub form: CanonicalForm,
}

/// Pointwise minimum of `g_K(p)` over `crgs` at each grid point.
pub fn envelope_from_crgs(crgs: &[Crg], grid: &[Rational]) -> Result<Vec<EnvelopeRow>> {
    if crgs.is_empty() {
        return Err(Error::InvalidParameters("no CRGs given".into()));
    }
    grid.par_iter()
        .map(|p| {
            let m = min_g_over(crgs, p)?.expect("nonempty");
            Ok(EnvelopeRow {
                p: p.clone(),
                value: m.g,
                argmin: m.crg,
                form: m.form,
            })
        })
        .collect()
}

/// Envelope of `g` over enumerated members of `K(F)` with at most `max_k`
/// vertices; each grid point only consults CRGs with the p-core edge
/// structure for its side of 1/2. An upper bound on the edit distance
/// function.
pub fn family_envelope(family: &ForbFamily, max_k: usize, grid: &[Rational]) -> Result<Vec<EnvelopeRow>> {
    let mut by_side: BTreeMap<Side, Vec<Rational>> = BTreeMap::new();
    for p in grid {
        crate::rational::check_unit_interval(p)?;
        by_side.entry(Side::of(p)).or_default().push(p.clone());
    }
    let mut rows = Vec::with_capacity(grid.len());
    for (side, points) in by_side {
        let members = family_members(family, max_k, Some(side))?;
        if members.is_empty() {
            return Err(Error::TrivialFamily);
        }
        rows.extend(envelope_from_crgs(&members, &points)?);
    }
    rows.sort_by(|a, b| a.p.cmp(&b.p));
    Ok(rows)
}

/// Default grid `i/64`, `i = 1..=63`.
pub fn default_grid() -> Vec<Rational> {
    dyadic_grid(64)
}

/// Compares an envelope table against a closed form; returns the points
/// where the table lies strictly below (`Ordering::Less`) or above
/// (`Ordering::Greater`) it.
pub fn compare_rows(rows: &[EnvelopeRow], env: &Envelope) -> Vec<(Rational, Ordering)> {
    rows.iter()
        .filter_map(|r| match r.value.cmp(&env.value(&r.p)) {
            Ordering::Equal => None,
            o => Some((r.p.clone(), o)),
        })
        .collect()
}
