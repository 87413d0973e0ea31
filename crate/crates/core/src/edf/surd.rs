//! Numbers of the form `u + v·√r` with rational `u, v` and square-free `r`.

use std::fmt;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::rational::{format_rational, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub rational: Rational,
    pub coeff: Rational,
    /// Square-free, greater than 1.
    pub radicand: BigInt,
}

/// An exactly known real: rational or quadratic surd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exact {
    Rational(Rational),
    Surd(Surd),
}

/// Splits `m > 0` into `s²·r`; square factors are only searched up to a
/// bound, so `r` may keep a large square factor for huge inputs.
fn square_part(m: &BigInt) -> (BigInt, BigInt) {
    let mut rest = m.clone();
    let mut s = BigInt::one();
    let mut f = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &f * &f <= rest && f < limit {
        let sq = &f * &f;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            s *= &f;
        }
        f += 1;
    }
    (s, rest)
}

impl Exact {
    /// `u + v·√d` for rational `d ≥ 0`, simplified.
    pub fn from_parts(u: Rational, v: Rational, d: &Rational) -> Exact {
        assert!(!d.is_negative(), "square root of a negative number");
        if v.is_zero() || d.is_zero() {
            return Exact::Rational(u);
        }
        // √(n/m) = √(n·m)/m
        let nm = d.numer() * d.denom();
        let (s, r) = square_part(&nm);
        let v = v * Rational::new(s, d.denom().clone());
        if r.is_one() {
            Exact::Rational(u + v)
        } else {
            Exact::Surd(Surd {
                rational: u,
                coeff: v,
                radicand: r,
            })
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Exact::Rational(r) => to_f64(r),
            Exact::Surd(s) => {
                to_f64(&s.rational) + to_f64(&s.coeff) * s.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
            }
        }
    }

    /// Components `(u, v, r)` with `r = 1` for rationals.
    fn parts(&self) -> (Rational, Rational, BigInt) {
        match self {
            Exact::Rational(r) => (r.clone(), Rational::zero(), BigInt::one()),
            Exact::Surd(s) => (s.rational.clone(), s.coeff.clone(), s.radicand.clone()),
        }
    }

    /// `(a·self + b) / (c·self + d)`.
    pub fn linear_fractional(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Exact {
        let (u, v, r) = self.parts();
        let rr = Rational::from_integer(r.clone());
        let n0 = a * &u + b;
        let n1 = a * &v;
        let d0 = c * &u + d;
        let d1 = c * &v;
        let den = &d0 * &d0 - &d1 * &d1 * &rr;
        let u2 = (&n0 * &d0 - &n1 * &d1 * &rr) / &den;
        let v2 = (&n1 * &d0 - &n0 * &d1) / &den;
        if v2.is_zero() || r.is_one() {
            Exact::Rational(if r.is_one() { u2 + v2 } else { u2 })
        } else {
            Exact::Surd(Surd {
                rational: u2,
                coeff: v2,
                radicand: r,
            })
        }
    }
}

impl fmt::Display for Exact {
    /// Rationals as `a/b`; surds over a common denominator, e.g.
    /// `(1+sqrt(17))/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Rational(r) => f.write_str(&format_rational(r)),
            Exact::Surd(s) => {
                let den = s.rational.denom().lcm(s.coeff.denom());
                let n0 = s.rational.numer() * (&den / s.rational.denom());
                let n1 = s.coeff.numer() * (&den / s.coeff.denom());
                let root = format!("sqrt({})", s.radicand);
                let term = if n1.abs().is_one() {
                    root
                } else {
                    format!("{}*{root}", n1.abs())
                };
                let sign = if n1.is_negative() { '-' } else { '+' };
                let body = if n0.is_zero() {
                    format!("{}{term}", if n1.is_negative() { "-" } else { "" })
                } else {
                    format!("{n0}{sign}{term}")
                };
                if den.is_one() {
                    f.write_str(&body)
                } else {
                    write!(f, "({body})/{den}")
                }
            }
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
