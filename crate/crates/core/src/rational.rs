//! Exact rationals and their text form.
//!
//! Values are `num::BigRational`, always kept in lowest terms with a
//! positive denominator. The text form is `a/b`; plain integers are accepted
//! on input. Decimal notation is rejected so that no rounding can sneak in.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Parses `a/b` or `a`; whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational of the form a/b"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Always `a/b`, including integers (`1/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Only reachable for astronomically large parts.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn check_unit_interval(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        Err(Error::ProbabilityOutOfRange(p.clone()))
    } else {
        Ok(())
    }
}

pub fn check_open_unit_interval(p: &Rational) -> Result<()> {
    check_unit_interval(p)?;
    if p.is_zero() || p.is_one() {
        Err(Error::OpenIntervalRequired(p.clone()))
    } else {
        Ok(())
    }
}

/// The dyadic grid `i/n` for `i = 1..n`.
pub fn dyadic_grid(n: u32) -> Vec<Rational> {
    (1..n).map(|i| ratio(i as i64, n as i64)).collect()
}

/// Default evaluation grid: `i/64` for `i = 1..=63`.
pub fn default_grid() -> Vec<Rational> {
    dyadic_grid(64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" -2 / 4 ").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("1").unwrap(), int(1));
    }

    #[test]
    fn rejects_floats_and_zero_denominators() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn formats_with_explicit_denominator() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&int(1)), "1/1");
        assert_eq!(format_rational(&ratio(0, 5)), "0/1");
    }

    #[test]
    fn default_grid_has_63_points() {
        let g = default_grid();
        assert_eq!(g.len(), 63);
        assert_eq!(g[0], ratio(1, 64));
        assert_eq!(g[31], half());
    }

    #[test]
    fn unit_interval_checks() {
        assert!(check_unit_interval(&int(0)).is_ok());
        assert!(check_unit_interval(&ratio(5, 4)).is_err());
        assert!(check_open_unit_interval(&int(1)).is_err());
        assert!(check_open_unit_interval(&ratio(1, 3)).is_ok());
    }
}
