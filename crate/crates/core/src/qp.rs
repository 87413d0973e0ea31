//! Exact global minimization of `xᵀ M_K(p) x` over the probability simplex.
//!
//! `M_K(p)` is generally indefinite, so local methods are not enough. Every
//! face of the simplex is visited instead: for a support `S` the stationarity
//! system
//!
//! ```text
//!     (M_S x)_i = λ   for i ∈ S,      Σ_{i∈S} x_i = 1
//! ```
//!
//! is solved exactly. A candidate is accepted when the solution is unique and
//! strictly positive, and its objective value is `λ` (since `xᵀMx = λ Σx`).
//! If the system on a face is singular or inconsistent, moving along a null
//! direction `v` with `Σv = 0` changes the objective affinely, so the minimum
//! over that face sits on a smaller face, which is enumerated as well. The
//! global minimum is therefore the least accepted `λ`.
//!
//! The matrix is scaled by the denominator of `p` so elimination runs over
//! integers (fraction-free Bareiss with fraction-free back substitution),
//! first in checked `i128` and, on overflow, in big integers.

use num::{BigInt, One, Signed, Zero};

use crate::crg::{Crg, Weight};
use crate::error::Result;
use crate::limits::limits;
use crate::rational::{check_open_unit_interval, check_unit_interval, Rational};

/// Optimal value `g_K(p)` with an optimal weighting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GResult {
    pub g: Rational,
    pub x: Vec<Rational>,
    /// Indices with strictly positive weight.
    pub support: Vec<usize>,
    /// Set when `p` is 0 or 1. The value is still exact, but the p-core and
    /// localization theory does not apply there.
    pub boundary: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub mask: u64,
    pub value: Rational,
    pub x: Vec<Rational>,
}

fn support_of(mask: u64, k: usize) -> Vec<usize> {
    (0..k).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Integer arithmetic used by the elimination; `None` signals overflow.
trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i8;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    /// Exact division.
    fn div(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        self.checked_div(*other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Integer matrix `den · M_K(p)` given `p = a/den`.
fn scaled_matrix<T: Ring>(k: &Crg, a: &T, b: &T) -> Vec<Vec<T>> {
    let n = k.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match k.weight(i, j) {
                    Weight::P => a.clone(),
                    Weight::OneMinusP => b.clone(),
                    Weight::Zero => T::zero(),
                })
                .collect()
        })
        .collect()
}

/// Solution of a face system as integers over a common denominator:
/// `x_i = scaled[i] / det`, `λ·den = scaled[s] / det`.
struct FaceSolution {
    scaled: Vec<BigInt>,
    det: BigInt,
}

/// Solves the stationarity system on `mask` by fraction-free elimination and
/// back substitution. `Some(None)` means the face is rejected (singular or
/// not strictly positive); `None` means the ring overflowed.
fn solve_face<T: Ring>(m: &[Vec<T>], mask: u64) -> Option<Option<FaceSolution>> {
    let idx: Vec<usize> = support_of(mask, m.len());
    let s = idx.len();
    let n = s + 1;
    // Unknowns: x_0..x_{s-1}, λ. Augmented column at index n.
    let minus_one = T::zero().sub(&T::one())?;
    let mut a: Vec<Vec<T>> = Vec::with_capacity(n);
    for &i in &idx {
        let mut row: Vec<T> = idx.iter().map(|&j| m[i][j].clone()).collect();
        row.push(minus_one.clone());
        row.push(T::zero());
        a.push(row);
    }
    let mut last = vec![T::one(); s];
    last.push(T::zero());
    last.push(T::one());
    a.push(last);

    let mut prev = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Some(None);
        };
        a.swap(col, pivot);
        for r in col + 1..n {
            for c in col + 1..=n {
                let lhs = a[r][c].mul(&a[col][col])?;
                let rhs = a[r][col].mul(&a[col][c])?;
                a[r][c] = lhs.sub(&rhs)?.div(&prev)?;
            }
            a[r][col] = T::zero();
        }
        prev = a[col][col].clone();
    }

    // Fraction-free back substitution: X_r = det · sol_r is integral.
    let det = a[n - 1][n - 1].clone();
    let mut xs = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut acc = a[r][n].mul(&det)?;
        for c in r + 1..n {
            acc = acc.sub(&a[r][c].mul(&xs[c])?)?;
        }
        xs[r] = acc.div(&a[r][r])?;
    }
    let sign = det.signum();
    if xs[..s].iter().any(|x| x.signum() != sign) {
        return Some(None);
    }
    Some(Some(FaceSolution {
        scaled: xs.iter().map(Ring::to_big).collect(),
        det: det.to_big(),
    }))
}

fn all_faces<T: Ring>(m: &[Vec<T>]) -> Option<Vec<(u64, FaceSolution)>> {
    let full: u64 = (1u64 << m.len()) - 1;
    let mut out = Vec::new();
    for mask in 1..=full {
        if let Some(sol) = solve_face(m, mask)? {
            out.push((mask, sol));
        }
    }
    Some(out)
}

/// Every accepted face candidate, in increasing mask order.
pub(crate) fn candidates(k: &Crg, p: &Rational) -> Vec<Candidate> {
    let den_big = p.denom().clone();
    let a_big = p.numer().clone();
    let b_big = &den_big - &a_big;
    let small = match (i64::try_from(&a_big), i64::try_from(&b_big)) {
        (Ok(a), Ok(b)) => all_faces(&scaled_matrix(k, &(a as i128), &(b as i128))),
        _ => None,
    };
    let faces = small.unwrap_or_else(|| {
        all_faces(&scaled_matrix(k, &a_big, &b_big)).expect("big integers do not overflow")
    });
    let den = Rational::from_integer(den_big);
    faces
        .into_iter()
        .map(|(mask, sol)| {
            let mut x = vec![Rational::zero(); k.order()];
            let s = support_of(mask, k.order());
            for (slot, &i) in s.iter().enumerate() {
                x[i] = Rational::new(sol.scaled[slot].clone(), sol.det.clone());
            }
            let lambda = Rational::new(sol.scaled[s.len()].clone(), sol.det.clone());
            Candidate {
                mask,
                value: lambda / &den,
                x,
            }
        })
        .collect()
}

/// `g_K(p) = min { xᵀ M_K(p) x : x ≥ 0, Σx = 1 }`, exactly.
///
/// Among several optimal faces the one whose support is lexicographically
/// smallest (as a sorted index list) is reported.
pub fn g_value(k: &Crg, p: &Rational) -> Result<GResult> {
    check_unit_interval(p)?;
    limits().check_crg(k.order())?;
    let n = k.order();
    let best = candidates(k, p)
        .into_iter()
        .min_by(|a, b| {
            a.value
                .cmp(&b.value)
                .then_with(|| support_of(a.mask, n).cmp(&support_of(b.mask, n)))
        })
        .expect("singleton faces are always accepted");
    Ok(GResult {
        g: best.value,
        support: support_of(best.mask, n),
        x: best.x,
        boundary: p.is_zero() || p.is_one(),
    })
}

/// Whether `g_K(p)` is strictly below `g` of every proper nonempty sub-CRG.
///
/// The minimum over a sub-CRG on `T` is the least candidate supported inside
/// `T`, so `K` is a p-core exactly when the full support is accepted and its
/// value beats every other candidate.
pub fn is_p_core(k: &Crg, p: &Rational) -> Result<bool> {
    check_open_unit_interval(p)?;
    limits().check_crg(k.order())?;
    if k.order() == 1 {
        return Ok(true);
    }
    let full: u64 = (1u64 << k.order()) - 1;
    let cands = candidates(k, p);
    let Some(whole) = cands.iter().find(|c| c.mask == full) else {
        return Ok(false);
    };
    Ok(cands
        .iter()
        .filter(|c| c.mask != full)
        .all(|c| whole.value < c.value))
}

/// `g` of `K(w, b)`: `(w/p + b/(1-p))⁻¹`, from the harmonic component rule
/// with singleton values `p` and `1 - p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayForm {
    pub white: usize,
    pub black: usize,
}

impl GrayForm {
    pub fn new(white: usize, black: usize) -> Self {
        assert!(white + black >= 1, "K(0,0) is not a CRG");
        GrayForm { white, black }
    }

    /// Evaluates as `p(1-p) / (w(1-p) + b·p)`, which stays finite at the
    /// endpoints.
    pub fn eval(&self, p: &Rational) -> Rational {
        let q = Rational::one() - p;
        let w = Rational::from_integer(self.white.into());
        let b = Rational::from_integer(self.black.into());
        match (self.white, self.black) {
            (_, 0) => p / w,
            (0, _) => q / b,
            _ => (p * &q) / (w * &q + b * p),
        }
    }
}

/// `g` of the all-black-vertex, all-white-edge CRG on `k` vertices for
/// `p ≤ 1/2`: `p + (1 - 2p)/k`, attained by the uniform weighting.
pub fn black_clique_value(k: usize, p: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    p + (Rational::one() - two * p) / Rational::from_integer(k.into())
}
