//! Weighted-degree identities of p-core CRGs.
//!
//! For a p-core with optimal weighting `x`, each vertex `v` satisfies
//! `g = p·d_W(v) + (1-p)·d_B(v)`, the edge colors are restricted according to
//! the side of `1/2` that `p` falls on, and the weights and gray degrees are
//! pinned down by `g`, `p` and `x(v)`. [`audit`] evaluates all of these and
//! reports every violation it finds.

use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use crate::crg::{Crg, DegreeSums, EdgeColor, VertexColor};
use crate::error::Result;
use crate::qp::{g_value, is_p_core, GResult};
use crate::rational::{check_open_unit_interval, format_rational, half, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// Forbidden edge colors for the side of 1/2.
    EdgeStructure,
    /// `g = p·d_W(v) + (1-p)·d_B(v)`.
    Regularity,
    /// Weights of white vertices (p ≤ 1/2) or black vertices (p ≥ 1/2).
    WeightFormula,
    /// Gray degree as an affine function of the vertex weight.
    GrayDegree,
    /// Upper bound on the weight of the other color class.
    WeightBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub vertex: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.vertex {
            Some(v) => write!(f, "{:?} at vertex {v}: {}", self.rule, self.detail),
            None => write!(f, "{:?}: {}", self.rule, self.detail),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CoreAudit {
    pub optimum: GResult,
    pub degrees: Vec<DegreeSums>,
    pub violations: Vec<Violation>,
}

/// Audits `k` at `p`; `None` when `k` is not a p-core.
pub fn audit(k: &Crg, p: &Rational) -> Result<Option<CoreAudit>> {
    check_open_unit_interval(p)?;
    if !is_p_core(k, p)? {
        return Ok(None);
    }
    let optimum = g_value(k, p)?;
    let degrees = (0..k.order())
        .map(|v| k.degree_sums(&optimum.x, v))
        .collect::<Result<Vec<_>>>()?;
    let mut violations = edge_structure(k, p);
    violations.extend(vertex_identities(k, p, &optimum, &degrees));
    Ok(Some(CoreAudit {
        optimum,
        degrees,
        violations,
    }))
}

fn edge_structure(k: &Crg, p: &Rational) -> Vec<Violation> {
    let low = *p <= half();
    let high = *p >= half();
    let mut out = Vec::new();
    for i in 0..k.order() {
        for j in i + 1..k.order() {
            let (ci, cj) = (k.vertex_color(i), k.vertex_color(j));
            let bad = match k.edge_color(i, j) {
                EdgeColor::Black => low || (high && (ci, cj) != (VertexColor::White, VertexColor::White)),
                EdgeColor::White => high || (low && (ci, cj) != (VertexColor::Black, VertexColor::Black)),
                EdgeColor::Gray => false,
            };
            if bad {
                out.push(Violation {
                    rule: Rule::EdgeStructure,
                    vertex: None,
                    detail: format!("edge {i}-{j} is {:?} between {ci:?} and {cj:?}", k.edge_color(i, j)),
                });
            }
        }
    }
    out
}

fn vertex_identities(k: &Crg, p: &Rational, opt: &GResult, degrees: &[DegreeSums]) -> Vec<Violation> {
    let g = &opt.g;
    let one = Rational::one();
    let q = &one - p;
    let two = Rational::from_integer(2.into());
    let mut out = Vec::new();
    let mut fail = |rule, v: usize, detail: String| {
        out.push(Violation {
            rule,
            vertex: Some(v),
            detail,
        })
    };
    for (v, d) in degrees.iter().enumerate() {
        let xv = &opt.x[v];
        let local = p * &d.white + &q * &d.black;
        if local != *g {
            fail(
                Rule::Regularity,
                v,
                format!("p·dW + (1-p)·dB = {} but g = {}", format_rational(&local), format_rational(g)),
            );
        }
        if !(&d.gray + &d.white + &d.black - &one).is_zero() {
            fail(Rule::Regularity, v, "degree sums do not add up to 1".into());
        }
        let color = k.vertex_color(v);
        if *p <= half() {
            match color {
                VertexColor::White => {
                    let want = g / p;
                    if *xv != want {
                        fail(Rule::WeightFormula, v, format!("x = {} but g/p = {}", format_rational(xv), format_rational(&want)));
                    }
                }
                VertexColor::Black => {
                    let want = (p - g) / p + (&one - &two * p) / p * xv;
                    if d.gray != want {
                        fail(Rule::GrayDegree, v, format!("dG = {} but formula gives {}", format_rational(&d.gray), format_rational(&want)));
                    }
                    let bound = g / &q;
                    if *xv > bound {
                        fail(Rule::WeightBound, v, format!("x = {} exceeds g/(1-p) = {}", format_rational(xv), format_rational(&bound)));
                    }
                }
            }
        }
        if *p >= half() {
            match color {
                VertexColor::Black => {
                    let want = g / &q;
                    if *xv != want {
                        fail(Rule::WeightFormula, v, format!("x = {} but g/(1-p) = {}", format_rational(xv), format_rational(&want)));
                    }
                }
                VertexColor::White => {
                    let want = (&q - g) / &q + (&two * p - &one) / &q * xv;
                    if d.gray != want {
                        fail(Rule::GrayDegree, v, format!("dG = {} but formula gives {}", format_rational(&d.gray), format_rational(&want)));
                    }
                    let bound = g / p;
                    if *xv > bound {
                        fail(Rule::WeightBound, v, format!("x = {} exceeds g/p = {}", format_rational(xv), format_rational(&bound)));
                    }
                }
            }
        }
    }
    out
}
