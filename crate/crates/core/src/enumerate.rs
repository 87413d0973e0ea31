//! Bounded enumeration of CRGs up to isomorphism, and minimization of `g`
//! over the enumerated members of `K(F)`.
//!
//! When a density `p` is given, only CRGs with the edge structure a p-core
//! must have are produced: below 1/2 no black edges and white edges only
//! between black vertices; above 1/2 the color-swapped rule; at exactly 1/2
//! every edge is gray. Every CRG contains a p-core sub-CRG with no larger
//! `g`, and `K(F)` is closed under taking sub-CRGs, so the restricted search
//! loses nothing when minimizing `g`.
//!
//! Work is split by vertex-color signature and by blocks of edge colorings;
//! partial results are sets keyed by canonical form, so the merged output
//! does not depend on how the work was scheduled.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::crg::{CanonicalForm, Crg, EdgeColor, VertexColor};
use crate::embedding::{in_family, ForbFamily};
use crate::error::{Error, Result};
use crate::limits::limits;
use crate::qp::g_value;
use crate::rational::{check_unit_interval, half, Rational};

/// Position of `p` relative to 1/2, which fixes the allowed edge structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Below,
    Half,
    Above,
}

impl Side {
    pub fn of(p: &Rational) -> Side {
        match p.cmp(&half()) {
            Ordering::Less => Side::Below,
            Ordering::Equal => Side::Half,
            Ordering::Greater => Side::Above,
        }
    }

    fn allowed(self, a: VertexColor, b: VertexColor) -> &'static [EdgeColor] {
        use EdgeColor::*;
        let both = |c| a == c && b == c;
        match self {
            Side::Half => &[Gray],
            Side::Below if both(VertexColor::Black) => &[White, Gray],
            Side::Above if both(VertexColor::White) => &[Black, Gray],
            _ => &[Gray],
        }
    }
}

const ALL_EDGE_COLORS: [EdgeColor; 3] = [EdgeColor::White, EdgeColor::Black, EdgeColor::Gray];

const BLOCK: u64 = 1 << 12;

/// Canonical forms of every CRG with `white` white and `black` black
/// vertices whose edges obey `side`.
fn signature_forms(white: usize, black: usize, side: Option<Side>) -> Result<BTreeSet<CanonicalForm>> {
    let k = white + black;
    let mut vcolor = vec![VertexColor::White; white];
    vcolor.extend(std::iter::repeat_n(VertexColor::Black, black));
    let mut choices: Vec<&[EdgeColor]> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            choices.push(match side {
                Some(s) => s.allowed(vcolor[i], vcolor[j]),
                None => &ALL_EDGE_COLORS,
            });
        }
    }
    let total: u64 = choices.iter().map(|c| c.len() as u64).product();
    let blocks = total.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|blk| {
            let mut out = BTreeSet::new();
            for code in blk * BLOCK..((blk + 1) * BLOCK).min(total) {
                let mut rest = code;
                let ecolor = choices
                    .iter()
                    .map(|c| {
                        let e = c[(rest % c.len() as u64) as usize];
                        rest /= c.len() as u64;
                        e
                    })
                    .collect();
                let crg = Crg::new(vcolor.clone(), ecolor)?;
                out.insert(crg.canonical_form()?);
            }
            Ok(out)
        })
        .try_reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        })
}

/// All CRGs with `1 ≤ k ≤ max_k` up to isomorphism, restricted to the p-core
/// edge structure when `p` is given, in canonical-form order (smaller `k`
/// first). Each CRG is its canonical representative.
pub fn enumerate_crgs(max_k: usize, p: Option<&Rational>) -> Result<Vec<Crg>> {
    if let Some(p) = p {
        check_unit_interval(p)?;
    }
    enumerate_side(max_k, p.map(Side::of))
}

pub fn enumerate_side(max_k: usize, side: Option<Side>) -> Result<Vec<Crg>> {
    limits().check_crg(max_k)?;
    let signatures: Vec<(usize, usize)> = (1..=max_k)
        .flat_map(|k| (0..=k).map(move |b| (k - b, b)))
        .collect();
    let forms = signatures
        .into_par_iter()
        .map(|(w, b)| signature_forms(w, b, side))
        .try_reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        })?;
    Ok(forms.iter().map(CanonicalForm::to_crg).collect())
}

/// Enumerated members of `K(F)` for one side of 1/2, in canonical order.
pub fn family_members(family: &ForbFamily, max_k: usize, side: Option<Side>) -> Result<Vec<Crg>> {
    let all = enumerate_side(max_k, side)?;
    let keep = all
        .par_iter()
        .map(|k| in_family(k, family))
        .collect::<Result<Vec<bool>>>()?;
    Ok(all
        .into_iter()
        .zip(keep)
        .filter_map(|(k, ok)| ok.then_some(k))
        .collect())
}

/// A minimizer of `g` at a point, chosen by `(g, canonical form)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimizer {
    pub g: Rational,
    pub crg: Crg,
    pub form: CanonicalForm,
}

/// The least `g_K(p)` over `crgs`; ties go to the smallest canonical form.
pub fn min_g_over(crgs: &[Crg], p: &Rational) -> Result<Option<Minimizer>> {
    let scored = crgs
        .par_iter()
        .map(|k| {
            Ok(Minimizer {
                g: g_value(k, p)?.g,
                crg: k.clone(),
                form: k.canonical_form()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(scored
        .into_iter()
        .min_by(|a, b| a.g.cmp(&b.g).then_with(|| a.form.cmp(&b.form))))
}

/// Minimum of `g_K(p)` over enumerated `K ∈ K(F)` with at most `max_k`
/// vertices. This bounds the edit distance at `p` from above.
pub fn min_g_over_family(family: &ForbFamily, max_k: usize, p: &Rational) -> Result<Minimizer> {
    check_unit_interval(p)?;
    let members = family_members(family, max_k, Some(Side::of(p)))?;
    if members.is_empty() {
        return Err(Error::TrivialFamily);
    }
    Ok(min_g_over(&members, p)?.expect("nonempty"))
}
