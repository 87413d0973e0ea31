//! Canonical encodings of CRGs up to color-preserving isomorphism.
//!
//! Vertices are first split into cells by an isomorphism-invariant signature
//! (own color plus how many edges of each color go to vertices of each
//! color). The canonical form is the lexicographically smallest encoding over
//! every relabeling that respects the cell order, found by exhaustive
//! backtracking with prefix pruning.
//!
//! The encoding is `[k, vertex colors…, edge colors…]` with edges listed
//! column by column, `(0,1), (0,2), (1,2), (0,3), …`, so placing the vertex at
//! position `i` appends exactly the edges `(·, i)`. Leading with `k` makes the
//! order on forms sort smaller CRGs first.

use std::fmt;

use super::{Crg, EdgeColor, VertexColor};
use crate::error::Result;
use crate::limits::limits;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

fn vcode(c: VertexColor) -> u8 {
    match c {
        VertexColor::White => 0,
        VertexColor::Black => 1,
    }
}

fn ecode(c: EdgeColor) -> u8 {
    match c {
        EdgeColor::White => 0,
        EdgeColor::Black => 1,
        EdgeColor::Gray => 2,
    }
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative.
    pub fn to_crg(&self) -> Crg {
        let k = self.0[0] as usize;
        let vcolor = self.0[1..=k]
            .iter()
            .map(|&c| if c == 0 { VertexColor::White } else { VertexColor::Black })
            .collect();
        let edges = &self.0[k + 1..];
        Crg::from_fn(vcolor, |i, j| {
            // column-major index of (i, j), i < j
            match edges[j * (j - 1) / 2 + i] {
                0 => EdgeColor::White,
                1 => EdgeColor::Black,
                _ => EdgeColor::Gray,
            }
        })
        .expect("well-formed canonical form")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_crg().fmt(f)
    }
}

struct Search<'a> {
    crg: &'a Crg,
    /// For each position, the cell (set of vertices) it must be filled from.
    cell_of_pos: Vec<usize>,
    cells: Vec<Vec<usize>>,
    perm: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        let k = self.crg.order();
        if pos == k {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.current < *b,
            };
            if better {
                self.best = Some((self.current.clone(), self.perm.clone()));
            }
            return;
        }
        let cell = self.cell_of_pos[pos];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            let mark = self.current.len();
            for i in 0..pos {
                self.current.push(ecode(self.crg.edge_color(self.perm[i], v)));
            }
            let prune = match &self.best {
                Some((b, _)) => self.current[..] > b[..self.current.len()],
                None => false,
            };
            if !prune {
                self.used[v] = true;
                self.perm.push(v);
                self.run(pos + 1);
                self.perm.pop();
                self.used[v] = false;
            }
            self.current.truncate(mark);
        }
    }
}

impl Crg {
    /// Canonical form together with the relabeling `perm` (position `i` of
    /// the representative is vertex `perm[i]` of `self`).
    pub fn canonical_labeling(&self) -> Result<(CanonicalForm, Vec<usize>)> {
        let k = self.order();
        limits().check_crg(k)?;

        let signature = |v: usize| {
            let mut counts = [0u8; 6];
            for u in (0..k).filter(|&u| u != v) {
                counts[ecode(self.edge_color(u, v)) as usize * 2 + vcode(self.vertex_color(u)) as usize] += 1;
            }
            (vcode(self.vertex_color(v)), counts)
        };
        let mut keyed: Vec<_> = (0..k).map(|v| (signature(v), v)).collect();
        keyed.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut cell_of_pos = Vec::with_capacity(k);
        for (i, (sig, v)) in keyed.iter().enumerate() {
            if i == 0 || keyed[i - 1].0 != *sig {
                cells.push(Vec::new());
            }
            cells.last_mut().expect("pushed").push(*v);
            cell_of_pos.push(cells.len() - 1);
        }

        let mut prefix = vec![k as u8];
        prefix.extend(keyed.iter().map(|((c, _), _)| *c));
        let mut search = Search {
            crg: self,
            cell_of_pos,
            cells,
            perm: Vec::with_capacity(k),
            used: vec![false; k],
            current: prefix,
            best: None,
        };
        search.run(0);
        let (code, perm) = search.best.expect("at least one labeling");
        Ok((CanonicalForm(code), perm))
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        Ok(self.canonical_labeling()?.0)
    }

    /// The canonical representative of this CRG's isomorphism class.
    pub fn canonical(&self) -> Result<Crg> {
        Ok(self.canonical_form()?.to_crg())
    }

    pub fn is_isomorphic(&self, other: &Crg) -> Result<bool> {
        Ok(self.order() == other.order() && self.canonical_form()? == other.canonical_form()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crg(s: &str) -> Crg {
        s.parse().unwrap()
    }

    #[test]
    fn vertex_order_does_not_matter() {
        assert_eq!(
            crg("WB;g").canonical_form().unwrap(),
            crg("BW;g").canonical_form().unwrap()
        );
    }

    #[test]
    fn black_edge_position_does_not_matter() {
        let a = crg("WWWW;bggggg");
        let b = crg("WWWW;gggggb");
        let c = crg("WWWW;ggbggg");
        let fa = a.canonical_form().unwrap();
        assert_eq!(fa, b.canonical_form().unwrap());
        assert_eq!(fa, c.canonical_form().unwrap());
    }

    #[test]
    fn edge_colors_distinguish() {
        assert_ne!(
            Crg::k_wb(2, 0).unwrap().canonical_form().unwrap(),
            crg("WW;w").canonical_form().unwrap()
        );
    }

    #[test]
    fn representative_is_isomorphic_and_stable() {
        let k = crg("BWBW;wbgbwg");
        let (form, perm) = k.canonical_labeling().unwrap();
        let rep = form.to_crg();
        assert_eq!(rep, k.induced(&perm).unwrap());
        assert_eq!(rep.canonical_form().unwrap(), form);
    }

    #[test]
    fn smaller_crgs_sort_first() {
        let one = crg("B;").canonical_form().unwrap();
        let two = Crg::k_wb(2, 0).unwrap().canonical_form().unwrap();
        assert!(one < two);
    }
}
