//! Exact invariants by exhaustive search: clique and independence numbers,
//! chromatic and clique-cover numbers, cocolorings, the binary chromatic
//! number, and the split / clique-star recognizers.

use serde::{Deserialize, Serialize};

use super::{bit, members, Graph, VertexSet};
use crate::error::Result;
use crate::limits::limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub cochi: usize,
    pub chib: usize,
}

/// A partition of the vertex set into `independent_sets.len()` independent
/// sets and `cliques.len()` cliques. Some parts may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocoloring {
    pub independent_sets: Vec<Vec<usize>>,
    pub cliques: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Parameters `(ω; a₀, a₁, …, a_ω)` of a clique-star. `a[0]` counts the
/// isolated vertices of the independent side; `a[i]` for `i ≥ 1` is one less
/// than the number of leaves owned by the `i`-th clique vertex. The leaf
/// counts are listed in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueStarParams {
    pub omega: usize,
    pub a: Vec<usize>,
}

impl CliqueStarParams {
    pub fn new(omega: usize, a: Vec<usize>) -> Self {
        CliqueStarParams { omega, a }
    }

    /// Number of vertices of the described graph.
    pub fn order(&self) -> usize {
        self.omega + self.a[0] + self.a[1..].iter().map(|x| x + 1).sum::<usize>()
    }

    pub fn leaf_surplus(&self) -> usize {
        self.a.iter().sum()
    }
}

impl Graph {
    fn check_size(&self) -> Result<()> {
        limits().check_graph(self.n)
    }

    pub fn max_clique(&self) -> Result<Vec<usize>> {
        self.check_size()?;
        let mut best = 0;
        max_clique_rec(self, 0, self.all_vertices(), &mut best);
        Ok(members(best).collect())
    }

    pub fn clique_number(&self) -> Result<usize> {
        Ok(self.max_clique()?.len())
    }

    pub fn independence_number(&self) -> Result<usize> {
        self.complement().clique_number()
    }

    pub fn chromatic_number(&self) -> Result<usize> {
        let lower = self.clique_number()?;
        Ok((lower..=self.n)
            .find(|&k| self.cocoloring_unchecked(k, 0).is_some())
            .unwrap_or(self.n))
    }

    pub fn clique_cover_number(&self) -> Result<usize> {
        self.complement().chromatic_number()
    }

    /// A partition into `w` independent sets and `b` cliques, if one exists.
    pub fn cocoloring(&self, w: usize, b: usize) -> Result<Option<Cocoloring>> {
        self.check_size()?;
        Ok(self.cocoloring_unchecked(w, b))
    }

    pub fn cocoloring_exists(&self, w: usize, b: usize) -> Result<bool> {
        Ok(self.cocoloring(w, b)?.is_some())
    }

    fn cocoloring_unchecked(&self, w: usize, b: usize) -> Option<Cocoloring> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut search = CocolorSearch {
            g: self,
            order: &order,
            indep: vec![0; w],
            cliques: vec![0; b],
        };
        if search.run(0) {
            Some(Cocoloring {
                independent_sets: search.indep.iter().map(|&s| members(s).collect()).collect(),
                cliques: search.cliques.iter().map(|&s| members(s).collect()).collect(),
            })
        } else {
            None
        }
    }

    /// One more than the largest `w + b` for which no `(w, b)`-cocoloring
    /// exists.
    pub fn binary_chromatic_number(&self) -> Result<usize> {
        self.check_size()?;
        // Failure is downward closed in (w, b), and every (w, b) with
        // w + b = n succeeds with singleton parts.
        for s in (0..self.n).rev() {
            if (0..=s).any(|w| self.cocoloring_unchecked(w, s - w).is_none()) {
                return Ok(s + 1);
            }
        }
        Ok(1)
    }

    pub fn invariants(&self) -> Result<GraphInvariants> {
        Ok(GraphInvariants {
            alpha: self.independence_number()?,
            omega: self.clique_number()?,
            chi: self.chromatic_number()?,
            cochi: self.clique_cover_number()?,
            chib: self.binary_chromatic_number()?,
        })
    }

    /// A clique / independent-set partition, found from the degree sequence
    /// (Hammer–Simeone): the `m` highest-degree vertices form the clique.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let deg: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let m = (0..self.n).filter(|&i| deg[i] >= i).count();
        let clique_set: VertexSet = order[..m].iter().fold(0, |s, &v| s | bit(v));
        let rest = self.all_vertices() & !clique_set;
        if self.is_clique(clique_set) && self.is_independent(rest) {
            Some(SplitPartition {
                clique: members(clique_set).collect(),
                independent: members(rest).collect(),
            })
        } else {
            None
        }
    }

    pub fn is_split(&self) -> bool {
        self.split_partition().is_some()
    }

    /// Clique-star parameters, trying every clique `W` with `|W| ≥ 2` whose
    /// complement is independent.
    pub fn clique_star_params(&self) -> Option<CliqueStarParams> {
        self.split_partition()?;
        let all = self.all_vertices();
        let mut found = None;
        each_clique(self, 0, all, &mut |w_set| {
            if w_set.count_ones() < 2 {
                return false;
            }
            let a_set = all & !w_set;
            if !self.is_independent(a_set) {
                return false;
            }
            let mut claimed: VertexSet = 0;
            let mut leaves = Vec::new();
            for w in members(w_set) {
                let own = self.adj[w] & a_set;
                if own == 0 || own & claimed != 0 {
                    return false;
                }
                claimed |= own;
                leaves.push(own.count_ones() as usize - 1);
            }
            leaves.sort_unstable_by(|x, y| y.cmp(x));
            let mut a = vec![(a_set & !claimed).count_ones() as usize];
            a.extend(leaves);
            found = Some(CliqueStarParams::new(w_set.count_ones() as usize, a));
            true
        });
        found
    }
}

fn max_clique_rec(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while candidates != 0 {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !bit(v);
        max_clique_rec(g, current | bit(v), candidates & g.adj[v], best);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

/// Visits every clique (including the empty one) until `visit` returns true.
fn each_clique(
    g: &Graph,
    current: VertexSet,
    candidates: VertexSet,
    visit: &mut impl FnMut(VertexSet) -> bool,
) -> bool {
    if visit(current) {
        return true;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= !bit(v);
        if each_clique(g, current | bit(v), rest & g.adj[v], visit) {
            return true;
        }
    }
    false
}

struct CocolorSearch<'a> {
    g: &'a Graph,
    order: &'a [usize],
    indep: Vec<VertexSet>,
    cliques: Vec<VertexSet>,
}

impl CocolorSearch<'_> {
    fn run(&mut self, idx: usize) -> bool {
        let Some(&v) = self.order.get(idx) else {
            return true;
        };
        let nbrs = self.g.adj[v];
        // An empty part may be opened, but only the first empty part of each
        // kind: the parts are interchangeable.
        let mut opened_empty = false;
        for i in 0..self.indep.len() {
            let part = self.indep[i];
            if part == 0 {
                if opened_empty {
                    continue;
                }
                opened_empty = true;
            }
            if part & nbrs == 0 {
                self.indep[i] |= bit(v);
                if self.run(idx + 1) {
                    return true;
                }
                self.indep[i] &= !bit(v);
            }
        }
        let mut opened_empty = false;
        for i in 0..self.cliques.len() {
            let part = self.cliques[i];
            if part == 0 {
                if opened_empty {
                    continue;
                }
                opened_empty = true;
            }
            if part & !nbrs == 0 {
                self.cliques[i] |= bit(v);
                if self.run(idx + 1) {
                    return true;
                }
                self.cliques[i] &= !bit(v);
            }
        }
        false
    }
}
