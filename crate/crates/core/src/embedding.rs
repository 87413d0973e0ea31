//! The embedding relation `H ↦ K` and membership in `K(F)`.
//!
//! A map `φ: V(H) → V(K)` (not necessarily injective) is an embedding when
//! every edge of `H` lands on a black vertex or a black/gray edge, and every
//! non-edge lands on a white vertex or a white/gray edge. The search assigns
//! `H`'s vertices in order of decreasing degree and keeps, for every
//! unassigned vertex, the bitset of targets still compatible with all
//! assignments made so far; an empty domain triggers backtracking.

use serde::{Deserialize, Serialize};

use crate::crg::{Crg, EdgeColor, VertexColor};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::limits;

/// `assignment[h]` is the CRG vertex that `h` maps to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedWitness {
    pub assignment: Vec<usize>,
}

impl EmbedWitness {
    /// Re-checks every pair of `h` against `k`.
    pub fn is_valid(&self, h: &Graph, k: &Crg) -> bool {
        let phi = &self.assignment;
        phi.len() == h.order()
            && phi.iter().all(|&t| t < k.order())
            && (0..h.order()).all(|a| {
                (a + 1..h.order()).all(|b| pair_ok(k, phi[a], phi[b], h.has_edge(a, b)))
            })
    }

    /// Preimages of each CRG vertex.
    pub fn classes(&self, k: &Crg) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); k.order()];
        for (h, &t) in self.assignment.iter().enumerate() {
            out[t].push(h);
        }
        out
    }
}

fn pair_ok(k: &Crg, s: usize, t: usize, edge: bool) -> bool {
    if s == t {
        let want = if edge { VertexColor::Black } else { VertexColor::White };
        k.vertex_color(s) == want
    } else {
        match k.edge_color(s, t) {
            EdgeColor::Gray => true,
            EdgeColor::Black => edge,
            EdgeColor::White => !edge,
        }
    }
}

/// For each target `t`: the targets a neighbor (resp. non-neighbor) of a
/// vertex placed on `t` may still use.
struct Compat {
    if_edge: Vec<u32>,
    if_nonedge: Vec<u32>,
}

impl Compat {
    fn new(k: &Crg) -> Self {
        let n = k.order();
        let mask = |t: usize, edge: bool| {
            (0..n)
                .filter(|&s| pair_ok(k, s, t, edge))
                .fold(0u32, |m, s| m | 1 << s)
        };
        Compat {
            if_edge: (0..n).map(|t| mask(t, true)).collect(),
            if_nonedge: (0..n).map(|t| mask(t, false)).collect(),
        }
    }
}

struct Search<'a> {
    h: &'a Graph,
    compat: Compat,
    order: Vec<usize>,
    assignment: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, domains: &[u32]) -> bool {
        let Some(&v) = self.order.get(idx) else {
            return true;
        };
        let mut options = domains[v];
        while options != 0 {
            let t = options.trailing_zeros() as usize;
            options &= options - 1;
            let mut next = domains.to_vec();
            let mut dead = false;
            for &u in &self.order[idx + 1..] {
                let allowed = if self.h.has_edge(u, v) {
                    self.compat.if_edge[t]
                } else {
                    self.compat.if_nonedge[t]
                };
                next[u] &= allowed;
                if next[u] == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.assignment[v] = t;
            if self.run(idx + 1, &next) {
                return true;
            }
        }
        false
    }
}

/// An embedding of `h` into `k`, if one exists.
pub fn embeds(h: &Graph, k: &Crg) -> Result<Option<EmbedWitness>> {
    let caps = limits();
    caps.check_pattern(h.order())?;
    caps.check_crg(k.order())?;
    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let all = if k.order() == 32 { u32::MAX } else { (1u32 << k.order()) - 1 };
    let domains = vec![all; h.order()];
    let mut search = Search {
        h,
        compat: Compat::new(k),
        order,
        assignment: vec![0; h.order()],
    };
    Ok(if search.run(0, &domains) {
        Some(EmbedWitness {
            assignment: search.assignment,
        })
    } else {
        None
    })
}

/// A finite list of forbidden graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Graph>", into = "Vec<Graph>")]
pub struct ForbFamily {
    graphs: Vec<Graph>,
}

impl ForbFamily {
    pub fn new(graphs: Vec<Graph>) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(ForbFamily { graphs })
    }

    pub fn single(h: Graph) -> Self {
        ForbFamily { graphs: vec![h] }
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// The family of complements, describing the complementary property.
    pub fn complement(&self) -> Self {
        ForbFamily {
            graphs: self.graphs.iter().map(Graph::complement).collect(),
        }
    }
}

impl TryFrom<Vec<Graph>> for ForbFamily {
    type Error = Error;

    fn try_from(graphs: Vec<Graph>) -> Result<Self> {
        ForbFamily::new(graphs)
    }
}

impl From<ForbFamily> for Vec<Graph> {
    fn from(f: ForbFamily) -> Self {
        f.graphs
    }
}

/// Whether `k ∈ K(F)`: no forbidden graph embeds in `k`.
pub fn in_family(k: &Crg, family: &ForbFamily) -> Result<bool> {
    for h in family.graphs() {
        if embeds(h, k)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crg::presets as crgs;
    use crate::graph::presets;

    fn crg(s: &str) -> Crg {
        s.parse().unwrap()
    }

    #[test]
    fn h9_into_k21_uses_two_independent_sets_and_a_clique() {
        let h = presets::h9();
        let k = Crg::k_wb(2, 1).unwrap();
        let w = embeds(&h, &k).unwrap().expect("H9 embeds in K(2,1)");
        assert!(w.is_valid(&h, &k));
        let classes = w.classes(&k);
        let mut whites: Vec<_> = classes[..2].to_vec();
        whites.sort();
        assert_eq!(whites, vec![vec![1, 4, 7], vec![2, 5, 8]]);
        assert_eq!(classes[2], vec![0, 3, 6]);
    }

    #[test]
    fn h9_into_k12_is_valid() {
        let h = presets::h9();
        let k = Crg::k_wb(1, 2).unwrap();
        let w = embeds(&h, &k).unwrap().expect("H9 embeds in K(1,2)");
        assert!(w.is_valid(&h, &k));
    }

    #[test]
    fn h9_avoids_the_upper_bound_crgs() {
        let h = presets::h9();
        for k in [crgs::k1(), crgs::k2(), crgs::k3(), crgs::k4()] {
            assert!(embeds(&h, &k).unwrap().is_none(), "{k}");
        }
    }

    #[test]
    fn single_black_vertex_takes_exactly_cliques() {
        let b = crg("B;");
        assert!(embeds(&Graph::complete(5).unwrap(), &b).unwrap().is_some());
        assert!(embeds(&presets::star(3).unwrap(), &b).unwrap().is_none());
        assert!(embeds(&Graph::complete(2).unwrap(), &b).unwrap().is_some());
    }

    #[test]
    fn family_membership() {
        let f = ForbFamily::single(presets::h9());
        assert!(in_family(&Crg::k_wb(3, 0).unwrap(), &f).unwrap());
        assert!(in_family(&Crg::k_wb(0, 2).unwrap(), &f).unwrap());
        assert!(!in_family(&Crg::k_wb(2, 1).unwrap(), &f).unwrap());
    }

    #[test]
    fn family_json_and_errors() {
        let f: ForbFamily = serde_json::from_str(r#"[{"n":3,"edges":[[0,1],[1,2],[0,2]]}]"#).unwrap();
        assert_eq!(f.graphs()[0], Graph::complete(3).unwrap());
        assert!(serde_json::from_str::<ForbFamily>("[]").is_err());
        assert_eq!(ForbFamily::new(vec![]), Err(Error::EmptyFamily));
    }

    #[test]
    fn caps_are_enforced() {
        let big = Graph::empty(13).unwrap();
        assert!(matches!(
            embeds(&big, &crg("W;")),
            Err(Error::TooLarge { .. })
        ));
    }
}
