//! Finite simple graphs on vertices `0..n`, stored as adjacency bitsets.

mod format;
mod invariants;
pub mod presets;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use format::{parse_graph_any, GraphJson};
pub use invariants::{CliqueStarParams, Cocoloring, GraphInvariants, SplitPartition};

/// Bitset over at most 64 vertices.
pub type VertexSet = u64;

/// Hard ceiling imposed by the bitset representation.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

pub(crate) fn bit(v: usize) -> VertexSet {
    1u64 << v
}

pub(crate) fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                cap: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list. Repeated pairs (in either order) are
    /// merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::EndpointOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| members(self.adj[u] >> u).map(move |d| (u, u + d)))
            .filter(|(u, v)| u != v)
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_vertices();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !bit(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `subset`, relabeled so that `subset[i]` becomes
    /// vertex `i`.
    pub fn induced(&self, subset: &[usize]) -> Result<Graph> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen: VertexSet = 0;
        for &v in subset {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            if seen & bit(v) != 0 {
                return Err(Error::InvalidParameters(format!(
                    "vertex {v} repeated in subset"
                )));
            }
            seen |= bit(v);
        }
        let mut g = Graph::empty(subset.len())?;
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        Ok(g)
    }

    pub fn induced_by_set(&self, set: VertexSet) -> Result<Graph> {
        let vs: Vec<usize> = members(set & self.all_vertices()).collect();
        self.induced(&vs)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| set & !bit(v) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| set & self.adj[v] == 0)
    }

    /// Whether `perm` (vertex `v` maps to `perm[v]`) preserves adjacency.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && (0..self.n).all(|u| {
                (u + 1..self.n).all(|v| self.has_edge(u, v) == self.has_edge(perm[u], perm[v]))
            })
    }

    /// Brute-force isomorphism test with degree pruning; intended for small
    /// graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da = self.degrees();
        let mut db = other.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut image = vec![usize::MAX; self.n];
        iso_extend(self, other, 0, &mut image, 0)
    }
}

fn iso_extend(a: &Graph, b: &Graph, v: usize, image: &mut [usize], used: VertexSet) -> bool {
    if v == a.n {
        return true;
    }
    for t in 0..b.n {
        if used & bit(t) != 0 || a.degree(v) != b.degree(t) {
            continue;
        }
        let ok = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(image[u], t));
        if ok {
            image[v] = t;
            if iso_extend(a, b, v + 1, image, used | bit(t)) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_has_no_edges() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.clique_number().unwrap(), 3);
        assert_eq!(g.complement(), Graph::empty(3).unwrap());
    }

    #[test]
    fn repeated_pairs_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn complement_of_star_is_triangle_plus_isolated() {
        let star = presets::star(4).unwrap();
        let expected = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(star.complement(), expected);
    }

    #[test]
    fn induced_identity_and_errors() {
        let g = presets::h9();
        let all: Vec<usize> = (0..9).collect();
        assert_eq!(g.induced(&all).unwrap(), g);
        assert_eq!(g.induced(&[]), Err(Error::EmptySubset));
        assert!(g.induced(&[0, 9]).is_err());
        assert!(g.induced(&[1, 1]).is_err());
    }

    #[test]
    fn h9_induced_cycles() {
        let g = presets::h9();
        let c5 = presets::cycle(5).unwrap();
        let c4 = presets::cycle(4).unwrap();
        assert!(g.induced(&[0, 2, 4, 5, 7]).unwrap().is_isomorphic(&c5));
        assert!(g.induced(&[1, 3, 6, 8]).unwrap().is_isomorphic(&c4));
    }

    #[test]
    fn isomorphism_distinguishes_c6_variants() {
        let short = presets::c6_short_diag();
        let long = presets::c6_long_diag();
        assert!(!short.is_isomorphic(&long));
        let relabeled = short.induced(&[3, 4, 5, 0, 1, 2]).unwrap();
        assert!(relabeled.is_isomorphic(&short));
    }
}
