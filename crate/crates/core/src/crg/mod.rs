//! Colored regularity graphs.
//!
//! A CRG is a complete graph whose vertices are white or black and whose
//! edges are white, black or gray. Vertices are `0..k`; edge colors are
//! stored for the upper triangle in row-major order, which is also the order
//! of the text form `WWB;wgg`.

mod canonical;
pub mod presets;

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{check_unit_interval, Rational};

pub use canonical::CanonicalForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexColor {
    White,
    Black,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeColor {
    White,
    Black,
    Gray,
}

impl VertexColor {
    pub fn swapped(self) -> Self {
        match self {
            VertexColor::White => VertexColor::Black,
            VertexColor::Black => VertexColor::White,
        }
    }

    fn symbol(self) -> char {
        match self {
            VertexColor::White => 'W',
            VertexColor::Black => 'B',
        }
    }
}

impl EdgeColor {
    pub fn swapped(self) -> Self {
        match self {
            EdgeColor::White => EdgeColor::Black,
            EdgeColor::Black => EdgeColor::White,
            EdgeColor::Gray => EdgeColor::Gray,
        }
    }

    fn symbol(self) -> char {
        match self {
            EdgeColor::White => 'w',
            EdgeColor::Black => 'b',
            EdgeColor::Gray => 'g',
        }
    }
}

/// Which of `p`, `1 - p`, `0` a matrix position holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Weight {
    P,
    OneMinusP,
    Zero,
}

impl From<VertexColor> for Weight {
    fn from(c: VertexColor) -> Self {
        match c {
            VertexColor::White => Weight::P,
            VertexColor::Black => Weight::OneMinusP,
        }
    }
}

impl From<EdgeColor> for Weight {
    fn from(c: EdgeColor) -> Self {
        match c {
            EdgeColor::White => Weight::P,
            EdgeColor::Black => Weight::OneMinusP,
            EdgeColor::Gray => Weight::Zero,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Crg {
    vcolor: Vec<VertexColor>,
    ecolor: Vec<EdgeColor>,
}

pub(crate) fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn pair_index(k: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

impl Crg {
    /// Builds a CRG from per-vertex colors and upper-triangle edge colors in
    /// row-major order `(0,1), (0,2), …, (0,k-1), (1,2), …`.
    pub fn new(vcolor: Vec<VertexColor>, ecolor: Vec<EdgeColor>) -> Result<Crg> {
        let expected = pair_count(vcolor.len());
        if vcolor.is_empty() || ecolor.len() != expected {
            return Err(Error::TableSize {
                vertices: vcolor.len(),
                expected,
                found: ecolor.len(),
            });
        }
        Ok(Crg { vcolor, ecolor })
    }

    /// Builds a CRG from a vertex coloring and a symmetric edge-color lookup.
    pub fn from_fn(
        vcolor: Vec<VertexColor>,
        mut edge: impl FnMut(usize, usize) -> EdgeColor,
    ) -> Result<Crg> {
        let k = vcolor.len();
        let mut ecolor = Vec::with_capacity(pair_count(k));
        for i in 0..k {
            for j in i + 1..k {
                ecolor.push(edge(i, j));
            }
        }
        Crg::new(vcolor, ecolor)
    }

    /// `K(w, b)`: `w` white then `b` black vertices, every edge gray.
    pub fn k_wb(w: usize, b: usize) -> Result<Crg> {
        let mut vcolor = vec![VertexColor::White; w];
        vcolor.extend(std::iter::repeat_n(VertexColor::Black, b));
        let pairs = pair_count(w + b);
        Crg::new(vcolor, vec![EdgeColor::Gray; pairs])
    }

    pub fn order(&self) -> usize {
        self.vcolor.len()
    }

    pub fn vertex_color(&self, v: usize) -> VertexColor {
        self.vcolor[v]
    }

    pub fn vertex_colors(&self) -> &[VertexColor] {
        &self.vcolor
    }

    pub fn edge_colors(&self) -> &[EdgeColor] {
        &self.ecolor
    }

    /// Color of the edge `ij`; `i != j`.
    pub fn edge_color(&self, i: usize, j: usize) -> EdgeColor {
        debug_assert_ne!(i, j);
        self.ecolor[pair_index(self.order(), i, j)]
    }

    pub(crate) fn weight(&self, i: usize, j: usize) -> Weight {
        if i == j {
            self.vcolor[i].into()
        } else {
            self.edge_color(i, j).into()
        }
    }

    pub fn count_vertices(&self, c: VertexColor) -> usize {
        self.vcolor.iter().filter(|&&v| v == c).count()
    }

    pub fn count_edges(&self, c: EdgeColor) -> usize {
        self.ecolor.iter().filter(|&&e| e == c).count()
    }

    pub fn is_all_gray(&self) -> bool {
        self.ecolor.iter().all(|&e| e == EdgeColor::Gray)
    }

    /// Swaps black and white on vertices and edges; gray is fixed.
    pub fn complement(&self) -> Crg {
        Crg {
            vcolor: self.vcolor.iter().map(|c| c.swapped()).collect(),
            ecolor: self.ecolor.iter().map(|c| c.swapped()).collect(),
        }
    }

    /// Sub-CRG on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Crg> {
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Crg::from_fn(
            vertices.iter().map(|&v| self.vcolor[v]).collect(),
            |i, j| self.edge_color(vertices[i], vertices[j]),
        )
    }

    /// All sub-CRGs on nonempty proper vertex subsets, in increasing order of
    /// the subset bitmask.
    pub fn sub_crgs(&self) -> impl Iterator<Item = Crg> + '_ {
        let k = self.order();
        let full: u64 = (1u64 << k) - 1;
        (1..full).map(move |mask| {
            let vs: Vec<usize> = (0..k).filter(|&v| mask >> v & 1 == 1).collect();
            self.induced(&vs).expect("nonempty in-range subset")
        })
    }

    /// Vertex sets of the components: connected components of the relation
    /// "joined by a non-gray edge". Each set is sorted; sets are ordered by
    /// their smallest vertex.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let k = self.order();
        let mut label = vec![usize::MAX; k];
        let mut sets = Vec::new();
        for start in 0..k {
            if label[start] != usize::MAX {
                continue;
            }
            let id = sets.len();
            let mut stack = vec![start];
            let mut set = Vec::new();
            label[start] = id;
            while let Some(v) = stack.pop() {
                set.push(v);
                for (u, slot) in label.iter_mut().enumerate() {
                    if u != v && *slot == usize::MAX && self.edge_color(u, v) != EdgeColor::Gray {
                        *slot = id;
                        stack.push(u);
                    }
                }
            }
            set.sort_unstable();
            sets.push(set);
        }
        sets
    }

    pub fn components(&self) -> Vec<Crg> {
        self.component_sets()
            .iter()
            .map(|s| self.induced(s).expect("component is nonempty"))
            .collect()
    }

    /// `M_K(p)`: `p` on white vertices and edges, `1 - p` on black ones, `0`
    /// on gray edges.
    pub fn m_matrix(&self, p: &Rational) -> Result<MMatrix> {
        check_unit_interval(p)?;
        let k = self.order();
        let q = Rational::one() - p;
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(match self.weight(i, j) {
                    Weight::P => p.clone(),
                    Weight::OneMinusP => q.clone(),
                    Weight::Zero => Rational::zero(),
                });
            }
        }
        Ok(MMatrix { k, entries })
    }

    /// `f_K(p)`, the quadratic form at the uniform weighting.
    pub fn f_value(&self, p: &Rational) -> Result<Rational> {
        check_unit_interval(p)?;
        let k = self.order() as i64;
        let white = self.count_vertices(VertexColor::White) + 2 * self.count_edges(EdgeColor::White);
        let black = self.count_vertices(VertexColor::Black) + 2 * self.count_edges(EdgeColor::Black);
        let q = Rational::one() - p;
        let total = p * Rational::from_integer(white.into()) + q * Rational::from_integer(black.into());
        Ok(total / Rational::from_integer((k * k).into()))
    }

    /// Weighted gray/white/black degrees of `v` under `x`; `v`'s own weight
    /// is counted in the class of its own color.
    pub fn degree_sums(&self, x: &[Rational], v: usize) -> Result<DegreeSums> {
        let k = self.order();
        if x.len() != k {
            return Err(Error::WeightLength {
                expected: k,
                found: x.len(),
            });
        }
        if v >= k {
            return Err(Error::VertexOutOfRange { vertex: v, order: k });
        }
        let mut d = DegreeSums {
            gray: Rational::zero(),
            white: Rational::zero(),
            black: Rational::zero(),
        };
        for (u, xu) in x.iter().enumerate() {
            let slot = match self.weight(u, v) {
                Weight::P => &mut d.white,
                Weight::OneMinusP => &mut d.black,
                Weight::Zero => &mut d.gray,
            };
            *slot += xu;
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSums {
    pub gray: Rational,
    pub white: Rational,
    pub black: Rational,
}

/// `M_K(p)` as a dense row-major `k × k` array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MMatrix {
    k: usize,
    entries: Vec<Rational>,
}

impl MMatrix {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.k + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.k)
    }

    /// `xᵀ M x`.
    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (i, row) in self.rows().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if !m.is_zero() {
                    total += m * &x[i] * &x[j];
                }
            }
        }
        total
    }
}

impl fmt::Display for Crg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: String = self.vcolor.iter().map(|c| c.symbol()).collect();
        let e: String = self.ecolor.iter().map(|c| c.symbol()).collect();
        write!(f, "{v};{e}")
    }
}

impl FromStr for Crg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Crg> {
        let s = s.trim();
        let (v, e) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("CRG `{s}`: expected `<vertex colors>;<edge colors>`")))?;
        let vcolor = v
            .trim()
            .chars()
            .map(|c| match c {
                'W' => Ok(VertexColor::White),
                'B' => Ok(VertexColor::Black),
                _ => Err(Error::Parse(format!("CRG `{s}`: bad vertex color `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let ecolor = e
            .trim()
            .chars()
            .map(|c| match c {
                'w' => Ok(EdgeColor::White),
                'b' => Ok(EdgeColor::Black),
                'g' => Ok(EdgeColor::Gray),
                _ => Err(Error::Parse(format!("CRG `{s}`: bad edge color `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Crg::new(vcolor, ecolor)
    }
}

impl TryFrom<String> for Crg {
    type Error = Error;

    fn try_from(s: String) -> Result<Crg> {
        s.parse()
    }
}

impl From<Crg> for String {
    fn from(k: Crg) -> String {
        k.to_string()
    }
}
