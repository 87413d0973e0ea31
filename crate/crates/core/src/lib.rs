//! Exact computation of edit distance functions of hereditary graph
//! properties through colored regularity graphs (CRGs).
//!
//! The pieces fit together as follows:
//!
//! * [`graph`]: small simple graphs, their exact invariants and the named
//!   families (split graphs, clique-stars, H₉, C₆*).
//! * [`crg`]: CRGs, the matrix `M_K(p)`, `f_K(p)`, components, sub-CRGs and
//!   canonical forms.
//! * [`qp`]: the exact global minimum `g_K(p)` of `xᵀ M_K(p) x` over the
//!   simplex, and p-core testing.
//! * [`localization`]: the weighted-degree identities of p-cores.
//! * [`embedding`] and [`enumerate`]: the relation `H ↦ K`, membership in
//!   `K(F)`, and bounded enumeration of CRGs.
//! * [`edf`]: closed-form envelopes, envelopes computed from CRGs, and exact
//!   maximizers.
//!
//! All arithmetic on `p`, `g` and weights is exact ([`rational::Rational`]).

pub mod crg;
pub mod edf;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod limits;
pub mod localization;
pub mod qp;
pub mod rational;

pub use crg::{CanonicalForm, Crg, EdgeColor, VertexColor};
pub use embedding::{embeds, in_family, EmbedWitness, ForbFamily};
pub use error::{Error, Result};
pub use graph::Graph;
pub use qp::{g_value, is_p_core, GResult};
pub use rational::Rational;
