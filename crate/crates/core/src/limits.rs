//! Global caps for the exhaustive searches.
//!
//! Every exact routine in this crate is exponential in some vertex count, so
//! each one refuses inputs above a cap instead of approximating. The caps
//! default to values that comfortably cover every instance of interest and
//! can be raised through [`install`] or the `EDL_MAX_K` environment variable.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_crg_order`].
pub const MAX_K_ENV: &str = "EDL_MAX_K";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph on which invariants (α, ω, χ, cocolorings) are computed.
    pub max_graph_order: usize,
    /// Largest pattern graph H accepted by the embedding search.
    pub max_pattern_order: usize,
    /// Largest CRG accepted by the QP, canonicalization and enumeration.
    pub max_crg_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_graph_order: 16,
            max_pattern_order: 12,
            max_crg_order: 10,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(k) = std::env::var(MAX_K_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_crg_order = k;
        }
        limits
    }

    pub(crate) fn check_graph(&self, n: usize) -> Result<()> {
        check("graph", n, self.max_graph_order)
    }

    pub(crate) fn check_pattern(&self, n: usize) -> Result<()> {
        check("pattern graph", n, self.max_pattern_order)
    }

    pub(crate) fn check_crg(&self, k: usize) -> Result<()> {
        check("CRG", k, self.max_crg_order)
    }
}

fn check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::TooLarge { what, size, cap })
    } else {
        Ok(())
    }
}

static LIMITS: OnceLock<Limits> = OnceLock::new();

/// Installs process-wide limits. Returns `false` if limits were already fixed
/// (either installed earlier or read by a prior computation).
pub fn install(limits: Limits) -> bool {
    LIMITS.set(limits).is_ok()
}

/// The active limits; the first call without a prior [`install`] reads the
/// environment.
pub fn limits() -> Limits {
    *LIMITS.get_or_init(Limits::from_env)
}
