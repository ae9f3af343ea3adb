//! Exact, certificate-producing solvers for the graph invariants the rest
//! of the crate reasons about: independence number, clique number,
//! chromatic number, degeneracy, and the largest complete minor.
//!
//! Every solver is exponential in the worst case, so each checks the input
//! size against a caller-supplied [`Limits`] value and refuses oversized
//! inputs with a [`LimitError`] instead of silently running forever.

mod coloring;
mod degeneracy;
mod independence;
mod minor;

pub use coloring::chromatic_number;
pub use degeneracy::degeneracy_order;
pub use independence::{clique_number, independence_number, independence_number_brute};
pub use minor::{hadwiger_number, has_clique_minor, verify_minor_embedding, MinorEmbedding};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Size caps for the exponential solvers. The defaults keep every call
/// comfortably under a second on commodity hardware; raise them explicitly
/// when you are prepared to wait.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Branch-and-bound independence / clique solver.
    pub max_alpha_exact: usize,
    /// Brute-force independence solver (cross-check only).
    pub max_alpha_brute: usize,
    /// Chromatic number search.
    pub max_chromatic: usize,
    /// Complete-minor search; never above 64 (one machine word).
    pub max_minor: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_alpha_exact: 40,
            max_alpha_brute: 20,
            max_chromatic: 20,
            max_minor: 16,
        }
    }
}

impl Limits {
    /// Permissive limits for testing on small inputs.
    pub fn unbounded_small() -> Self {
        Limits {
            max_alpha_exact: 64,
            max_alpha_brute: 30,
            max_chromatic: 64,
            max_minor: 64,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{operation}: graph on {n} vertices exceeds the configured limit of {limit}")]
pub struct LimitError {
    pub operation: &'static str,
    pub n: usize,
    pub limit: usize,
}

/// The four invariants the inequality checker consumes, plus witnesses for
/// the spot-checkable ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactStats {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub eta: usize,
    pub alpha_witness: crate::bitset::VertexSet,
    pub omega_witness: crate::bitset::VertexSet,
    pub chi_witness: Vec<usize>,
    pub eta_witness: MinorEmbedding,
}

/// Computes α, ω, χ, η with witnesses in one call.
pub fn compute_stats(g: &Graph, limits: &Limits) -> Result<ExactStats, LimitError> {
    let (alpha, alpha_witness) = independence_number(g, limits)?;
    let (omega, omega_witness) = clique_number(g, limits)?;
    let (chi, chi_witness) = chromatic_number(g, limits)?;
    let (eta, eta_witness) = hadwiger_number(g, limits)?;
    let stats = ExactStats {
        alpha,
        omega,
        chi,
        eta,
        alpha_witness,
        omega_witness,
        chi_witness,
        eta_witness,
    };
    debug_assert!(stats.omega <= stats.eta || g.n() == 0);
    debug_assert!(stats.omega <= stats.chi);
    debug_assert!(stats.eta <= g.n());
    debug_assert!(stats.alpha * stats.chi >= g.n());
    Ok(stats)
}
