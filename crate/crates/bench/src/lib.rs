//! Shared instance builders for the criterion benches.

use etabound::generate;
use etabound::Graph;

/// Seeded G(n, p) instances used across benchmark groups, so that every
/// group measures the same graphs run to run.
pub fn gnp_suite(n: usize, p: f64, count: usize) -> Vec<Graph> {
    (0..count)
        .map(|i| generate::gnp(n, p, 0xB000 + i as u64).expect("valid p"))
        .collect()
}
