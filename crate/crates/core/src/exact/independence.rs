//! Exact maximum independent set and maximum clique.
//!
//! Both reduce to one solver: a branch-and-bound maximum-clique search over
//! 64-bit adjacency masks with a greedy-coloring upper bound, in the style
//! that small-graph clique solvers have converged on. An independent set is
//! a clique of the complement.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::{LimitError, Limits};

/// α(G) with a maximum independent set as witness.
pub fn independence_number(
    g: &Graph,
    limits: &Limits,
) -> Result<(usize, VertexSet), LimitError> {
    if g.n() > limits.max_alpha_exact.min(64) {
        return Err(LimitError {
            operation: "independence_number",
            n: g.n(),
            limit: limits.max_alpha_exact.min(64),
        });
    }
    let masks = g
        .complement()
        .adjacency_masks()
        .expect("n <= 64 checked above");
    let (size, best) = max_clique_masks(&masks, g.n());
    Ok((size, VertexSet::from_mask64(best)))
}

/// ω(G) with a maximum clique as witness. Shares the independence-number
/// solver (and its limit), being its complement.
pub fn clique_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet), LimitError> {
    if g.n() > limits.max_alpha_exact.min(64) {
        return Err(LimitError {
            operation: "clique_number",
            n: g.n(),
            limit: limits.max_alpha_exact.min(64),
        });
    }
    let masks = g.adjacency_masks().expect("n <= 64 checked above");
    let (size, best) = max_clique_masks(&masks, g.n());
    Ok((size, VertexSet::from_mask64(best)))
}

/// α(G) by enumerating all 2^n subsets. Exists to cross-check the
/// branch-and-bound solver, so it shares no code with it.
pub fn independence_number_brute(
    g: &Graph,
    limits: &Limits,
) -> Result<(usize, VertexSet), LimitError> {
    if g.n() > limits.max_alpha_brute.min(63) {
        return Err(LimitError {
            operation: "independence_number_brute",
            n: g.n(),
            limit: limits.max_alpha_brute.min(63),
        });
    }
    let masks = g.adjacency_masks().expect("n <= 63 checked above");
    let mut best = 0u64;
    let mut best_size = 0;
    for mask in 0..1u64 << g.n() {
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if independent && mask.count_ones() as usize > best_size {
            best = mask;
            best_size = mask.count_ones() as usize;
        }
    }
    Ok((best_size, VertexSet::from_mask64(best)))
}

/// Maximum clique over adjacency masks: branch and bound where candidates
/// are greedily colored and visited in reverse color order, pruning any
/// branch whose color bound cannot beat the incumbent.
pub(crate) fn max_clique_masks(masks: &[u64], n: usize) -> (usize, u64) {
    debug_assert!(n <= 64 && masks.len() == n);
    let mut search = CliqueSearch {
        masks,
        best_size: 0,
        best: 0,
    };
    let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    search.expand(all, 0, 0);
    (search.best_size, search.best)
}

struct CliqueSearch<'a> {
    masks: &'a [u64],
    best_size: usize,
    best: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, candidates: u64, current: u64, size: usize) {
        if candidates == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = current;
            }
            return;
        }
        // Greedy coloring: vertices in color class k can bound any clique
        // inside `candidates` by k, so visiting high colors first lets the
        // size + color <= best prune fire early.
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(candidates.count_ones() as usize);
        let mut uncolored = candidates;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut class = uncolored;
            while class != 0 {
                let v = class.trailing_zeros() as usize;
                let bit = 1u64 << v;
                order.push((v, color));
                uncolored &= !bit;
                class &= !bit & !self.masks[v];
            }
        }
        let mut remaining = candidates;
        for &(v, color) in order.iter().rev() {
            if size + color <= self.best_size {
                return;
            }
            let bit = 1u64 << v;
            self.expand(remaining & self.masks[v], current | bit, size + 1);
            remaining &= !bit;
        }
    }
}
