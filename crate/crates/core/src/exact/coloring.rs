//! Exact chromatic number by iterative-deepening backtracking.

use crate::graph::Graph;

use super::independence::max_clique_masks;
use super::{LimitError, Limits};

/// χ(G) with a proper coloring (colors `0..χ`) as witness. Tries k-colorings
/// for k starting at the clique number, so the first success is optimal.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>), LimitError> {
    let n = g.n();
    if n > limits.max_chromatic.min(64) {
        return Err(LimitError {
            operation: "chromatic_number",
            n,
            limit: limits.max_chromatic.min(64),
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let masks = g.adjacency_masks().expect("n <= 64 checked above");
    let (lower, _) = max_clique_masks(&masks, n);

    // branch on high-degree vertices first; ties toward the smaller index
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    for k in lower..=n {
        let mut colors = vec![usize::MAX; n];
        if try_color(g, &order, &mut colors, 0, 0, k) {
            debug_assert!(g.is_proper_coloring(&colors));
            return Ok((k, colors));
        }
    }
    unreachable!("every graph is n-colorable")
}

/// Backtracking k-colorability. New colors are introduced one at a time
/// (a vertex may use at most `max_used + 1`), which quotients out color
/// permutations.
fn try_color(
    g: &Graph,
    order: &[usize],
    colors: &mut [usize],
    position: usize,
    max_used: usize,
    k: usize,
) -> bool {
    let Some(&v) = order.get(position) else {
        return true;
    };
    let cap = k.min(max_used + 1);
    for c in 0..cap {
        if g.neighbors(v).iter().any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        let next_max = max_used.max(c + 1);
        if try_color(g, order, colors, position + 1, next_max, k) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
