//! Degeneracy and a degeneracy ordering.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Returns the degeneracy `d` and an elimination order in which every
/// vertex has at most `d` neighbours later in the order. Each round removes
/// the remaining vertex of minimum degree, smallest index first, so the
/// order is deterministic.
pub fn degeneracy_order(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut remaining = VertexSet::full(n);
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = remaining
            .iter()
            .min_by_key(|&v| degree[v])
            .expect("vertices remain");
        degeneracy = degeneracy.max(degree[v]);
        order.push(v);
        remaining.remove(v);
        for w in g.neighbors(v).intersection(&remaining).iter() {
            degree[w] -= 1;
        }
    }
    (degeneracy, order)
}
