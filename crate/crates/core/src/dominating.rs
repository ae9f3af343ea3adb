//! Connected dominating sets paired with independent subsets.
//!
//! For a connected graph the construction grows a set `D` from a start
//! vertex by repeatedly adopting the smallest vertex `v` at distance
//! exactly 2 from `D` together with `v`'s smallest neighbour at distance 1.
//! Each round adds two vertices to `D` and one to an independent subset
//! `S ⊆ D`, so `|D| = 2|S| − 1` throughout; the loop ends once every vertex
//! is within distance 1 of `D`, i.e. `D` dominates. `D` stays connected
//! because each adopted pair attaches to `D` through the distance-1
//! neighbour, and `S` stays independent because a new `v` is at distance 2
//! from everything already in `D ⊇ S`.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingPair {
    /// Connected dominating set.
    pub dominating: VertexSet,
    /// Independent subset of `dominating` with `|D| = 2|S| − 1`.
    pub independent: VertexSet,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominatingError {
    #[error("the construction needs at least one vertex")]
    EmptyGraph,
    #[error("the graph is disconnected; run the construction per component")]
    Disconnected,
    #[error("start vertex {start} is out of range for {n} vertices")]
    StartOutOfRange { start: usize, n: usize },
}

/// Builds a connected dominating pair, starting from `start` (default:
/// vertex 0). All ties break toward the smallest vertex index, so the
/// result is a pure function of the graph and the start vertex.
pub fn connected_dominating_pair(
    g: &Graph,
    start: Option<usize>,
) -> Result<DominatingPair, DominatingError> {
    let n = g.n();
    if n == 0 {
        return Err(DominatingError::EmptyGraph);
    }
    let start = start.unwrap_or(0);
    if start >= n {
        return Err(DominatingError::StartOutOfRange { start, n });
    }
    if !g.is_connected() {
        return Err(DominatingError::Disconnected);
    }

    let mut dominating = VertexSet::singleton(start);
    let mut independent = VertexSet::singleton(start);
    loop {
        let dist = g.bfs_distances(&dominating);
        let Some(v) = (0..n).find(|&v| dist[v] == 2) else {
            // With no vertex at distance 2, connectivity leaves nothing at
            // distance 3 or more either: a shortest path from D to a far
            // vertex would pass through one at exactly 2.
            assert!(
                dist.iter().all(|&d| d <= 1),
                "no distance-2 vertex, yet some vertex is undominated"
            );
            break;
        };
        let w = g
            .neighbors(v)
            .iter()
            .find(|&w| dist[w] == 1)
            .expect("a distance-2 vertex has a distance-1 neighbour");
        dominating.insert(v);
        dominating.insert(w);
        independent.insert(v);
    }

    let pair = DominatingPair {
        dominating,
        independent,
    };
    debug_assert!(verify_dominating_pair(g, &pair));
    Ok(pair)
}

/// Checks every invariant the construction promises: `S ⊆ D`, `D` nonempty,
/// connected, and dominating, `S` independent, and `|D| = 2|S| − 1`.
pub fn verify_dominating_pair(g: &Graph, pair: &DominatingPair) -> bool {
    let d = &pair.dominating;
    let s = &pair.independent;
    if d.is_empty() || !s.is_subset_of(d) {
        return false;
    }
    if d.iter().any(|v| v >= g.n()) {
        return false;
    }
    if d.len() != 2 * s.len() - 1 {
        return false;
    }
    let (induced, _) = g.induced_subgraph(d);
    if !induced.is_connected() {
        return false;
    }
    if g.bfs_distances(d).iter().any(|&dist| dist > 1) {
        return false;
    }
    g.is_independent_set(s)
}
