//! Parameterised graph families: complete graphs, cycles, paths, the
//! Petersen graph, and seeded G(n, p) samples.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("{family} needs at least {min} vertices (got {got})")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            g.add_edge(i, j).expect("i < j < n");
        }
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooSmall {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0).expect("distinct, in range");
    Ok(g)
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v).expect("distinct, in range");
    }
    g
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes
/// i — i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("fixed edge list is valid")
}

/// Erdős–Rényi sample: each pair (u, v), u < v, drawn in lexicographic
/// order from a ChaCha8 stream, so a seed pins the graph exactly.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).expect("u < v < n");
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete(0).n(), 0);
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        assert_eq!(cycle(6).unwrap().edge_count(), 6);
        assert!(matches!(cycle(2), Err(GenerateError::TooSmall { .. })));

        let pet = petersen();
        assert_eq!((pet.n(), pet.edge_count()), (10, 15));
        assert!(pet.vertices().all(|v| pet.degree(v) == 3));
        assert!(pet.is_connected());
    }

    #[test]
    fn gnp_is_seed_deterministic() {
        let a = gnp(12, 0.4, 7).unwrap();
        let b = gnp(12, 0.4, 7).unwrap();
        assert_eq!(a, b);
        let c = gnp(12, 0.4, 8).unwrap();
        assert_ne!(a, c, "different seeds should disagree at n = 12");
    }

    #[test]
    fn gnp_extremes_and_validation() {
        assert_eq!(gnp(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gnp(6, 1.0, 1).unwrap(), complete(6));
        assert!(matches!(
            gnp(4, -0.1, 0),
            Err(GenerateError::InvalidProbability(_))
        ));
        assert!(matches!(
            gnp(4, f64::NAN, 0),
            Err(GenerateError::InvalidProbability(_))
        ));
    }
}
