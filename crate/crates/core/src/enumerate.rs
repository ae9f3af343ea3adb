//! Isomorph-free enumeration of small graphs, via a canonical labelling.
//!
//! A graph on `n <= 11` vertices is identified by a 55-bit code: the upper
//! triangle of its adjacency matrix in column-major pair order. The
//! canonical code of a graph is the minimum code over a pruned set of
//! vertex orderings, computed by iterated degree-refinement plus
//! individualization — small-scale machinery in the spirit of practical
//! graph-isomorphism tools, entirely adequate at this size.
//!
//! Enumeration proceeds by augmentation: every canonical graph on `m`
//! vertices is extended by one vertex with every possible attachment, and
//! the canonical codes of the results are deduplicated.

use crate::graph::Graph;
use rayon::prelude::*;

/// Codes are one `u64`: C(11, 2) = 55 bits.
pub const MAX_ENUM_N: usize = 11;

/// Refinement colors stay below 2 × MAX_ENUM_N; count buckets are sized to
/// hold any color value that can appear mid-pass.
const COLOR_BUCKETS: usize = 2 * MAX_ENUM_N + 2;

/// Bit position of the pair `(i, j)`, `i < j`: pairs in column-major order
/// (0,1), (0,2), (1,2), (0,3), ...
fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// The code of a graph as labelled (no canonicalization).
pub fn graph_code(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_ENUM_N, "codes hold at most {MAX_ENUM_N} vertices");
    let mut code = 0u64;
    for (u, v) in g.edges() {
        code |= 1 << pair_bit(u, v);
    }
    code
}

pub fn code_to_graph(n: usize, code: u64) -> Graph {
    assert!(n <= MAX_ENUM_N);
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                g.add_edge(i, j).expect("i < j < n");
            }
        }
    }
    g
}

fn code_to_masks(n: usize, code: u64) -> Vec<u64> {
    let mut masks = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
        }
    }
    masks
}

/// Canonical code: equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_ENUM_N, "codes hold at most {MAX_ENUM_N} vertices");
    let masks: Vec<u64> = g.vertices().map(|v| {
        g.neighbors(v).as_mask64().expect("n <= 11")
    }).collect();
    canonical_code_masks(&masks)
}

fn canonical_code_masks(masks: &[u64]) -> u64 {
    let n = masks.len();
    if n <= 1 {
        return 0;
    }
    let mut colors = vec![0u8; n];
    refine(masks, &mut colors);
    let mut best = None;
    search(masks, &colors, &mut best);
    best.expect("search visits at least one discrete coloring")
}

/// Refines a coloring to a fixpoint: each pass recolors vertices by their
/// (color, multiset of neighbour colors) signature, ranked in sorted order.
/// Equivariant under isomorphism, since signatures never mention labels.
fn refine(masks: &[u64], colors: &mut [u8]) {
    let n = masks.len();
    let mut cells = {
        let mut seen = [false; COLOR_BUCKETS];
        for &c in colors.iter() {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    };
    loop {
        let mut sigs: Vec<(u8, [u8; COLOR_BUCKETS], usize)> = (0..n)
            .map(|v| {
                let mut counts = [0u8; COLOR_BUCKETS];
                let mut nb = masks[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    counts[colors[u] as usize] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let new_cells = rank as usize + 1;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

/// Explores individualizations of the first non-singleton color class and
/// keeps the minimum leaf code. Two vertices of a class whose adjacency
/// agrees outside the pair are swapped by an automorphism, so only one of
/// them is branched on.
fn search(masks: &[u64], colors: &[u8], best: &mut Option<u64>) {
    let n = masks.len();
    let mut class_size = [0u8; COLOR_BUCKETS];
    for &c in colors {
        class_size[c as usize] += 1;
    }
    let Some(split) = (0..COLOR_BUCKETS).find(|&c| class_size[c] >= 2) else {
        // discrete coloring: vertex with color i takes position i
        let mut new_to_old = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            new_to_old[c as usize] = v;
        }
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                if masks[new_to_old[i]] >> new_to_old[j] & 1 == 1 {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == split).collect();
    let mut reps: Vec<usize> = Vec::with_capacity(members.len());
    'member: for &v in &members {
        for &u in &reps {
            let outside = !((1u64 << u) | (1u64 << v));
            if masks[u] & outside == masks[v] & outside {
                continue 'member;
            }
        }
        reps.push(v);
    }
    for &v in &reps {
        let mut child: Vec<u8> = colors.iter().map(|&c| c * 2 + 1).collect();
        child[v] -= 1;
        refine(masks, &mut child);
        search(masks, &child, best);
    }
}

/// Canonical codes of all graphs on `n` vertices, one per isomorphism
/// class, ascending.
pub fn all_graph_codes(n: usize) -> Vec<u64> {
    assert!((1..=MAX_ENUM_N).contains(&n));
    let mut level: Vec<u64> = vec![0];
    for m in 2..=n {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let parent = code_to_masks(m - 1, code);
                (0u64..1 << (m - 1)).map(move |attach| {
                    let mut masks = parent.clone();
                    masks.push(attach);
                    let mut bits = attach;
                    while bits != 0 {
                        let v = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        masks[v] |= 1 << (m - 1);
                    }
                    canonical_code_masks(&masks)
                })
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

/// Canonical codes of the connected graphs on `n` vertices, ascending.
pub fn connected_graph_codes(n: usize) -> Vec<u64> {
    all_graph_codes(n)
        .into_iter()
        .filter(|&code| code_to_graph(n, code).is_connected())
        .collect()
}
