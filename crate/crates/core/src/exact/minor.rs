//! Exact complete-minor detection and the Hadwiger number.
//!
//! A `K_t` minor is witnessed by `t` branch sets: disjoint, each inducing a
//! connected subgraph, and pairwise joined by at least one edge. The search
//! enumerates branch-set families in a canonical form — sets ordered by
//! their minimum vertex ("seed"), seeds strictly increasing, every other
//! member of a set larger than its seed — so each family is visited at most
//! once. Sets are grown one at a time by a duplicate-free connected-subset
//! expansion; counting arguments prune branches that cannot reach `t` sets.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

use super::independence::max_clique_masks;
use super::{LimitError, Limits};

/// Witness that a graph has a complete minor: one branch set per vertex of
/// the minor. Check it with [`verify_minor_embedding`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorEmbedding {
    pub branch_sets: Vec<VertexSet>,
}

/// Checks a claimed `K_t` minor from first principles: every branch set is
/// nonempty, in range, and connected; the sets are pairwise disjoint and
/// pairwise joined by an edge.
pub fn verify_minor_embedding(g: &Graph, embedding: &MinorEmbedding) -> bool {
    let sets = &embedding.branch_sets;
    for s in sets {
        if s.is_empty() || s.iter().any(|v| v >= g.n()) {
            return false;
        }
        let (induced, _) = g.induced_subgraph(s);
        if !induced.is_connected() {
            return false;
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint_from(&sets[j]) {
                return false;
            }
            let joined = sets[i]
                .iter()
                .any(|u| !g.neighbors(u).is_disjoint_from(&sets[j]));
            if !joined {
                return false;
            }
        }
    }
    true
}

/// Searches for a `K_t` minor (`t >= 1`). Returns a verified embedding, or
/// `None` when no such minor exists.
pub fn has_clique_minor(
    g: &Graph,
    t: usize,
    limits: &Limits,
) -> Result<Option<MinorEmbedding>, LimitError> {
    assert!(t >= 1, "K_0 is a minor of anything; ask for t >= 1");
    let n = g.n();
    let limit = limits.max_minor.min(64);
    if n > limit {
        return Err(LimitError {
            operation: "has_clique_minor",
            n,
            limit,
        });
    }
    if t > n {
        return Ok(None);
    }
    let masks = g.adjacency_masks().expect("n <= 64 checked above");
    let mut search = MinorSearch {
        masks: &masks,
        full: if n == 64 { !0u64 } else { (1u64 << n) - 1 },
        t,
        sets: Vec::with_capacity(t),
        nbrs: Vec::with_capacity(t),
        used: 0,
    };
    if !search.place_next_set() {
        return Ok(None);
    }
    let embedding = MinorEmbedding {
        branch_sets: search.sets.iter().map(|&s| VertexSet::from_mask64(s)).collect(),
    };
    // the search's invariants imply this, but a witness should stand on its own
    assert!(verify_minor_embedding(g, &embedding));
    Ok(Some(embedding))
}

/// η(G): the largest `t` such that `K_t` is a minor, found by walking up
/// from the clique number (whose witness is already a `K_ω` minor with
/// singleton branch sets). η of the empty graph is 0.
pub fn hadwiger_number(
    g: &Graph,
    limits: &Limits,
) -> Result<(usize, MinorEmbedding), LimitError> {
    let n = g.n();
    let limit = limits.max_minor.min(64);
    if n > limit {
        return Err(LimitError {
            operation: "hadwiger_number",
            n,
            limit,
        });
    }
    if n == 0 {
        return Ok((0, MinorEmbedding { branch_sets: Vec::new() }));
    }
    let masks = g.adjacency_masks().expect("n <= 64 checked above");
    let (omega, clique) = max_clique_masks(&masks, n);
    let mut best = (
        omega,
        MinorEmbedding {
            branch_sets: VertexSet::from_mask64(clique)
                .iter()
                .map(VertexSet::singleton)
                .collect(),
        },
    );
    debug_assert!(verify_minor_embedding(g, &best.1));
    for t in omega + 1..=n {
        match has_clique_minor(g, t, limits)? {
            Some(embedding) => best = (t, embedding),
            None => break,
        }
    }
    Ok(best)
}

struct MinorSearch<'a> {
    masks: &'a [u64],
    full: u64,
    t: usize,
    sets: Vec<u64>,
    nbrs: Vec<u64>,
    used: u64,
}

/// Bits `0..=v`.
fn le_mask(v: usize) -> u64 {
    if v >= 63 {
        !0
    } else {
        (1u64 << (v + 1)) - 1
    }
}

impl MinorSearch<'_> {
    /// Chooses the seed of the next branch set. On success the completed
    /// family is left in `self.sets`.
    fn place_next_set(&mut self) -> bool {
        let k = self.sets.len();
        if k == self.t {
            return true;
        }
        let above = match self.sets.last() {
            Some(prev) => !le_mask(prev.trailing_zeros() as usize),
            None => !0,
        };
        let pool = self.full & !self.used & above;
        let need = self.t - k;
        if (pool.count_ones() as usize) < need {
            return false;
        }
        // every remaining set must touch every built set, through distinct
        // vertices of the pool
        for i in 0..k {
            if ((self.nbrs[i] & pool).count_ones() as usize) < need {
                return false;
            }
        }
        let mut seeds = pool;
        while seeds != 0 {
            let seed = seeds.trailing_zeros() as usize;
            let seed_bit = 1u64 << seed;
            seeds &= !seed_bit;
            // seeds only grow, so once too few vertices remain at or above
            // this one, no later seed can work either
            if ((pool & !(seed_bit - 1)).count_ones() as usize) < need {
                break;
            }
            let universe = self.full & !self.used & !le_mask(seed);
            if self.grow(seed_bit, self.masks[seed] & universe, 0, universe) {
                return true;
            }
        }
        false
    }

    /// Duplicate-free expansion of the current set `s`. `ext` holds the
    /// frontier allowed to join `s`, `excl` the vertices already branched on
    /// higher up (forbidden to this subtree), `universe` the vertices this
    /// set may ever use. Every connected superset of the seed within
    /// `universe` is visited exactly once.
    fn grow(&mut self, s: u64, ext: u64, excl: u64, universe: u64) -> bool {
        if (0..self.sets.len()).all(|i| self.nbrs[i] & s != 0) {
            let mut nbr = 0u64;
            let mut members = s;
            while members != 0 {
                let v = members.trailing_zeros() as usize;
                members &= members - 1;
                nbr |= self.masks[v];
            }
            self.sets.push(s);
            self.nbrs.push(nbr & !s);
            self.used |= s;
            if self.place_next_set() {
                return true;
            }
            self.used &= !s;
            self.nbrs.pop();
            self.sets.pop();
        }

        // growing s any further leaves fewer vertices for the remaining sets
        let need_rest = self.t - self.sets.len() - 1;
        if ((universe & !s).count_ones() as usize) < need_rest + 1 {
            return false;
        }
        // a built set that s has not reached must stay reachable through
        // some vertex this subtree is still allowed to add
        let allowed = universe & !excl & !s;
        for i in 0..self.sets.len() {
            if self.nbrs[i] & s == 0 && self.nbrs[i] & allowed == 0 {
                return false;
            }
        }

        let mut excl = excl;
        let mut candidates = ext;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let bit = 1u64 << v;
            candidates &= !bit;
            let grown = s | bit;
            let child_ext = (ext | (self.masks[v] & universe)) & !grown & !excl;
            if self.grow(grown, child_ext, excl, universe) {
                return true;
            }
            excl |= bit;
        }
        false
    }
}
