//! Simple undirected graphs with bitset adjacency rows.

use crate::bitset::VertexSet;
use std::collections::VecDeque;
use thiserror::Error;

/// BFS distance reported for vertices that cannot be reached.
pub const INFINITY: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
}

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] row per vertex, kept symmetric and
/// irreflexive by construction. Graphs are cheap to clone and are treated as
/// immutable by every algorithm in this crate once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `u-v`. Re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v || !self.adj[u].contains(v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut row = VertexSet::full(self.n);
            row.difference_with(&self.adj[u]);
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// One adjacency mask per vertex, when the graph fits in 64-bit words.
    /// The exact solvers run on this representation.
    pub(crate) fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        self.adj.iter().map(|row| row.as_mask64()).collect()
    }

    /// Multi-source BFS. Returns per-vertex distance to the nearest source,
    /// with [`INFINITY`] for vertices in other components. Sources themselves
    /// get distance 0.
    pub fn bfs_distances(&self, sources: &VertexSet) -> Vec<u32> {
        let mut dist = vec![INFINITY; self.n];
        let mut queue = VecDeque::new();
        for v in sources.iter() {
            assert!(v < self.n, "source {v} out of range");
            dist[v] = 0;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if dist[w] == INFINITY {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut result = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            result.push(comp);
        }
        result
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `keep`, with vertices relabelled to `0..keep.len()`
    /// in increasing order of their old index.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Relabeling) {
        let new_to_old: Vec<usize> = keep.iter().collect();
        assert!(
            new_to_old.last().is_none_or(|&v| v < self.n),
            "kept vertex out of range"
        );
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::empty(new_to_old.len());
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(keep).iter() {
                if old_v > old_u {
                    let new_v = old_to_new[old_v].unwrap();
                    g.adj[new_u].insert(new_v);
                    g.adj[new_v].insert(new_u);
                }
            }
        }
        (g, Relabeling { old_to_new, new_to_old })
    }

    /// Deletes `x` and returns the induced subgraph on the rest, together with
    /// the relabelling, so certificates computed downstream can be lifted back.
    pub fn delete_vertices(&self, x: &VertexSet) -> (Graph, Relabeling) {
        let mut keep = VertexSet::full(self.n);
        keep.difference_with(x);
        self.induced_subgraph(&keep)
    }

    /// Contracts the edge `u-v`: the merged vertex keeps `u`'s slot and is
    /// adjacent to the union of both old neighbourhoods; `v` is deleted and
    /// the rest are relabelled in order. The result is again simple.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange(u.max(v), self.n));
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (mut g, map) = self.delete_vertices(&VertexSet::singleton(v));
        let nu = map.new_label(u).expect("u survives the contraction");
        for old_w in self.adj[v].iter() {
            if old_w != u {
                let nw = map.new_label(old_w).expect("neighbour survives");
                if nw != nu {
                    g.adj[nu].insert(nw);
                    g.adj[nw].insert(nu);
                }
            }
        }
        Ok(g)
    }

    /// No two members of `s` are adjacent. Out-of-range members make the
    /// answer `false`.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| v < self.n && self.adj[v].is_disjoint_from(s))
    }

    /// All members of `s` are pairwise adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            if v >= self.n {
                return false;
            }
            let mut others = s.clone();
            others.remove(v);
            others.is_subset_of(&self.adj[v])
        })
    }

    /// `colors` assigns one color per vertex and no edge is monochromatic.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n && self.edges().all(|(u, v)| colors[u] != colors[v])
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Order-preserving vertex relabelling produced by deletions.
#[derive(Clone, Debug)]
pub struct Relabeling {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl Relabeling {
    /// New label of an old vertex; `None` if it was deleted.
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Old label of a surviving vertex.
    pub fn old_label(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Maps a set in the new labelling back to old labels.
    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.new_to_old[v]).collect()
    }

    /// Maps a set of old labels forward, dropping deleted vertices.
    pub fn project_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.new_label(v)).collect()
    }
}
