//! Labeled simple undirected graphs with bitset adjacency.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count; one `u64` neighbor bitset per vertex.
pub const MAX_VERTICES: usize = 64;

/// A labeled simple undirected graph on vertices `0..n`.
///
/// Values are immutable: every editing operation returns a new graph, so
/// graphs can be shared freely across threads. No self-loops, no
/// multi-edges; adjacency is kept symmetric by construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    /// Builds a normalized graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Returns the graph with edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Returns the graph with edge `uv` removed (no-op if absent).
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Deletes vertex `u`; remaining labels shift down to stay dense.
    pub fn delete_vertex(&self, u: usize) -> Result<Self> {
        self.check_vertex(u)?;
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != u).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Identifies `u` and `v` (adjacent or not), collapsing any resulting
    /// multi-edges. The merged vertex sits at `min(u, v)`'s position and
    /// labels above `max(u, v)` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let mut merged = self.clone();
        merged.adj[keep] |= self.adj[drop];
        merged.adj[keep] &= !(1 << keep) & !(1 << drop);
        for w in 0..self.n {
            if merged.adj[drop] & (1 << w) != 0 && w != keep {
                merged.adj[w] |= 1 << keep;
            }
        }
        merged.delete_vertex(drop)
    }

    /// Induced subgraph on the given vertices; vertex `verts[i]` becomes `i`.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Self {
        let mut g = SimpleGraph { n: verts.len(), adj: vec![0; verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Self {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Applies `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = SimpleGraph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Vertex set of the connected component containing `start`, as a bitset.
    pub fn component_mask(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen = 0u64;
        for v in 0..self.n {
            if seen & (1 << v) == 0 {
                let mask = self.component_mask(v);
                seen |= mask;
                out.push(BitIter(mask).collect());
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.n {
            0 => true,
            _ => self.component_mask(0).count_ones() as usize == self.n,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.n >= 1 && self.edge_count() == self.n - 1
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterates set bit positions of a `u64`, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeListJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeListJson { n: self.n, edges: self.edges() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = EdgeListJson::deserialize(deserializer)?;
        SimpleGraph::from_edge_list(raw.n, &raw.edges).map_err(D::Error::custom)
    }
}
