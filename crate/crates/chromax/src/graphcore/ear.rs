//! Ear decompositions and ear-bounded blocks.
//!
//! An ear decomposition is an initial cycle plus an ordered list of ears;
//! every prefix union is 2-connected and every edge of the source graph
//! appears in exactly one element. Ear selection is deterministic: at each
//! step the lexicographically smallest available ear (as a vertex sequence)
//! is attached, so decompositions are reproducible.

use serde::Serialize;

use super::graph::{BitIter, SimpleGraph};
use super::invariants::is_2_connected;
use crate::error::{Error, Result};

/// Initial cycle plus ordered ears. Each ear is a vertex path whose first
/// and last vertices lie in the previously built subgraph and whose internal
/// vertices are new; a two-vertex ear is a chord.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    pub initial_cycle: Vec<usize>,
    pub ears: Vec<Vec<usize>>,
}

impl EarDecomposition {
    /// Rebuilds the union of all elements as a graph on `n` vertices.
    pub fn reconstruct(&self, n: usize) -> Result<SimpleGraph> {
        SimpleGraph::from_edge_list(n, &self.all_edges())
    }

    fn all_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = cycle_edges(&self.initial_cycle);
        for ear in &self.ears {
            edges.extend(path_edges(ear));
        }
        edges
    }

    /// Checks every structural invariant against the source graph.
    pub fn validate(&self, g: &SimpleGraph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        check_cycle(g, &self.initial_cycle)?;
        let mut built: u64 = self.initial_cycle.iter().map(|&v| 1u64 << v).sum();
        let mut used: std::collections::BTreeSet<(usize, usize)> =
            cycle_edges(&self.initial_cycle).into_iter().collect();
        if used.len() != self.initial_cycle.len() {
            return bad("initial cycle repeats an edge".into());
        }
        self.check_prefix_biconnected(0)?;
        for (i, ear) in self.ears.iter().enumerate() {
            if ear.len() < 2 {
                return bad(format!("ear {i} has fewer than two vertices"));
            }
            let (first, last) = (ear[0], *ear.last().unwrap());
            if first == last {
                return bad(format!("ear {i} is closed"));
            }
            if built & (1 << first) == 0 || built & (1 << last) == 0 {
                return bad(format!("ear {i} endpoints not in the built subgraph"));
            }
            let mut seen_internal = 0u64;
            for &v in &ear[1..ear.len() - 1] {
                if built & (1 << v) != 0 || seen_internal & (1 << v) != 0 {
                    return bad(format!("ear {i} internal vertex {v} is not new"));
                }
                seen_internal |= 1 << v;
            }
            for e in path_edges(ear) {
                if !g.has_edge(e.0, e.1) {
                    return bad(format!("ear {i} uses non-edge ({}, {})", e.0, e.1));
                }
                if !used.insert(e) {
                    return bad(format!("edge ({}, {}) appears twice", e.0, e.1));
                }
            }
            built |= seen_internal;
            self.check_prefix_biconnected(i + 1)?;
        }
        if used.len() != g.edge_count() {
            return bad(format!(
                "decomposition covers {} of {} edges",
                used.len(),
                g.edge_count()
            ));
        }
        Ok(())
    }

    fn check_prefix_biconnected(&self, ears_taken: usize) -> Result<()> {
        let mut edges = cycle_edges(&self.initial_cycle);
        for ear in &self.ears[..ears_taken] {
            edges.extend(path_edges(ear));
        }
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let index = |v: usize| verts.binary_search(&v).unwrap();
        let local: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
        let sub = SimpleGraph::from_edge_list(verts.len(), &local)
            .map_err(|e| Error::InvalidDecomposition(e.to_string()))?;
        if !is_2_connected(&sub) {
            return Err(Error::InvalidDecomposition(format!(
                "prefix after {ears_taken} ears is not 2-connected"
            )));
        }
        Ok(())
    }
}

fn ord_edge(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len()).map(|i| ord_edge(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

fn path_edges(path: &[usize]) -> Vec<(usize, usize)> {
    path.windows(2).map(|w| ord_edge(w[0], w[1])).collect()
}

fn check_cycle(g: &SimpleGraph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle);
    }
    let mut seen = 0u64;
    for &v in cycle {
        if v >= g.n() || seen & (1 << v) != 0 {
            return Err(Error::NotACycle);
        }
        seen |= 1 << v;
    }
    for i in 0..cycle.len() {
        if !g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]) {
            return Err(Error::NotACycle);
        }
    }
    Ok(())
}

/// Computes an ear decomposition of a 2-connected graph, starting from the
/// given cycle when provided (any cycle of a 2-connected graph can start
/// one), otherwise from the lexicographically smallest cycle.
pub fn ear_decomposition(
    g: &SimpleGraph,
    initial_cycle: Option<&[usize]>,
) -> Result<EarDecomposition> {
    if !is_2_connected(g) {
        return Err(Error::NotBiconnected);
    }
    let cycle = match initial_cycle {
        Some(c) => {
            check_cycle(g, c)?;
            c.to_vec()
        }
        None => smallest_cycle(g),
    };

    let mut built: u64 = cycle.iter().map(|&v| 1u64 << v).sum();
    let mut used: std::collections::BTreeSet<(usize, usize)> =
        cycle_edges(&cycle).into_iter().collect();
    let mut ears: Vec<Vec<usize>> = Vec::new();
    let total_edges = g.edge_count();

    while used.len() < total_edges {
        let ear = smallest_ear(g, built, &used).ok_or_else(|| {
            Error::InvalidDecomposition("no attachable ear found; graph not 2-connected?".into())
        })?;
        for e in path_edges(&ear) {
            used.insert(e);
        }
        for &v in &ear {
            built |= 1 << v;
        }
        ears.push(ear);
    }

    let d = EarDecomposition { initial_cycle: cycle, ears };
    debug_assert!(d.validate(g).is_ok());
    Ok(d)
}

/// Lexicographically smallest cycle sequence: depth-first from vertex 0,
/// always trying the smallest next vertex, accepting the first closure of
/// length at least 3.
fn smallest_cycle(g: &SimpleGraph) -> Vec<usize> {
    let mut path = vec![0usize];
    let mut on_path = 1u64 << 0;
    fn dfs(g: &SimpleGraph, path: &mut Vec<usize>, on_path: &mut u64) -> bool {
        let c = *path.last().unwrap();
        for w in g.neighbors(c) {
            if w == 0 && path.len() >= 3 {
                return true;
            }
            if *on_path & (1 << w) == 0 {
                path.push(w);
                *on_path |= 1 << w;
                if dfs(g, path, on_path) {
                    return true;
                }
                path.pop();
                *on_path &= !(1 << w);
            }
        }
        false
    }
    let found = dfs(g, &mut path, &mut on_path);
    debug_assert!(found, "2-connected graphs have a cycle through vertex 0");
    path
}

/// Smallest available ear: scan anchors in the built set ascending, then
/// unused incident edges ascending; a path continuation beats any later
/// sibling because its second vertex is smaller.
fn smallest_ear(
    g: &SimpleGraph,
    built: u64,
    used: &std::collections::BTreeSet<(usize, usize)>,
) -> Option<Vec<usize>> {
    for x in BitIter(built) {
        for y in g.neighbors(x) {
            if used.contains(&ord_edge(x, y)) {
                continue;
            }
            if built & (1 << y) != 0 {
                return Some(vec![x, y]);
            }
            if let Some(mut tail) = smallest_path_into(g, y, built, x) {
                let mut ear = vec![x];
                ear.append(&mut tail);
                return Some(ear);
            }
        }
    }
    None
}

/// Lexicographically smallest simple path from `start` (outside the built
/// set) back into the built set at a vertex other than `avoid`, with all
/// internal vertices outside the built set.
fn smallest_path_into(
    g: &SimpleGraph,
    start: usize,
    built: u64,
    avoid: usize,
) -> Option<Vec<usize>> {
    fn dfs(
        g: &SimpleGraph,
        path: &mut Vec<usize>,
        visited: &mut u64,
        built: u64,
        avoid: usize,
    ) -> bool {
        let c = *path.last().unwrap();
        for w in g.neighbors(c) {
            if built & (1 << w) != 0 {
                if w != avoid {
                    path.push(w);
                    return true;
                }
                continue;
            }
            if *visited & (1 << w) == 0 {
                path.push(w);
                *visited |= 1 << w;
                if dfs(g, path, visited, built, avoid) {
                    return true;
                }
                path.pop();
                *visited &= !(1 << w);
            }
        }
        false
    }
    let mut path = vec![start];
    let mut visited = 1u64 << start;
    if dfs(g, &mut path, &mut visited, built, avoid) {
        Some(path)
    } else {
        None
    }
}

/// One ear-bounded block: the 2-connected closure of a boundary ear under
/// repeated absorption of ears attached inside it. The edge set includes the
/// boundary's closing chord between the ear endpoints (an edge of the source
/// graph when the endpoints are adjacent, a virtual closing edge otherwise).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub boundary_ear: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    /// The block as a standalone graph with vertices relabeled to `0..len`.
    pub fn to_graph(&self) -> SimpleGraph {
        let index = |v: usize| self.vertices.binary_search(&v).unwrap();
        let local: Vec<(usize, usize)> =
            self.edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
        SimpleGraph::from_edge_list(self.vertices.len(), &local).expect("block edges are local")
    }

    /// Endpoints of the boundary ear.
    pub fn boundary_endpoints(&self, decomp: &EarDecomposition) -> (usize, usize) {
        let ear = &decomp.ears[self.boundary_ear];
        (ear[0], *ear.last().unwrap())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSet {
    pub blocks: Vec<Block>,
}

/// Builds the block bounded by each qualifying ear: ears with at least one
/// internal vertex whose two endpoints both lie on the initial cycle. Ears
/// (including chords) are absorbed into a block as long as both their
/// endpoints already lie inside it, repeating to a fixpoint.
///
/// Boundary ears sharing the same two endpoints close over the same block;
/// such duplicates are emitted once, attributed to the earliest boundary ear.
pub fn blocks_bounded_by_ears(g: &SimpleGraph, decomp: &EarDecomposition) -> Result<BlockSet> {
    decomp.validate(g)?;
    let initial: u64 = decomp.initial_cycle.iter().map(|&v| 1u64 << v).sum();
    let mut blocks = Vec::new();

    for (i, ear) in decomp.ears.iter().enumerate() {
        let (u, v) = (ear[0], *ear.last().unwrap());
        let qualifies = ear.len() >= 3 && initial & (1 << u) != 0 && initial & (1 << v) != 0;
        if !qualifies {
            continue;
        }
        let mut verts: u64 = ear.iter().map(|&w| 1u64 << w).sum();
        let mut edges: std::collections::BTreeSet<(usize, usize)> =
            path_edges(ear).into_iter().collect();
        edges.insert(ord_edge(u, v));
        let mut absorbed = vec![false; decomp.ears.len()];
        absorbed[i] = true;
        loop {
            let mut grew = false;
            for (j, other) in decomp.ears.iter().enumerate() {
                if absorbed[j] {
                    continue;
                }
                let (a, b) = (other[0], *other.last().unwrap());
                if verts & (1 << a) != 0 && verts & (1 << b) != 0 {
                    absorbed[j] = true;
                    grew = true;
                    for &w in other {
                        verts |= 1 << w;
                    }
                    edges.extend(path_edges(other));
                }
            }
            if !grew {
                break;
            }
        }
        let block = Block {
            boundary_ear: i,
            vertices: BitIter(verts).collect(),
            edges: edges.into_iter().collect(),
        };
        if !blocks.iter().any(|b: &Block| b.vertices == block.vertices && b.edges == block.edges) {
            blocks.push(block);
        }
    }
    Ok(BlockSet { blocks })
}
