//! Canonical forms and isomorphism by refinement with backtracking.
//!
//! The canonical form of a graph is the lexicographically least graph6
//! encoding over all relabelings, found by equitable-partition refinement
//! plus individualization. Discovered automorphisms prune branches whose
//! subtrees are guaranteed to repeat earlier leaves. Supported up to 12
//! vertices; beyond that the search-tree fallback is not worth running.

use super::graph::SimpleGraph;
use super::graph6::write_graph6;
use crate::error::{Error, Result};

/// Order cap for canonical labeling and isomorphism testing.
pub const MAX_ISO_VERTICES: usize = 12;

/// Label-invariant byte string: two graphs are isomorphic iff their
/// canonical forms are equal. The bytes are the graph6 record of the
/// canonically relabeled graph.
pub fn canonical_form(g: &SimpleGraph) -> Result<Vec<u8>> {
    Ok(write_graph6(&canonical_graph(g)?).into_bytes())
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &SimpleGraph) -> Result<SimpleGraph> {
    if g.n() > MAX_ISO_VERTICES {
        return Err(Error::TooLarge(format!(
            "canonical labeling supports at most {MAX_ISO_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    if g.n() <= 1 {
        return Ok(g.clone());
    }
    let mut search = CanonSearch {
        g,
        best_key: None,
        best_perm: Vec::new(),
        automorphisms: Vec::new(),
    };
    let initial: Vec<Vec<usize>> = vec![(0..g.n()).collect()];
    search.descend(initial, &[]);
    let (_, perm) = search.finish();
    Ok(g.relabel(&perm))
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

struct CanonSearch<'a> {
    g: &'a SimpleGraph,
    best_key: Option<Vec<u8>>,
    best_perm: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> CanonSearch<'a> {
    fn finish(self) -> (Vec<u8>, Vec<usize>) {
        (self.best_key.expect("at least one leaf"), self.best_perm)
    }

    fn descend(&mut self, mut partition: Vec<Vec<usize>>, prefix: &[usize]) {
        refine(self.g, &mut partition);
        let target = match partition.iter().position(|c| c.len() > 1) {
            None => {
                self.record_leaf(&partition);
                return;
            }
            Some(i) => i,
        };
        let candidates = partition[target].clone();
        let mut processed: Vec<usize> = Vec::new();
        for u in candidates {
            if self.in_processed_orbit(u, &processed, prefix) {
                continue;
            }
            processed.push(u);
            let mut child = Vec::with_capacity(partition.len() + 1);
            for (i, cell) in partition.iter().enumerate() {
                if i == target {
                    child.push(vec![u]);
                    child.push(cell.iter().copied().filter(|&v| v != u).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            let mut next_prefix = prefix.to_vec();
            next_prefix.push(u);
            self.descend(child, &next_prefix);
        }
    }

    /// True when some recorded automorphism fixing the individualized prefix
    /// pointwise maps `u` onto an already-explored sibling. Such subtrees
    /// replay earlier leaves and cannot improve the minimum.
    fn in_processed_orbit(&self, u: usize, processed: &[usize], prefix: &[usize]) -> bool {
        if processed.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let usable: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if usable.is_empty() {
            return false;
        }
        // Orbit of u under the usable generators, grown to a fixpoint.
        let mut orbit = 1u64 << u;
        loop {
            let mut grew = false;
            for a in &usable {
                for v in 0..self.g.n() {
                    if orbit & (1 << v) != 0 && orbit & (1 << a[v]) == 0 {
                        orbit |= 1 << a[v];
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        processed.iter().any(|&p| orbit & (1 << p) != 0)
    }

    fn record_leaf(&mut self, partition: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.g.n()];
        for (label, cell) in partition.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let key = write_graph6(&self.g.relabel(&perm)).into_bytes();
        match &self.best_key {
            None => {
                self.best_key = Some(key);
                self.best_perm = perm;
            }
            Some(best) if key < *best => {
                self.best_key = Some(key);
                self.best_perm = perm;
            }
            Some(best) if key == *best => {
                // Equal leaves compose to an automorphism: π_best^{-1} ∘ π.
                let mut inv_best = vec![0usize; self.g.n()];
                for (v, &l) in self.best_perm.iter().enumerate() {
                    inv_best[l] = v;
                }
                let auto: Vec<usize> = perm.iter().map(|&l| inv_best[l]).collect();
                if auto.iter().enumerate().any(|(v, &w)| v != w)
                    && self.automorphisms.len() < 64
                    && !self.automorphisms.contains(&auto)
                {
                    self.automorphisms.push(auto);
                }
            }
            _ => {}
        }
    }
}

/// Equitable refinement: repeatedly split cells by the multiset of neighbor
/// counts into every cell, ordering the shards by their count vectors so the
/// result is label-invariant.
fn refine(g: &SimpleGraph, partition: &mut Vec<Vec<usize>>) {
    loop {
        let cell_of = {
            let mut m = vec![0usize; g.n()];
            for (i, cell) in partition.iter().enumerate() {
                for &v in cell {
                    m[v] = i;
                }
            }
            m
        };
        let ncells = partition.len();
        let signature = |v: usize| -> Vec<usize> {
            let mut sig = vec![0usize; ncells];
            for w in g.neighbors(v) {
                sig[cell_of[w]] += 1;
            }
            sig
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(ncells);
        let mut changed = false;
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for &v in cell {
                let sig = signature(v);
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => members.push(v),
                    None => groups.push((sig, vec![v])),
                }
            }
            groups.sort_by(|a, b| a.0.cmp(&b.0));
            if groups.len() > 1 {
                changed = true;
            }
            for (_, members) in groups {
                next.push(members);
            }
        }
        *partition = next;
        if !changed {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c5 = families::cycle(5).unwrap();
        let shuffled = c5.relabel(&[3, 1, 4, 0, 2]);
        assert!(is_isomorphic(&c5, &shuffled).unwrap());
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&shuffled).unwrap());
    }

    #[test]
    fn k33_is_not_c6() {
        let k33 = families::complete_bipartite(3, 3).unwrap();
        let c6 = families::cycle(6).unwrap();
        assert!(!is_isomorphic(&k33, &c6).unwrap());
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // C_6 vs two disjoint triangles: both 2-regular on 6 vertices.
        let c6 = families::cycle(6).unwrap();
        let two_triangles =
            SimpleGraph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn canonical_graph_is_a_relabeling() {
        let g = families::g_nk(7, 4).unwrap();
        let c = canonical_graph(&g).unwrap();
        assert_eq!(c.n(), g.n());
        assert_eq!(c.edge_count(), g.edge_count());
        assert!(is_isomorphic(&g, &c).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = families::g_nk(6, 4).unwrap();
        let c = canonical_graph(&g).unwrap();
        assert_eq!(canonical_graph(&c).unwrap(), c);
    }

    #[test]
    fn hard_symmetric_cases_terminate() {
        // Complete bipartite graphs drive naive individualization into deep
        // symmetric branches; orbit pruning must keep them tractable.
        let k66 = families::complete_bipartite(6, 6).unwrap();
        let relabeled = k66.relabel(&[5, 2, 9, 0, 11, 7, 1, 3, 10, 4, 8, 6]);
        assert!(is_isomorphic(&k66, &relabeled).unwrap());
        let petersen = SimpleGraph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        let c = canonical_graph(&petersen).unwrap();
        assert!(is_isomorphic(&petersen, &c).unwrap());
    }

    #[test]
    fn rejects_orders_beyond_cap() {
        let g = SimpleGraph::empty(13).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(canonical_form(&SimpleGraph::empty(0).unwrap()).unwrap(), b"?".to_vec());
        assert_eq!(canonical_form(&SimpleGraph::empty(1).unwrap()).unwrap(), b"@".to_vec());
    }
}
