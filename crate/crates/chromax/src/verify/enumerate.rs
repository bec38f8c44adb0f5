//! Small-graph enumeration up to isomorphism.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graphcore::{canonical_form, BitIter, SimpleGraph};

/// Builtin enumeration cap; larger populations arrive via graph6 files.
pub const MAX_ENUM_VERTICES: usize = 8;

/// Exactly one representative per isomorphism class of graphs on `n`
/// vertices satisfying the predicate, sorted by canonical form.
///
/// Level-wise construction: canonical representatives on `i` vertices are
/// extended by every attachment of vertex `i`, deduplicating by canonical
/// form at each level. The predicate must be label-invariant; it is applied
/// at the final level only (a filtered class could still extend into an
/// unfiltered one).
pub fn enumerate_graphs(
    n: usize,
    predicate: impl Fn(&SimpleGraph) -> bool,
) -> Result<Vec<SimpleGraph>> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::TooLarge(format!(
            "builtin enumeration supports at most {MAX_ENUM_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        let g = SimpleGraph::empty(0)?;
        return Ok(if predicate(&g) { vec![g] } else { vec![] });
    }
    let mut reps = vec![SimpleGraph::empty(1)?];
    for level in 2..=n {
        let mut next: BTreeMap<Vec<u8>, SimpleGraph> = BTreeMap::new();
        for g in &reps {
            let mut edges = g.edges();
            let base_len = edges.len();
            for subset in 0..(1u64 << (level - 1)) {
                edges.truncate(base_len);
                for v in BitIter(subset) {
                    edges.push((v, level - 1));
                }
                let h = SimpleGraph::from_edge_list(level, &edges)?;
                if level == n && !predicate(&h) {
                    continue;
                }
                next.entry(canonical_form(&h)?).or_insert(h);
            }
        }
        reps = next.into_values().collect();
    }
    if n == 1 {
        reps.retain(|g| predicate(g));
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{is_2_connected, is_isomorphic};

    #[test]
    fn counts_of_all_graphs_match_the_literature() {
        let expect = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &count) in expect.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_graphs(n, |_| true).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn counts_of_connected_graphs() {
        let expect = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &count) in expect.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_graphs(n, |g| g.is_connected()).unwrap().len(),
                count,
                "n={n}"
            );
        }
    }

    #[test]
    fn counts_of_two_connected_graphs() {
        // C_n, C_n plus chord patterns, K_n: 1, 3, 10, 56 for n = 3..6.
        assert_eq!(enumerate_graphs(3, is_2_connected).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(4, is_2_connected).unwrap().len(), 3);
        assert_eq!(enumerate_graphs(5, is_2_connected).unwrap().len(), 10);
        assert_eq!(enumerate_graphs(6, is_2_connected).unwrap().len(), 56);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let reps = enumerate_graphs(5, |g| g.is_connected()).unwrap();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!is_isomorphic(&reps[i], &reps[j]).unwrap());
            }
        }
    }

    #[test]
    fn output_is_sorted_and_deterministic() {
        let a = enumerate_graphs(5, is_2_connected).unwrap();
        let b = enumerate_graphs(5, is_2_connected).unwrap();
        assert_eq!(a, b);
        let keys: Vec<Vec<u8>> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn rejects_beyond_cap() {
        assert!(matches!(enumerate_graphs(9, |_| true), Err(Error::TooLarge(_))));
    }
}
