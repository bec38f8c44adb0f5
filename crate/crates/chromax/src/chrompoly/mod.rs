//! Exact chromatic polynomials by reduction.
//!
//! The core recursion combines base cases (cliques, cycles, trees) with
//! clique-separator gluing, the dominated-vertex identity, both directions
//! of deletion-contraction, and the closure expansion. Every applied rule is
//! recorded in a [`ReductionTrace`]; replaying a trace against the input
//! graph re-derives the polynomial and fails loudly on any divergence.

mod oracle;

pub use oracle::{count_colorings_brute, interpolate_chromatic, path_fixed_endpoint_colorings};

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphcore::{canonical_form, SimpleGraph};
use crate::polyalg::{falling_factorial, IntPoly};

/// Order cap for chromatic polynomial computation.
pub const MAX_CHROMATIC_VERTICES: usize = 16;

/// Subgraphs up to this order are memoized under their canonical form;
/// beyond it canonicalization costs more than recomputation.
const MEMO_MAX_VERTICES: usize = 10;

/// Reduction strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Base cases, then clique separators, then dominated vertices, then
    /// deletion- or addition-contraction picked by edge density.
    Auto,
    /// Deletion-contraction on the smallest edge all the way down to forests.
    PureDeleteContract,
    /// The closure expansion applied verbatim wherever a vertex has
    /// non-neighbors.
    ClosureFirst,
}

/// One reduction step. `DeleteContract` covers both directions: on an edge
/// it is the deletion form, on a non-adjacent pair the addition form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Rule {
    BaseClique,
    BaseCycle,
    BaseTree,
    CliqueGlue { r: usize },
    DominatedVertex { u: usize },
    DeleteContract { u: usize, v: usize },
    ClosureExpansion { u: usize },
}

/// A rule application on a graph of `n` vertices and `m` edges, with the
/// `(n, m)` sizes of the subproblems it spawned, in recursion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleRecord {
    pub rule: Rule,
    pub n: usize,
    pub m: usize,
    pub subproblems: Vec<(usize, usize)>,
}

/// Preorder log of every rule applied during one computation. Memoized
/// subproblems contribute no steps; replay reproduces the same hits.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub strategy: Strategy,
    pub steps: Vec<RuleRecord>,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Auto
    }
}

/// Computes the chromatic polynomial of `g` with the given strategy.
pub fn chromatic_polynomial(g: &SimpleGraph, strategy: Strategy) -> Result<(IntPoly, ReductionTrace)> {
    if g.n() > MAX_CHROMATIC_VERTICES {
        return Err(Error::TooLarge(format!(
            "chromatic polynomial supports at most {MAX_CHROMATIC_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    let mut ctx = Ctx { strategy, memo: HashMap::new(), sink: Sink::Record(Vec::new()) };
    let poly = ctx.reduce(g)?;
    let steps = match ctx.sink {
        Sink::Record(steps) => steps,
        Sink::Verify { .. } => unreachable!(),
    };
    Ok((poly, ReductionTrace { strategy, steps }))
}

/// Re-derives the polynomial by running the strategy against the recorded
/// trace, failing on the first divergent step.
pub fn replay_trace(g: &SimpleGraph, trace: &ReductionTrace) -> Result<IntPoly> {
    if g.n() > MAX_CHROMATIC_VERTICES {
        return Err(Error::TooLarge("graph too large for replay".into()));
    }
    let mut ctx = Ctx {
        strategy: trace.strategy,
        memo: HashMap::new(),
        sink: Sink::Verify { steps: &trace.steps, cursor: 0 },
    };
    let poly = ctx.reduce(g)?;
    match ctx.sink {
        Sink::Verify { steps, cursor } if cursor == steps.len() => Ok(poly),
        Sink::Verify { cursor, .. } => Err(Error::PreconditionFailed(format!(
            "trace replay consumed {cursor} steps of {}",
            trace.steps.len()
        ))),
        Sink::Record(_) => unreachable!(),
    }
}

enum Sink<'a> {
    Record(Vec<RuleRecord>),
    Verify { steps: &'a [RuleRecord], cursor: usize },
}

struct Ctx<'a> {
    strategy: Strategy,
    memo: HashMap<Vec<u8>, IntPoly>,
    sink: Sink<'a>,
}

impl<'a> Ctx<'a> {
    fn emit(&mut self, record: RuleRecord) -> Result<()> {
        match &mut self.sink {
            Sink::Record(steps) => {
                steps.push(record);
                Ok(())
            }
            Sink::Verify { steps, cursor } => {
                let expected = steps.get(*cursor).ok_or_else(|| {
                    Error::PreconditionFailed(format!("trace ended early at step {cursor}"))
                })?;
                if *expected != record {
                    return Err(Error::PreconditionFailed(format!(
                        "trace replay diverged at step {cursor}: recorded {expected:?}, derived {record:?}"
                    )));
                }
                *cursor += 1;
                Ok(())
            }
        }
    }

    fn reduce(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        let n = g.n();
        let m = g.edge_count();
        if n == 0 {
            self.emit(RuleRecord { rule: Rule::BaseClique, n, m, subproblems: vec![] })?;
            return Ok(IntPoly::one());
        }

        // Disconnected graphs split as a gluing over the empty clique.
        let components = g.components();
        if components.len() > 1 {
            let first = g.induced_subgraph(&components[0]);
            let rest_verts: Vec<usize> =
                components[1..].iter().flatten().copied().collect();
            let rest = g.induced_subgraph(&rest_verts);
            self.emit(RuleRecord {
                rule: Rule::CliqueGlue { r: 0 },
                n,
                m,
                subproblems: vec![size_of(&first), size_of(&rest)],
            })?;
            let a = self.reduce(&first)?;
            let b = self.reduce(&rest)?;
            return Ok(&a * &b);
        }

        let memo_key = if n <= MEMO_MAX_VERTICES {
            let key = canonical_form(g).expect("within canonical cap");
            if let Some(hit) = self.memo.get(&key) {
                return Ok(hit.clone());
            }
            Some(key)
        } else {
            None
        };

        let poly = match self.strategy {
            Strategy::Auto => self.reduce_auto(g)?,
            Strategy::PureDeleteContract => self.reduce_pure(g)?,
            Strategy::ClosureFirst => self.reduce_closure(g)?,
        };
        if let Some(key) = memo_key {
            self.memo.insert(key, poly.clone());
        }
        Ok(poly)
    }

    fn base_clique(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        self.emit(RuleRecord {
            rule: Rule::BaseClique,
            n: g.n(),
            m: g.edge_count(),
            subproblems: vec![],
        })?;
        Ok(falling_factorial(g.n(), 0))
    }

    fn base_cycle(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        self.emit(RuleRecord {
            rule: Rule::BaseCycle,
            n: g.n(),
            m: g.edge_count(),
            subproblems: vec![],
        })?;
        let n = g.n();
        let xm1 = IntPoly::from_i64_coeffs(&[-1, 1]);
        let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
        Ok(&xm1.pow(n) + &xm1.scale(&BigInt::from(sign)))
    }

    fn base_tree(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        self.emit(RuleRecord {
            rule: Rule::BaseTree,
            n: g.n(),
            m: g.edge_count(),
            subproblems: vec![],
        })?;
        let xm1 = IntPoly::from_i64_coeffs(&[-1, 1]);
        Ok(&IntPoly::x() * &xm1.pow(g.n() - 1))
    }

    fn reduce_auto(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        let n = g.n();
        let m = g.edge_count();
        if g.is_complete() {
            return self.base_clique(g);
        }
        if g.is_cycle_graph() {
            return self.base_cycle(g);
        }
        if g.is_tree() {
            return self.base_tree(g);
        }

        if let Some((r, g1, g2)) = find_clique_separator(g) {
            self.emit(RuleRecord {
                rule: Rule::CliqueGlue { r },
                n,
                m,
                subproblems: vec![size_of(&g1), size_of(&g2)],
            })?;
            let a = self.reduce(&g1)?;
            let b = self.reduce(&g2)?;
            return (&a * &b).div_exact(&falling_factorial(r, 0));
        }

        if let Some(u) = (0..n).find(|&u| g.degree(u) == n - 1) {
            let reduced = g.delete_vertex(u)?;
            self.emit(RuleRecord {
                rule: Rule::DominatedVertex { u },
                n,
                m,
                subproblems: vec![size_of(&reduced)],
            })?;
            let sub = self.reduce(&reduced)?;
            return Ok(&IntPoly::x() * &sub.shift_down_one());
        }

        // Dense graphs head toward cliques, sparse ones toward forests.
        if 4 * m >= n * (n - 1) {
            let (u, v) = best_nonadjacent_pair(g).expect("not complete");
            let plus = g.add_edge(u, v)?;
            let merged = g.contract(u, v)?;
            self.emit(RuleRecord {
                rule: Rule::DeleteContract { u, v },
                n,
                m,
                subproblems: vec![size_of(&plus), size_of(&merged)],
            })?;
            let a = self.reduce(&plus)?;
            let b = self.reduce(&merged)?;
            Ok(&a + &b)
        } else {
            let (u, v) = best_edge(g).expect("not a forest");
            let minus = g.delete_edge(u, v)?;
            let merged = g.contract(u, v)?;
            self.emit(RuleRecord {
                rule: Rule::DeleteContract { u, v },
                n,
                m,
                subproblems: vec![size_of(&minus), size_of(&merged)],
            })?;
            let a = self.reduce(&minus)?;
            let b = self.reduce(&merged)?;
            Ok(&a - &b)
        }
    }

    fn reduce_pure(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        if g.is_tree() {
            return self.base_tree(g);
        }
        let (u, v) = *g.edges().first().expect("connected non-tree has an edge");
        let minus = g.delete_edge(u, v)?;
        let merged = g.contract(u, v)?;
        self.emit(RuleRecord {
            rule: Rule::DeleteContract { u, v },
            n: g.n(),
            m: g.edge_count(),
            subproblems: vec![size_of(&minus), size_of(&merged)],
        })?;
        let a = self.reduce(&minus)?;
        let b = self.reduce(&merged)?;
        Ok(&a - &b)
    }

    fn reduce_closure(&mut self, g: &SimpleGraph) -> Result<IntPoly> {
        if g.is_complete() {
            return self.base_clique(g);
        }
        let n = g.n();
        let u = (0..n)
            .filter(|&u| g.degree(u) < n - 1)
            .max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u)))
            .expect("not complete");
        let non_neighbors: Vec<usize> =
            (0..n).filter(|&w| w != u && !g.has_edge(u, w)).collect();

        // Children: the closure graph (u made universal) first, then each
        // contraction of u with its j-th non-neighbor after joining the
        // earlier ones.
        let mut children: Vec<SimpleGraph> = Vec::with_capacity(non_neighbors.len() + 1);
        let mut acc = g.clone();
        for &w in &non_neighbors {
            children.push(acc.contract(w, u)?);
            acc = acc.add_edge(w, u)?;
        }
        children.insert(0, acc);

        self.emit(RuleRecord {
            rule: Rule::ClosureExpansion { u },
            n,
            m: g.edge_count(),
            subproblems: children.iter().map(size_of).collect(),
        })?;
        let mut total = IntPoly::zero();
        for child in &children {
            let p = self.reduce(child)?;
            total = &total + &p;
        }
        Ok(total)
    }
}

fn size_of(g: &SimpleGraph) -> (usize, usize) {
    (g.n(), g.edge_count())
}

/// Smallest clique separator of size 1..=3, returned with the deterministic
/// split: the separator plus its least component, against all the rest.
fn find_clique_separator(g: &SimpleGraph) -> Option<(usize, SimpleGraph, SimpleGraph)> {
    let n = g.n();
    let subsets: Vec<Vec<usize>> = {
        let mut s: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    s.push(vec![u, v]);
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    if g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w) {
                        s.push(vec![u, v, w]);
                    }
                }
            }
        }
        s.sort_by_key(|s| (s.len(), s.clone()));
        s
    };
    for sep in subsets {
        let rest: Vec<usize> = (0..n).filter(|v| !sep.contains(v)).collect();
        if rest.is_empty() {
            continue;
        }
        let outside = g.induced_subgraph(&rest);
        let comps = outside.components();
        if comps.len() < 2 {
            continue;
        }
        let mut side: Vec<usize> = comps[0].iter().map(|&i| rest[i]).collect();
        side.extend(&sep);
        side.sort_unstable();
        let mut other: Vec<usize> = comps[1..]
            .iter()
            .flatten()
            .map(|&i| rest[i])
            .collect();
        other.extend(&sep);
        other.sort_unstable();
        return Some((sep.len(), g.induced_subgraph(&side), g.induced_subgraph(&other)));
    }
    None
}

/// Non-adjacent pair with the most common neighbors, ties to the smallest
/// pair; `None` on complete graphs.
fn best_nonadjacent_pair(g: &SimpleGraph) -> Option<(usize, usize)> {
    let mut best: Option<(usize, (usize, usize))> = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                let common = (g.neighbors_mask(u) & g.neighbors_mask(v)).count_ones() as usize;
                if best.as_ref().map_or(true, |&(c, _)| common > c) {
                    best = Some((common, (u, v)));
                }
            }
        }
    }
    best.map(|(_, pair)| pair)
}

/// Edge with the most common neighbors, ties to the smallest pair.
fn best_edge(g: &SimpleGraph) -> Option<(usize, usize)> {
    let mut best: Option<(usize, (usize, usize))> = None;
    for (u, v) in g.edges() {
        let common = (g.neighbors_mask(u) & g.neighbors_mask(v)).count_ones() as usize;
        if best.as_ref().map_or(true, |&(c, _)| common > c) {
            best = Some((common, (u, v)));
        }
    }
    best.map(|(_, pair)| pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::polyalg::f_bound;

    fn chrom(g: &SimpleGraph) -> IntPoly {
        chromatic_polynomial(g, Strategy::Auto).unwrap().0
    }

    #[test]
    fn complete_graphs_are_falling_factorials() {
        for n in 1..=6 {
            assert_eq!(chrom(&families::complete(n).unwrap()), falling_factorial(n, 0));
        }
    }

    #[test]
    fn cycles_match_closed_form() {
        let xm1 = IntPoly::from_i64_coeffs(&[-1, 1]);
        for n in 3..=9 {
            let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
            let expect = &xm1.pow(n) + &xm1.scale(&BigInt::from(sign));
            assert_eq!(chrom(&families::cycle(n).unwrap()), expect, "C_{n}");
        }
    }

    #[test]
    fn trees_and_disconnected_graphs() {
        let xm1 = IntPoly::from_i64_coeffs(&[-1, 1]);
        assert_eq!(
            chrom(&families::path(5).unwrap()),
            &IntPoly::x() * &xm1.pow(4)
        );
        // Two disjoint edges: (x(x-1))^2.
        let g = SimpleGraph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let edge = &IntPoly::x() * &xm1;
        assert_eq!(chrom(&g), &edge * &edge);
    }

    #[test]
    fn extremal_family_matches_bound_polynomial() {
        for (n, k) in [(5, 4), (6, 4), (7, 5)] {
            let g = families::g_nk(n, k).unwrap();
            assert_eq!(chrom(&g), f_bound(n, k).unwrap(), "g_nk({n},{k})");
        }
    }

    #[test]
    fn strategies_agree_on_fixtures() {
        for f in families::all_fixtures() {
            let auto = chromatic_polynomial(&f.graph, Strategy::Auto).unwrap().0;
            let pure = chromatic_polynomial(&f.graph, Strategy::PureDeleteContract).unwrap().0;
            let closure = chromatic_polynomial(&f.graph, Strategy::ClosureFirst).unwrap().0;
            assert_eq!(auto, pure, "{}", f.name.as_str());
            assert_eq!(auto, closure, "{}", f.name.as_str());
        }
    }

    #[test]
    fn fixture_polynomials_match_published_values() {
        for f in families::all_fixtures() {
            if let Some(expect) = &f.expected_poly {
                assert_eq!(&chrom(&f.graph), expect, "{}", f.name.as_str());
            }
        }
    }

    #[test]
    fn structural_sanity_of_chromatic_polynomials() {
        // Degree n, monic, alternating signs, zero constant term, and the
        // x^{n-1} coefficient is minus the edge count.
        let g = families::g_nk(7, 4).unwrap();
        let p = chrom(&g);
        assert_eq!(p.degree(), Some(7));
        assert_eq!(p.leading_coefficient().unwrap(), &BigInt::from(1));
        assert_eq!(p.coefficient(6), BigInt::from(-(g.edge_count() as i64)));
        assert_eq!(p.coefficient(0), BigInt::from(0));
        for i in 1..=7 {
            let c = p.coefficient(i);
            if c != BigInt::from(0) {
                let expect_positive = (7 - i) % 2 == 0;
                assert_eq!(c > BigInt::from(0), expect_positive, "coefficient of x^{i}");
            }
        }
    }

    #[test]
    fn replay_reproduces_and_detects_tampering() {
        let g = families::g_nk(6, 4).unwrap();
        let (p, trace) = chromatic_polynomial(&g, Strategy::Auto).unwrap();
        assert_eq!(replay_trace(&g, &trace).unwrap(), p);

        let mut bad = trace.clone();
        bad.steps.truncate(bad.steps.len() - 1);
        assert!(replay_trace(&g, &bad).is_err());

        // Replaying against a different graph diverges.
        let other = families::cycle(6).unwrap();
        assert!(replay_trace(&other, &trace).is_err());
    }

    #[test]
    fn trace_serializes() {
        let g = families::complete(4).unwrap();
        let (_, trace) = chromatic_polynomial(&g, Strategy::Auto).unwrap();
        let js = serde_json::to_value(&trace).unwrap();
        assert_eq!(js["steps"][0]["rule"], "BaseClique");
    }

    #[test]
    fn rejects_large_graphs() {
        let g = SimpleGraph::empty(17).unwrap();
        assert!(matches!(
            chromatic_polynomial(&g, Strategy::Auto),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn closure_strategy_handles_disconnected_input() {
        let g = SimpleGraph::from_edge_list(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let a = chromatic_polynomial(&g, Strategy::ClosureFirst).unwrap().0;
        assert_eq!(a, chrom(&g));
    }
}
