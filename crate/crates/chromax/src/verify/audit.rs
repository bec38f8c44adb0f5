//! Structural cut-set audits.
//!
//! Each audit checks one structural statement about k-chromatic graphs with
//! independence number two: hypotheses are tested, never assumed, and every
//! itemized conclusion is evaluated on every qualifying cut-set. A row with
//! `hypothesis_met` and a false conclusion is a red-flag finding.

use serde::Serialize;

use crate::graphcore::{
    chromatic_number, clique_number, independence_number, vertex_connectivity, SimpleGraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaId {
    /// Stable cut-sets of size at most two in connected graphs with
    /// independence number two: exactly two components, both complete, each
    /// cut vertex complete to one side, a component needs at least k-1
    /// colors; with a 2-cut and clique number below k the components are
    /// K_{k-1} and K_{k-2} with the published attachment pattern.
    StableCutset,
    /// Clique cut-sets of size at most two force the clique number up to k.
    CliqueCutset,
    /// Non-clique 3-cuts in 3-connected graphs: two complete components,
    /// attachment as above, a component needs at least k-2 colors; below
    /// clique number k the components are {K_{k-1}, K_{k-3}} or two K_{k-2}.
    NonCliqueThreeCut,
}

impl LemmaId {
    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::StableCutset => "stable_cutset",
            LemmaId::CliqueCutset => "clique_cutset",
            LemmaId::NonCliqueThreeCut => "non_clique_three_cut",
        }
    }
}

/// Audit outcome for one lemma on one graph. `conclusion_holds` is `None`
/// when the hypotheses are not met (nothing to evaluate).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub lemma: LemmaId,
    pub hypothesis_met: bool,
    pub conclusion_holds: Option<bool>,
}

impl LemmaAudit {
    pub fn is_red_flag(&self) -> bool {
        self.hypothesis_met && self.conclusion_holds == Some(false)
    }
}

/// Runs all three audits on one graph.
pub fn audit_structure_lemmas(g: &SimpleGraph) -> Vec<LemmaAudit> {
    let ctx = AuditContext::new(g);
    vec![
        ctx.stable_cutset_audit(),
        ctx.clique_cutset_audit(),
        ctx.non_clique_three_cut_audit(),
    ]
}

struct AuditContext<'a> {
    g: &'a SimpleGraph,
    connected: bool,
    alpha: usize,
    chi: usize,
    omega: usize,
}

impl<'a> AuditContext<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let connected = g.n() > 0 && g.is_connected();
        AuditContext {
            g,
            connected,
            alpha: independence_number(g),
            chi: chromatic_number(g),
            omega: clique_number(g),
        }
    }

    fn cutsets(&self, size: usize) -> Vec<Vec<usize>> {
        let n = self.g.n();
        if n <= size {
            return Vec::new();
        }
        subsets(n, size)
            .into_iter()
            .filter(|s| {
                let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
                self.g.induced_subgraph(&rest).components().len() >= 2
            })
            .collect()
    }

    fn is_stable(&self, s: &[usize]) -> bool {
        s.iter().all(|&u| s.iter().all(|&v| u == v || !self.g.has_edge(u, v)))
    }

    fn is_clique(&self, s: &[usize]) -> bool {
        s.iter().all(|&u| s.iter().all(|&v| u == v || self.g.has_edge(u, v)))
    }

    /// Components of G minus the cut-set, as original vertex lists.
    fn split(&self, s: &[usize]) -> Vec<Vec<usize>> {
        let rest: Vec<usize> = (0..self.g.n()).filter(|v| !s.contains(v)).collect();
        self.g
            .induced_subgraph(&rest)
            .components()
            .into_iter()
            .map(|comp| comp.into_iter().map(|i| rest[i]).collect())
            .collect()
    }

    fn stable_cutset_audit(&self) -> LemmaAudit {
        let mut qualifying = Vec::new();
        if self.connected && self.alpha == 2 {
            for size in 1..=2 {
                qualifying.extend(self.cutsets(size).into_iter().filter(|s| self.is_stable(s)));
            }
        }
        if qualifying.is_empty() {
            return LemmaAudit {
                lemma: LemmaId::StableCutset,
                hypothesis_met: false,
                conclusion_holds: None,
            };
        }
        let holds = qualifying.iter().all(|s| self.stable_cutset_conclusions(s));
        LemmaAudit {
            lemma: LemmaId::StableCutset,
            hypothesis_met: true,
            conclusion_holds: Some(holds),
        }
    }

    fn stable_cutset_conclusions(&self, s: &[usize]) -> bool {
        let k = self.chi;
        let comps = self.split(s);
        // (i) exactly two components, (ii) both complete
        if comps.len() != 2 {
            return false;
        }
        if !comps.iter().all(|c| self.g.induced_subgraph(c).is_complete()) {
            return false;
        }
        // (iii) every cut vertex sees one whole side
        if !s.iter().all(|&u| self.covers_side(u, &comps)) {
            return false;
        }
        // (iv) some component needs at least k-1 colors
        let max_chi = comps
            .iter()
            .map(|c| chromatic_number(&self.g.induced_subgraph(c)))
            .max()
            .unwrap_or(0);
        if max_chi + 1 < k {
            return false;
        }
        // The 2-cut, clique-number-below-k refinement.
        if s.len() == 2 && self.omega < k {
            let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
            sizes.sort_unstable();
            if k < 2 || sizes != vec![k - 2, k - 1] {
                return false;
            }
            let big = comps.iter().find(|c| c.len() == k - 1).unwrap();
            let small = comps.iter().find(|c| c.len() == k - 2).unwrap();
            // Every cut vertex misses someone in the big side, no two cut
            // vertices miss the same one, and both see all of the small side.
            let non_neighbors: Vec<Vec<usize>> = s
                .iter()
                .map(|&u| big.iter().copied().filter(|&w| !self.g.has_edge(u, w)).collect())
                .collect();
            if non_neighbors.iter().any(|nn| nn.is_empty()) {
                return false;
            }
            if non_neighbors[0].iter().any(|w| non_neighbors[1].contains(w)) {
                return false;
            }
            if !s
                .iter()
                .all(|&u| small.iter().all(|&w| self.g.has_edge(u, w)))
            {
                return false;
            }
        }
        true
    }

    fn covers_side(&self, u: usize, comps: &[Vec<usize>]) -> bool {
        comps
            .iter()
            .any(|c| c.iter().all(|&w| self.g.has_edge(u, w)))
    }

    fn clique_cutset_audit(&self) -> LemmaAudit {
        let mut met = false;
        if self.connected && self.alpha == 2 {
            for size in 1..=2 {
                if self.cutsets(size).into_iter().any(|s| self.is_clique(&s)) {
                    met = true;
                    break;
                }
            }
        }
        LemmaAudit {
            lemma: LemmaId::CliqueCutset,
            hypothesis_met: met,
            conclusion_holds: met.then(|| self.omega == self.chi),
        }
    }

    fn non_clique_three_cut_audit(&self) -> LemmaAudit {
        let mut qualifying = Vec::new();
        if self.connected && self.alpha == 2 && vertex_connectivity(self.g) >= 3 {
            qualifying
                .extend(self.cutsets(3).into_iter().filter(|s| !self.is_clique(s)));
        }
        if qualifying.is_empty() {
            return LemmaAudit {
                lemma: LemmaId::NonCliqueThreeCut,
                hypothesis_met: false,
                conclusion_holds: None,
            };
        }
        let holds = qualifying.iter().all(|s| self.three_cut_conclusions(s));
        LemmaAudit {
            lemma: LemmaId::NonCliqueThreeCut,
            hypothesis_met: true,
            conclusion_holds: Some(holds),
        }
    }

    fn three_cut_conclusions(&self, s: &[usize]) -> bool {
        let k = self.chi;
        let comps = self.split(s);
        if comps.len() != 2 {
            return false;
        }
        if !comps.iter().all(|c| self.g.induced_subgraph(c).is_complete()) {
            return false;
        }
        if !s.iter().all(|&u| self.covers_side(u, &comps)) {
            return false;
        }
        let max_chi = comps
            .iter()
            .map(|c| chromatic_number(&self.g.induced_subgraph(c)))
            .max()
            .unwrap_or(0);
        if max_chi + 2 < k {
            return false;
        }
        if self.omega < k {
            let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
            sizes.sort_unstable();
            let unbalanced = k >= 3 && sizes == vec![k - 3, k - 1];
            let balanced = k >= 2 && sizes == vec![k - 2, k - 2];
            if !unbalanced && !balanced {
                return false;
            }
        }
        true
    }
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, size, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, size, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn audit_of(g: &SimpleGraph, lemma: LemmaId) -> LemmaAudit {
        audit_structure_lemmas(g)
            .into_iter()
            .find(|a| a.lemma == lemma)
            .unwrap()
    }

    #[test]
    fn t1_meets_and_passes_the_three_cut_audit() {
        // The cut {u, w, v} leaves K_3 and K_1: the {K_{k-1}, K_{k-3}} case.
        let f = families::fixture(families::FixtureName::fig5_T1);
        let a = audit_of(&f.graph, LemmaId::NonCliqueThreeCut);
        assert!(a.hypothesis_met);
        assert_eq!(a.conclusion_holds, Some(true));
    }

    #[test]
    fn fig6_meets_and_passes_as_the_balanced_case() {
        let f = families::fixture(families::FixtureName::fig6);
        let a = audit_of(&f.graph, LemmaId::NonCliqueThreeCut);
        assert!(a.hypothesis_met);
        assert_eq!(a.conclusion_holds, Some(true));
    }

    #[test]
    fn g64_passes_whatever_cutset_audits_it_meets() {
        let g = families::g_nk(6, 4).unwrap();
        for a in audit_structure_lemmas(&g) {
            assert!(!a.is_red_flag(), "{:?}", a);
        }
    }

    #[test]
    fn c5_stable_cutset_audit_passes() {
        // C_5: stable 2-cuts leave an edge and a vertex, both complete.
        let a = audit_of(&families::cycle(5).unwrap(), LemmaId::StableCutset);
        assert!(a.hypothesis_met);
        assert_eq!(a.conclusion_holds, Some(true));
    }

    #[test]
    fn hypothesis_not_met_leaves_conclusion_unevaluated() {
        // K_4 has no cut-set at all.
        for a in audit_structure_lemmas(&families::complete(4).unwrap()) {
            assert!(!a.hypothesis_met);
            assert_eq!(a.conclusion_holds, None);
        }
        // Path has stable cut vertices but independence number 3.
        let a = audit_of(&families::path(5).unwrap(), LemmaId::StableCutset);
        assert!(!a.hypothesis_met);
    }

    #[test]
    fn clique_cutset_forces_full_clique_number() {
        // Triangle with a pendant vertex: cut vertex is a 1-clique cut,
        // alpha = 2, and indeed omega = chi = 3.
        let g = SimpleGraph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let a = audit_of(&g, LemmaId::CliqueCutset);
        assert!(a.hypothesis_met);
        assert_eq!(a.conclusion_holds, Some(true));
    }
}
