//! R_h-vertex-cuts, exact h-extra connectivity, and the minimum neighborhood of a 3-vertex subgraph.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::flow::{CutOutcome, Role, SplitNetwork};
use crate::graph::{Graph, Scratch, Triple, TripleKind, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KappaStatus {
    /// `lower == upper` and the witness is a verified R_h-cut.
    Exact,
    /// The search stopped early; only the bounds are proven.
    Bracket,
    /// The graph has no R_h-cut at all.
    NotRhGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaResult {
    pub h: usize,
    pub status: KappaStatus,
    pub lower: usize,
    /// `None` when no R_h-cut is known.
    pub upper: Option<usize>,
    pub witness: Option<VertexSet>,
    pub flow_calls: u64,
}

impl KappaResult {
    pub fn value(&self) -> Option<usize> {
        (self.status == KappaStatus::Exact).then_some(self.lower)
    }

    pub fn report(&self, g: &Graph) -> KappaReport {
        KappaReport {
            h: self.h,
            status: self.status,
            lower: self.lower,
            upper: self.upper,
            witness: self.witness.as_ref().map(|w| w.labels(g)),
            flow_calls: self.flow_calls,
        }
    }
}

/// Serializable form of [`KappaResult`] with vertex labels.
#[derive(Debug, Clone, Serialize)]
pub struct KappaReport {
    pub h: usize,
    pub status: KappaStatus,
    pub lower: usize,
    pub upper: Option<usize>,
    pub witness: Option<Vec<String>>,
    pub flow_calls: u64,
}

pub fn is_rh_cut(g: &Graph, f: &VertexSet, h: usize) -> bool {
    g.is_rh_cut(f, h)
}

pub fn is_rh_graph(g: &Graph, h: usize, budget: &Budget) -> Result<bool> {
    let r = kappa_h(g, h, budget)?;
    Ok(r.upper.is_some())
}

/// Minimum `|N(T)|` over connected 3-vertex subgraphs `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinNeighborhood {
    pub t: usize,
    pub witness: Triple,
}

impl MinNeighborhood {
    pub fn kind(&self) -> TripleKind {
        self.witness.kind
    }
}

/// First minimizer in the canonical order of connected 3-sets.
pub fn min_neighbor_3subgraph(g: &Graph) -> Result<MinNeighborhood> {
    min_neighbor_of_kind(g, None)
}

/// Like [`min_neighbor_3subgraph`] restricted to paths or to triangles.
pub fn min_neighbor_of_kind(g: &Graph, kind: Option<TripleKind>) -> Result<MinNeighborhood> {
    let mut best: Option<MinNeighborhood> = None;
    for triple in g.connected_triples() {
        if kind.is_some_and(|k| k != triple.kind) {
            continue;
        }
        let t = g.neighbor_set(&triple.set)?.len();
        if best.as_ref().is_none_or(|b| t < b.t) {
            best = Some(MinNeighborhood { t, witness: triple });
        }
    }
    best.ok_or_else(|| Error::Domain("graph has no connected 3-vertex subgraph of the requested kind".into()))
}

/// All minimizers of `|N(T)|`, in canonical order.
pub fn min_neighbor_3subgraphs(g: &Graph) -> Result<(usize, Vec<Triple>)> {
    let scored: Vec<(usize, Triple)> = g
        .connected_triples()
        .into_iter()
        .map(|t| (g.neighbor_set(&t.set).map(|x| x.len()).unwrap_or(usize::MAX), t))
        .collect();
    let best = scored
        .iter()
        .map(|(s, _)| *s)
        .min()
        .ok_or_else(|| Error::Domain("graph has no connected 3-vertex subgraph".into()))?;
    Ok((best, scored.into_iter().filter(|(s, _)| *s == best).map(|(_, t)| t).collect()))
}

/// Connected vertex sets of `size` containing `c` and avoiding `blocked`, sorted.
fn connected_sets_containing(g: &Graph, c: usize, size: usize, blocked: &[bool]) -> Vec<Vec<usize>> {
    let mut found = BTreeSet::new();
    let mut stack = vec![vec![c]];
    while let Some(set) = stack.pop() {
        if set.len() == size {
            found.insert(set);
            continue;
        }
        for &u in &set {
            for &w in g.adj(u) {
                if !blocked[w] && !set.contains(&w) {
                    let mut next = set.clone();
                    next.push(w);
                    next.sort_unstable();
                    if !found.contains(&next) && !stack.contains(&next) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

struct UpperBound {
    size: usize,
    cut: VertexSet,
}

/// Shrinks an R_h-cut greedily while it stays an R_h-cut.
fn minimalize(g: &Graph, cut: &VertexSet, h: usize) -> VertexSet {
    let mut cur: Vec<usize> = cut.members().to_vec();
    let mut i = 0;
    while i < cur.len() {
        let mut trial = cur.clone();
        trial.remove(i);
        if g.is_rh_cut(&VertexSet::new(trial.iter().copied()), h) {
            cur = trial;
        } else {
            i += 1;
        }
    }
    VertexSet::new(cur)
}

// Neighborhoods of connected (h+1)-sets, with undersized components absorbed.
fn upper_phase(g: &Graph, h: usize, seeds: &[VertexSet]) -> Option<UpperBound> {
    let mut best: Option<UpperBound> = None;
    for t in seeds {
        let x = g.neighbor_set(t).expect("seed sets are valid");
        if x.is_empty() {
            continue;
        }
        let candidate = if g.is_rh_cut(&x, h) {
            Some(x)
        } else {
            let small: Vec<usize> =
                g.components(&x).into_iter().filter(|c| c.len() <= h).flat_map(|c| c.members().to_vec()).collect();
            let absorbed = x.union(&VertexSet::new(small));
            g.is_rh_cut(&absorbed, h).then_some(absorbed)
        };
        if let Some(c) = candidate {
            if best.as_ref().is_some_and(|b| c.len() >= b.size + h + 2) {
                continue;
            }
            let c = minimalize(g, &c, h);
            if best.as_ref().is_none_or(|b| c.len() < b.size) {
                best = Some(UpperBound { size: c.len(), cut: c });
            }
        }
    }
    best
}

struct RootSearch<'a> {
    g: &'a Graph,
    h: usize,
    net: SplitNetwork,
    sources: Vec<usize>,
    sink: usize,
    best: usize,
    witness: Option<Vec<usize>>,
    aborted: bool,
    meter: &'a Meter,
    scratch: Scratch,
}

impl RootSearch<'_> {
    fn search(&mut self, deleted: &mut Vec<usize>, roles: &mut Vec<Role>) {
        if self.aborted || deleted.len() >= self.best {
            return;
        }
        if !self.meter.charge_flow() {
            self.aborted = true;
            return;
        }
        let limit = self.best - deleted.len();
        let cut = match self.net.min_cut(&self.sources, &[self.sink], roles, limit) {
            CutOutcome::Cut(s) => s,
            CutOutcome::AtLeast(_) | CutOutcome::Inseparable => return,
        };
        let n = self.g.vertex_count();
        let mut removed = vec![false; n];
        for &v in deleted.iter().chain(&cut) {
            removed[v] = true;
        }
        let pick = self.smallest_in_small_component(&removed);
        let Some(c) = pick else {
            let mut f: Vec<usize> = deleted.iter().chain(&cut).copied().collect();
            f.sort_unstable();
            self.best = f.len();
            self.witness = Some(f);
            return;
        };
        if roles[c] == Role::Normal {
            deleted.push(c);
            roles[c] = Role::Deleted;
            self.search(deleted, roles);
            roles[c] = Role::Normal;
            deleted.pop();
        }
        let blocked: Vec<bool> = roles.iter().map(|r| *r == Role::Deleted).collect();
        for k in connected_sets_containing(self.g, c, self.h + 1, &blocked) {
            let fresh: Vec<usize> = k.into_iter().filter(|&v| roles[v] == Role::Normal).collect();
            if fresh.is_empty() {
                continue;
            }
            fresh.iter().for_each(|&v| roles[v] = Role::Protected);
            self.search(deleted, roles);
            fresh.iter().for_each(|&v| roles[v] = Role::Normal);
        }
    }

    fn smallest_in_small_component(&mut self, removed: &[bool]) -> Option<usize> {
        let n = self.g.vertex_count();
        self.scratch.reset(n);
        let mut pick: Option<usize> = None;
        for s in 0..n {
            if removed[s] || self.scratch.seen(s) {
                continue;
            }
            self.scratch.visit(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &w in self.g.adj(u) {
                    if !removed[w] && !self.scratch.seen(w) {
                        self.scratch.visit(w);
                        comp.push(w);
                    }
                }
                i += 1;
            }
            if comp.len() <= self.h {
                // `s` is the smallest vertex of its component since scanning is ascending.
                pick = Some(pick.map_or(s, |p| p.min(s)));
            }
        }
        pick
    }
}

struct RootOutcome {
    best: Option<(usize, Vec<usize>)>,
    aborted: bool,
}

/// Exact `κ_h` by a pairwise branch-and-bound over separators.
///
/// Every R_h-cut separates a connected (h+1)-set `A` from a vertex `b` in another
/// component. For each such root the search finds the smallest separator `S` of `A`
/// from `b` (given already-deleted vertices `D` and protected vertices `P`). If
/// `D ∪ S` leaves an undersized component, its smallest vertex `c` is either added to
/// `D` or protected together with a connected (h+1)-set around it. Vertex-transitive
/// graphs only need roots whose `A` contains vertex 0.
pub fn kappa_h(g: &Graph, h: usize, budget: &Budget) -> Result<KappaResult> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Domain("extra connectivity needs a connected graph".into()));
    }
    let meter = Meter::new(budget);
    let subsets = g.connected_subsets(h + 1);
    let anchored: Vec<VertexSet> = if g.is_vertex_transitive() {
        subsets.iter().filter(|s| s.contains(0)).cloned().collect()
    } else {
        subsets.clone()
    };
    let upper = upper_phase(g, h, &anchored);
    let cap = upper.as_ref().map_or(g.vertex_count(), |u| u.size);

    let n = g.vertex_count();
    let mut roots = Vec::new();
    for a in &anchored {
        let closed = a.union(&g.neighbor_set(a)?);
        for b in (0..n).filter(|&b| !closed.contains(b)) {
            roots.push((a.clone(), b));
        }
    }
    let base_net = SplitNetwork::new(g);
    let outcomes: Vec<RootOutcome> = roots
        .par_iter()
        .map_init(
            || base_net.clone(),
            |net, (a, b)| {
                if meter.exhausted() {
                    return RootOutcome { best: None, aborted: true };
                }
                let mut roles = vec![Role::Normal; n];
                a.iter().for_each(|v| roles[v] = Role::Protected);
                roles[*b] = Role::Protected;
                let mut rs = RootSearch {
                    g,
                    h,
                    net: std::mem::replace(net, SplitNetwork::empty()),
                    sources: a.members().to_vec(),
                    sink: *b,
                    best: cap,
                    witness: None,
                    aborted: false,
                    meter: &meter,
                    scratch: Scratch::default(),
                };
                rs.search(&mut Vec::new(), &mut roles);
                *net = rs.net;
                RootOutcome { best: rs.witness.map(|w| (w.len(), w)), aborted: rs.aborted }
            },
        )
        .collect();

    let aborted = outcomes.iter().any(|o| o.aborted);
    let found = outcomes.into_iter().filter_map(|o| o.best).min_by_key(|(s, _)| *s);
    let (best_size, witness) = match (found, upper) {
        (Some((s, w)), _) => (Some(s), Some(VertexSet::new(w))),
        (None, Some(u)) => (Some(u.size), Some(u.cut)),
        (None, None) => (None, None),
    };
    if let Some(w) = &witness {
        if !g.is_rh_cut(w, h) {
            return Err(Error::WitnessInvalid("engine produced a set that is not an R_h-cut".into()));
        }
    }
    let flow_calls = meter.flow_calls();
    Ok(match (aborted, best_size) {
        (false, Some(s)) => {
            KappaResult { h, status: KappaStatus::Exact, lower: s, upper: Some(s), witness, flow_calls }
        }
        (false, None) => {
            KappaResult { h, status: KappaStatus::NotRhGraph, lower: 0, upper: None, witness: None, flow_calls }
        }
        (true, upper) => KappaResult { h, status: KappaStatus::Bracket, lower: 1, upper, witness, flow_calls },
    })
}

pub const BRUTE_MAX_VERTICES: usize = 40;
pub const BRUTE_MAX_SUBSET: usize = 8;

/// Exhaustive `κ_h` by subsets of increasing size; independent of the flow engine.
pub fn kappa_h_brute(g: &Graph, h: usize, size_cap: usize) -> Result<KappaResult> {
    let n = g.vertex_count();
    if n > BRUTE_MAX_VERTICES || size_cap > BRUTE_MAX_SUBSET {
        return Err(Error::Budget(format!(
            "brute force is limited to {BRUTE_MAX_VERTICES} vertices and subsets of {BRUTE_MAX_SUBSET}, got {n} and {size_cap}"
        )));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.adj(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let is_cut = |f: u64| -> bool {
        let mut rest = all & !f;
        let mut parts = 0;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & rest & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            if (comp.count_ones() as usize) <= h {
                return false;
            }
            rest &= !comp;
            parts += 1;
        }
        parts >= 2
    };
    for size in 0..=size_cap.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
            if is_cut(mask) {
                let w = VertexSet::new(idx.iter().copied());
                return Ok(KappaResult {
                    h,
                    status: KappaStatus::Exact,
                    lower: size,
                    upper: Some(size),
                    witness: Some(w),
                    flow_calls: 0,
                });
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    // Two components with h+1 vertices each must survive, so larger cuts are impossible.
    if size_cap + 2 * (h + 1) >= n {
        return Ok(KappaResult {
            h,
            status: KappaStatus::NotRhGraph,
            lower: 0,
            upper: None,
            witness: None,
            flow_calls: 0,
        });
    }
    Ok(KappaResult { h, status: KappaStatus::Bracket, lower: size_cap + 1, upper: None, witness: None, flow_calls: 0 })
}

pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small;
    use crate::topology::{build_default, TopologySpec};

    fn family(s: &str) -> Graph {
        build_default(&s.parse::<TopologySpec>().unwrap()).unwrap().graph
    }

    #[test]
    fn rh_cut_examples() {
        let c5 = small::cycle(5);
        for mask in 0u32..32 {
            let f = VertexSet::new((0..5).filter(|i| mask >> i & 1 == 1));
            assert!(!is_rh_cut(&c5, &f, 2));
        }
        let s5 = family("star:n=5");
        for t in s5.connected_triples().iter().take(50) {
            assert!(is_rh_cut(&s5, &s5.neighbor_set(&t.set).unwrap(), 2));
        }
        assert!(!is_rh_cut(&s5, &VertexSet::empty(), 0));
    }

    #[test]
    fn rh_graph_examples() {
        let b = Budget::default();
        assert!(!is_rh_graph(&small::cycle(5), 2, &b).unwrap());
        assert!(is_rh_graph(&family("hypercube:n=4"), 2, &b).unwrap());
        for h in 0..3 {
            assert!(!is_rh_graph(&small::complete(5), h, &b).unwrap());
        }
    }

    #[test]
    fn min_neighborhood_examples() {
        assert_eq!(min_neighbor_3subgraph(&family("star:n=5")).unwrap().t, 8);
        let s53 = min_neighbor_3subgraph(&family("nk_star:n=5,k=3")).unwrap();
        assert_eq!((s53.t, s53.kind()), (6, TripleKind::Cycle));
        let a53 = min_neighbor_3subgraph(&family("arrangement:n=5,k=3")).unwrap();
        assert_eq!((a53.t, a53.kind()), (11, TripleKind::Path));
        assert!(min_neighbor_3subgraph(&small::complete(2)).is_err());
    }

    #[test]
    fn kappa_small_values() {
        let b = Budget::default();
        let q3 = family("hypercube:n=3");
        assert_eq!(kappa_h(&q3, 0, &b).unwrap().value(), Some(3));
        let c6 = small::cycle(6);
        assert_eq!(kappa_h(&c6, 1, &b).unwrap().value(), Some(2));
        assert_eq!(kappa_h_brute(&c6, 1, 4).unwrap().value(), Some(2));
        let r = kappa_h(&small::cycle(5), 2, &b).unwrap();
        assert_eq!(r.status, KappaStatus::NotRhGraph);
        assert_eq!(kappa_h_brute(&small::cycle(5), 2, 5).unwrap().status, KappaStatus::NotRhGraph);
    }

    #[test]
    fn brute_rejects_large_inputs() {
        assert!(matches!(kappa_h_brute(&small::cycle(41), 0, 2), Err(Error::Budget(_))));
        assert!(matches!(kappa_h_brute(&small::cycle(10), 0, 9), Err(Error::Budget(_))));
        let r = kappa_h_brute(&small::petersen(), 2, 2).unwrap();
        assert_eq!((r.status, r.lower), (KappaStatus::Bracket, 3));
    }

    #[test]
    fn flow_budget_degrades_to_bracket() {
        let b = Budget { max_flow_calls: Some(3), ..Budget::default() };
        let r = kappa_h(&family("hypercube:n=4"), 2, &b).unwrap();
        assert_eq!(r.status, KappaStatus::Bracket);
        assert!(r.upper.is_some_and(|u| u >= r.lower));
    }

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
