//! Comparison-model diagnosis: syndromes, distinguishability, conditional diagnosability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extra::{min_neighbor_3subgraphs, next_combination};
use crate::graph::{Graph, Triple, TripleKind, VertexSet};

/// Comparator `comparator` sends the same task to neighbors `u < v` and compares replies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComparisonTest {
    pub comparator: usize,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "free")]
    Free,
}

/// Every neighbor pair at every comparator, ordered by comparator then pair.
pub fn all_tests(g: &Graph) -> Vec<ComparisonTest> {
    let mut tests = Vec::new();
    for w in 0..g.vertex_count() {
        let nb = g.adj(w);
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                tests.push(ComparisonTest { comparator: w, u, v });
            }
        }
    }
    tests
}

/// A vertex set together with its conditionality flag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaultSet {
    members: VertexSet,
    conditional: bool,
}

impl FaultSet {
    pub fn new(g: &Graph, members: VertexSet) -> Result<Self> {
        if let Some(&last) = members.members().last() {
            if last >= g.vertex_count() {
                return Err(Error::Index { index: last, len: g.vertex_count() });
            }
        }
        let conditional = is_conditional(g, &members);
        Ok(FaultSet { members, conditional })
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn is_conditional(&self) -> bool {
        self.conditional
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }
}

/// No vertex outside `f` has its whole neighborhood inside `f`.
pub fn is_conditional(g: &Graph, f: &VertexSet) -> bool {
    (0..g.vertex_count()).filter(|&x| !f.contains(x)).all(|x| g.adj(x).iter().any(|&w| !f.contains(w)))
}

pub fn forced_outcome(test: &ComparisonTest, f: &FaultSet) -> Outcome {
    if f.contains(test.comparator) {
        Outcome::Free
    } else if f.contains(test.u) || f.contains(test.v) {
        Outcome::One
    } else {
        Outcome::Zero
    }
}

/// Outcomes aligned with [`all_tests`]; `true` means the replies differed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    outcomes: Vec<bool>,
}

/// How faulty comparators fill their free outcomes in an injected syndrome.
#[derive(Debug, Clone, Copy)]
pub enum FreeFill {
    Zeros,
    Ones,
    Seeded(u64),
}

impl Syndrome {
    pub fn new(g: &Graph, outcomes: Vec<bool>) -> Result<Self> {
        let expected = all_tests(g).len();
        if outcomes.len() != expected {
            return Err(Error::SizeMismatch { left: outcomes.len(), right: expected });
        }
        Ok(Syndrome { outcomes })
    }

    /// The syndrome produced by the fault set `f`.
    pub fn from_faults(g: &Graph, f: &FaultSet, fill: FreeFill) -> Self {
        let mut rng = match fill {
            FreeFill::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
            _ => None,
        };
        let outcomes = all_tests(g)
            .iter()
            .map(|t| match forced_outcome(t, f) {
                Outcome::Zero => false,
                Outcome::One => true,
                Outcome::Free => match fill {
                    FreeFill::Zeros => false,
                    FreeFill::Ones => true,
                    FreeFill::Seeded(_) => rng.as_mut().unwrap().gen(),
                },
            })
            .collect();
        Syndrome { outcomes }
    }

    pub fn outcomes(&self) -> &[bool] {
        &self.outcomes
    }
}

pub fn is_compatible(g: &Graph, sigma: &Syndrome, f: &FaultSet) -> Result<bool> {
    let tests = all_tests(g);
    if tests.len() != sigma.outcomes.len() {
        return Err(Error::SizeMismatch { left: sigma.outcomes.len(), right: tests.len() });
    }
    Ok(tests.iter().zip(&sigma.outcomes).all(|(t, &o)| match forced_outcome(t, f) {
        Outcome::Free => true,
        Outcome::One => o,
        Outcome::Zero => !o,
    }))
}

fn distinct(f1: &FaultSet, f2: &FaultSet) -> Result<()> {
    if f1.members == f2.members {
        return Err(Error::Domain("distinguishability needs two distinct fault sets".into()));
    }
    Ok(())
}

/// Distinguishable iff some fault-free comparator (outside both sets) is forced differently.
pub fn distinguishable_semantic(g: &Graph, f1: &FaultSet, f2: &FaultSet) -> Result<bool> {
    distinct(f1, f2)?;
    Ok(all_tests(g).iter().any(|t| {
        let (o1, o2) = (forced_outcome(t, f1), forced_outcome(t, f2));
        o1 != Outcome::Free && o2 != Outcome::Free && o1 != o2
    }))
}

pub const SYNDROME_ORACLE_MAX_TESTS: usize = 16;

/// Enumerates every syndrome and looks for one compatible with both sets.
pub fn distinguishable_by_syndromes(g: &Graph, f1: &FaultSet, f2: &FaultSet) -> Result<bool> {
    distinct(f1, f2)?;
    let m = all_tests(g).len();
    if m > SYNDROME_ORACLE_MAX_TESTS {
        return Err(Error::Budget(format!(
            "{m} tests exceed the syndrome enumeration limit {SYNDROME_ORACLE_MAX_TESTS}"
        )));
    }
    for bits in 0u32..1 << m {
        let sigma = Syndrome { outcomes: (0..m).map(|i| bits >> i & 1 == 1).collect() };
        if is_compatible(g, &sigma, f1)? && is_compatible(g, &sigma, f2)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which structural pattern makes a pair distinguishable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum DistinguishingCondition {
    /// A fault-free `z` sees a fault-free `x` and a vertex `y` in exactly one set.
    #[serde(rename = "a")]
    MixedPair,
    /// A fault-free `z` sees two vertices of `F1 \ F2`.
    #[serde(rename = "b")]
    TwoInFirst,
    /// A fault-free `z` sees two vertices of `F2 \ F1`.
    #[serde(rename = "c")]
    TwoInSecond,
}

/// One occurrence of a distinguishing pattern at comparator `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishingMatch {
    pub condition: DistinguishingCondition,
    pub z: usize,
    pub x: usize,
    pub y: usize,
}

/// All comparators and the patterns they realize, by comparator.
pub fn structural_matches(g: &Graph, f1: &FaultSet, f2: &FaultSet) -> Result<Vec<DistinguishingMatch>> {
    distinct(f1, f2)?;
    let union = f1.members.union(&f2.members);
    let only1 = f1.members.difference(&f2.members);
    let only2 = f2.members.difference(&f1.members);
    let mut out = Vec::new();
    for z in (0..g.vertex_count()).filter(|&z| !union.contains(z)) {
        let nb = g.adj(z);
        let clean = nb.iter().copied().find(|&w| !union.contains(w));
        let dirty = nb.iter().copied().find(|&w| only1.contains(w) || only2.contains(w));
        if let (Some(x), Some(y)) = (clean, dirty) {
            out.push(DistinguishingMatch { condition: DistinguishingCondition::MixedPair, z, x, y });
        }
        for (set, cond) in
            [(&only1, DistinguishingCondition::TwoInFirst), (&only2, DistinguishingCondition::TwoInSecond)]
        {
            let hits: Vec<usize> = nb.iter().copied().filter(|&w| set.contains(w)).take(2).collect();
            if hits.len() == 2 {
                out.push(DistinguishingMatch { condition: cond, z, x: hits[0], y: hits[1] });
            }
        }
    }
    Ok(out)
}

pub fn structural_conditions(g: &Graph, f1: &FaultSet, f2: &FaultSet) -> Result<Vec<DistinguishingCondition>> {
    let mut c: Vec<DistinguishingCondition> = structural_matches(g, f1, f2)?.into_iter().map(|m| m.condition).collect();
    c.sort();
    c.dedup();
    Ok(c)
}

pub fn distinguishable_structural(g: &Graph, f1: &FaultSet, f2: &FaultSet) -> Result<bool> {
    Ok(!structural_matches(g, f1, f2)?.is_empty())
}

pub const EXACT_TC_MAX_VERTICES: usize = 16;
pub const EXACT_TC_MAX_CAP: usize = 6;

/// Result of the exhaustive conditional-diagnosability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TcExact {
    /// Largest `t <= cap` with every conditional pair of size `<= t` distinguishable.
    pub value: usize,
    /// True when no violating pair exists up to `cap`, so the real value is at least `cap`.
    pub at_least: bool,
    pub cap: usize,
    pub counterexample: Option<(FaultSet, FaultSet)>,
    pub conditional_sets: usize,
}

fn mask_of(idx: &[usize]) -> u32 {
    idx.iter().fold(0, |m, &i| m | 1 << i)
}

fn mask_members(mask: u32) -> VertexSet {
    VertexSet::new((0..32).filter(|i| mask >> i & 1 == 1))
}

fn masks_distinguishable(nb: &[u32], a: u32, b: u32) -> bool {
    let union = a | b;
    let diff = a ^ b;
    nb.iter().enumerate().any(|(z, &nz)| {
        union >> z & 1 == 0
            && ((nz & !union != 0 && nz & diff != 0)
                || (nz & a & !b).count_ones() >= 2
                || (nz & b & !a).count_ones() >= 2)
    })
}

/// Exhaustive check of all pairs of distinct conditional sets, size by size.
pub fn conditional_diagnosability_exact(g: &Graph, cap: usize) -> Result<TcExact> {
    let n = g.vertex_count();
    if n > EXACT_TC_MAX_VERTICES || cap > EXACT_TC_MAX_CAP {
        return Err(Error::Budget(format!(
            "exact conditional diagnosability is limited to {EXACT_TC_MAX_VERTICES} vertices and cap {EXACT_TC_MAX_CAP}, got {n} and {cap}"
        )));
    }
    let nb: Vec<u32> = (0..n).map(|v| mask_of(g.adj(v))).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let conditional = |f: u32| (0..n).all(|x| f >> x & 1 == 1 || nb[x] & !f != 0);
    let mut by_size: Vec<Vec<u32>> = Vec::new();
    for size in 0..=cap.min(n) {
        let mut level = Vec::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let m = mask_of(&idx) & full;
            if conditional(m) {
                level.push(m);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        by_size.push(level);
    }
    let count = by_size.iter().map(Vec::len).sum();
    for t in 1..by_size.len() {
        let level = &by_size[t];
        let smaller: Vec<u32> = by_size[..t].iter().flatten().copied().collect();
        let hit = level.par_iter().enumerate().find_map_first(|(i, &a)| {
            smaller.iter().chain(&level[..i]).find(|&&b| !masks_distinguishable(&nb, a, b)).map(|&b| (a, b))
        });
        if let Some((a, b)) = hit {
            let f1 = FaultSet::new(g, mask_members(a))?;
            let f2 = FaultSet::new(g, mask_members(b))?;
            return Ok(TcExact {
                value: t - 1,
                at_least: false,
                cap,
                counterexample: Some((f1, f2)),
                conditional_sets: count,
            });
        }
    }
    Ok(TcExact { value: cap, at_least: true, cap, counterexample: None, conditional_sets: count })
}

/// The indistinguishable conditional pair `N(T) ∪ {x}`, `N(T) ∪ {y}` built from a minimizing `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TcWitness {
    /// `t = |N(T)|`; the pair shows `t_c <= t`.
    pub bound: usize,
    pub t_set: Triple,
    pub x: usize,
    pub z: usize,
    pub y: usize,
    pub f1: FaultSet,
    pub f2: FaultSet,
}

impl TcWitness {
    pub fn report(&self, g: &Graph) -> TcWitnessReport {
        TcWitnessReport {
            bound: self.bound,
            kind: self.t_set.kind,
            t: self.t_set.set.labels(g),
            x: g.label(self.x).to_string(),
            z: g.label(self.z).to_string(),
            y: g.label(self.y).to_string(),
            f1: self.f1.members().labels(g),
            f2: self.f2.members().labels(g),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TcWitnessReport {
    pub bound: usize,
    pub kind: TripleKind,
    pub t: Vec<String>,
    pub x: String,
    pub z: String,
    pub y: String,
    pub f1: Vec<String>,
    pub f2: Vec<String>,
}

/// Uses the first minimizer (canonical order) whose neighborhood is an R_2-cut.
pub fn tc_upper_witness(g: &Graph) -> Result<TcWitness> {
    let (bound, minimizers) = min_neighbor_3subgraphs(g)?;
    let Some(triple) = minimizers.into_iter().find(|t| g.neighbor_set(&t.set).is_ok_and(|x| g.is_rh_cut(&x, 2))) else {
        return Err(Error::WitnessInvalid(format!(
            "no minimizing 3-subgraph has an R_2-cut neighborhood (t = {bound})"
        )));
    };
    let m = triple.set.members();
    let z = triple.center.unwrap_or(m[1]);
    let ends: Vec<usize> = m.iter().copied().filter(|&v| v != z).collect();
    let (x, y) = (ends[0], ends[1]);
    let nt = g.neighbor_set(&triple.set)?;
    let f1 = FaultSet::new(g, nt.union(&VertexSet::new([x])))?;
    let f2 = FaultSet::new(g, nt.union(&VertexSet::new([y])))?;
    if !f1.is_conditional() || !f2.is_conditional() {
        return Err(Error::WitnessInvalid("constructed fault sets are not conditional".into()));
    }
    if distinguishable_semantic(g, &f1, &f2)? || distinguishable_structural(g, &f1, &f2)? {
        return Err(Error::WitnessInvalid("constructed pair is distinguishable".into()));
    }
    Ok(TcWitness { bound, t_set: triple, x, z, y, f1, f2 })
}

/// Uniform random fault set of the given size.
pub fn random_fault_set(g: &Graph, size: usize, rng: &mut impl Rng) -> Result<FaultSet> {
    let picked = rand::seq::index::sample(rng, g.vertex_count(), size.min(g.vertex_count()));
    FaultSet::new(g, VertexSet::new(picked))
}
