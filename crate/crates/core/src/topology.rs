//! Constructors for the interconnection-network families.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::perm::{
    cayley_graph, compose, enumerate_alternating_with_cap, enumerate_symmetric_with_cap, GeneratorSet, Permutation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Star,
    BubbleSort,
    TranspositionTree,
    AltGroupGraph,
    AltGroupNetwork,
    Arrangement,
    NkStar,
    KaryNcube,
    Hypercube,
    DualCube,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Star,
        Family::BubbleSort,
        Family::TranspositionTree,
        Family::AltGroupGraph,
        Family::AltGroupNetwork,
        Family::Arrangement,
        Family::NkStar,
        Family::KaryNcube,
        Family::Hypercube,
        Family::DualCube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::BubbleSort => "bubble_sort",
            Family::TranspositionTree => "transposition_tree",
            Family::AltGroupGraph => "alt_group_graph",
            Family::AltGroupNetwork => "alt_group_network",
            Family::Arrangement => "arrangement",
            Family::NkStar => "nk_star",
            Family::KaryNcube => "kary_ncube",
            Family::Hypercube => "hypercube",
            Family::DualCube => "dual_cube",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            Family::Star => &["star_graph"],
            Family::BubbleSort => &["bubble", "bubble_sort_graph"],
            Family::TranspositionTree => &["tree"],
            Family::AltGroupGraph => &["ag", "alternating_group_graph"],
            Family::AltGroupNetwork => &["an", "alternating_group_network"],
            Family::Arrangement => &["arrangement_graph"],
            Family::NkStar => &["nkstar", "nk_star_graph"],
            Family::KaryNcube => &["kary", "kary_n_cube"],
            Family::Hypercube => &["cube", "qn"],
            Family::DualCube => &["dualcube", "dc"],
        }
    }

    fn takes_k(self) -> bool {
        matches!(self, Family::Arrangement | Family::NkStar | Family::KaryNcube)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key || f.aliases().contains(&key.as_str()))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A family name plus its parameters, e.g. `arrangement:n=5,k=3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TopologySpec {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
    /// Tree edges on `{1..n}` for transposition trees.
    pub tree_edges: Vec<(usize, usize)>,
}

impl TopologySpec {
    pub fn new(family: Family, n: usize, k: Option<usize>) -> Result<Self> {
        let spec = TopologySpec { family, n, k, tree_edges: Vec::new() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tree(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let spec = TopologySpec { family: Family::TranspositionTree, n, k: None, tree_edges: edges };
        spec.validate()?;
        Ok(spec)
    }

    pub fn star(n: usize) -> Self {
        TopologySpec::new(Family::Star, n, None).expect("star needs n >= 2")
    }

    fn k_value(&self) -> usize {
        self.k.unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        let bad = |why: String| Err(Error::Domain(format!("{}: {why}", self.family.name())));
        if self.family.takes_k() != k.is_some() {
            return bad(if k.is_some() { "takes no k".into() } else { "requires k".into() });
        }
        if self.family != Family::TranspositionTree && !self.tree_edges.is_empty() {
            return bad("edges only apply to transposition trees".into());
        }
        match self.family {
            Family::Star | Family::BubbleSort | Family::TranspositionTree if n < 2 => {
                bad(format!("n must be >= 2, got {n}"))
            }
            Family::AltGroupGraph | Family::AltGroupNetwork if n < 3 => bad(format!("n must be >= 3, got {n}")),
            Family::Arrangement | Family::NkStar if !(1..n).contains(&self.k_value()) => {
                bad(format!("need 1 <= k < n, got n={n} k={}", self.k_value()))
            }
            Family::KaryNcube if self.k_value() < 3 || n < 1 => {
                bad(format!("need k >= 3 and n >= 1, got n={n} k={}", self.k_value()))
            }
            Family::Hypercube | Family::DualCube if n < 1 => bad("n must be >= 1".into()),
            Family::TranspositionTree => validate_tree(n, &self.tree_edges),
            _ => Ok(()),
        }
    }

    /// The generating transpositions' tree for tree-based families.
    pub fn transposition_tree_edges(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.n;
        match self.family {
            Family::Star => Some((2..=n).map(|i| (1, i)).collect()),
            Family::BubbleSort => Some((1..n).map(|i| (i, i + 1)).collect()),
            Family::TranspositionTree => Some(self.tree_edges.clone()),
            _ => None,
        }
    }

    /// True when the transposition tree is `K_{1,n-1}`.
    pub fn is_star_shaped_tree(&self) -> bool {
        match self.transposition_tree_edges() {
            Some(edges) => {
                let mut deg = vec![0; self.n + 1];
                for (a, b) in edges {
                    deg[a] += 1;
                    deg[b] += 1;
                }
                deg.iter().any(|&d| d + 1 == self.n) || self.n <= 2
            }
            None => false,
        }
    }

    /// Number of vertices, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let n = self.n as u128;
        let k = self.k_value() as u128;
        let fact = |m: u128| (1..=m).try_fold(1u128, |a, b| a.checked_mul(b));
        let falling = |m: u128, j: u128| (m - j + 1..=m).try_fold(1u128, |a, b| a.checked_mul(b));
        match self.family {
            Family::Star | Family::BubbleSort | Family::TranspositionTree => fact(n),
            Family::AltGroupGraph | Family::AltGroupNetwork => fact(n).map(|f| f / 2),
            Family::Arrangement | Family::NkStar => falling(n, k),
            Family::KaryNcube => k.checked_pow(self.n as u32),
            Family::Hypercube => 1u128.checked_shl(self.n as u32),
            Family::DualCube => 1u128.checked_shl(2 * self.n as u32 + 1),
        }
    }

    pub fn degree(&self) -> usize {
        let (n, k) = (self.n, self.k_value());
        match self.family {
            Family::Star
            | Family::BubbleSort
            | Family::TranspositionTree
            | Family::AltGroupNetwork
            | Family::NkStar => n - 1,
            Family::AltGroupGraph => 2 * n - 4,
            Family::Arrangement => k * (n - k),
            Family::KaryNcube => 2 * n,
            Family::Hypercube => n,
            Family::DualCube => n + 1,
        }
    }
}

fn validate_tree(n: usize, edges: &[(usize, usize)]) -> Result<()> {
    let bad = |why: &str| Err(Error::Domain(format!("transposition_tree: {why}")));
    if edges.len() + 1 != n {
        return bad(&format!("a tree on {n} vertices needs {} edges, got {}", n - 1, edges.len()));
    }
    let mut parent: Vec<usize> = (0..=n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return bad(&format!("edge {a}-{b} is not on 1..{n}"));
        }
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra == rb {
            return bad("edges contain a cycle");
        }
        parent[ra] = rb;
    }
    Ok(())
}

impl fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={}", self.family.name(), self.n)?;
        if let Some(k) = self.k {
            write!(f, ",k={k}")?;
        }
        if self.family == Family::TranspositionTree {
            let parts: Vec<String> = self.tree_edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            write!(f, ",edges={}", parts.join(";"))?;
        }
        Ok(())
    }
}

impl FromStr for TopologySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, rest) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("expected `family:params`, got {s:?}")))?;
        let family: Family = fam.parse()?;
        let mut n = None;
        let mut k = None;
        let mut edges = None;
        for kv in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) =
                kv.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let int =
                |v: &str| v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer {v:?} for {key}")));
            match key.trim() {
                "n" => n = Some(int(value)?),
                "k" => k = Some(int(value)?),
                "edges" => {
                    let mut list = Vec::new();
                    for e in value.split(';').filter(|p| !p.trim().is_empty()) {
                        let (a, b) = e.split_once('-').ok_or_else(|| Error::Parse(format!("bad tree edge {e:?}")))?;
                        list.push((int(a)?, int(b)?));
                    }
                    edges = Some(list);
                }
                other => return Err(Error::Parse(format!("unknown parameter {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing n".into()))?;
        let spec = TopologySpec { family, n, k, tree_edges: edges.unwrap_or_default() };
        if family == Family::TranspositionTree && spec.tree_edges.is_empty() {
            return Err(Error::Parse("transposition_tree requires edges=a-b;c-d;...".into()));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Edge kinds of the (n,k)-star graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    /// Exchange position 1 with position i (2 <= i <= k).
    Swap,
    /// Replace the symbol in position 1 by one not in the arrangement.
    Unswap,
}

/// A built graph together with the family data the lemma checkers need.
#[derive(Debug, Clone)]
pub struct Topology {
    pub spec: TopologySpec,
    pub graph: Graph,
    tuples: Option<Vec<Vec<usize>>>,
    edge_classes: Option<HashMap<(usize, usize), EdgeClass>>,
}

impl Topology {
    /// The underlying tuple (arrangement, digits or bits) of each vertex, when the graph has one.
    pub fn tuple(&self, v: usize) -> Option<&[usize]> {
        self.tuples.as_ref().map(|t| t[v].as_slice())
    }
}

pub fn build(spec: &TopologySpec, budget: &Budget) -> Result<Topology> {
    spec.validate()?;
    let order = spec.order().ok_or_else(|| Error::Budget(format!("order of {spec} overflows")))?;
    if order > budget.max_order as u128 {
        return Err(Error::Budget(format!("{spec} has {order} vertices, above the limit {}", budget.max_order)));
    }
    let n = spec.n;
    let mut topo = match spec.family {
        Family::Star | Family::BubbleSort | Family::TranspositionTree => {
            let gens = spec
                .transposition_tree_edges()
                .unwrap()
                .into_iter()
                .map(|(a, b)| Permutation::transposition(n, a, b))
                .collect::<Result<Vec<_>>>()?;
            let elements = enumerate_symmetric_with_cap(n, budget.max_perm_n)?;
            plain(spec, cayley_graph(&elements, &GeneratorSet::new(gens)?)?)
        }
        Family::AltGroupGraph => {
            let t12 = Permutation::transposition(n, 1, 2)?;
            let mut gens = Vec::new();
            for i in 3..=n {
                let t1i = Permutation::transposition(n, 1, i)?;
                gens.push(compose(&t12, &t1i)?);
                gens.push(compose(&t1i, &t12)?);
            }
            let elements = enumerate_alternating_with_cap(n, budget.max_perm_n)?;
            plain(spec, cayley_graph(&elements, &GeneratorSet::new(gens)?)?)
        }
        Family::AltGroupNetwork => {
            let t12 = Permutation::transposition(n, 1, 2)?;
            let t13 = Permutation::transposition(n, 1, 3)?;
            let mut gens = vec![compose(&t12, &t13)?, compose(&t13, &t12)?];
            for i in 4..=n {
                gens.push(compose(&t12, &Permutation::transposition(n, 3, i)?)?);
            }
            let elements = enumerate_alternating_with_cap(n, budget.max_perm_n)?;
            plain(spec, cayley_graph(&elements, &GeneratorSet::new(gens)?)?)
        }
        Family::Arrangement => arrangement_graph(spec)?,
        Family::NkStar => nk_star_graph(spec)?,
        Family::KaryNcube => kary_graph(spec)?,
        Family::Hypercube => cube_graph(spec)?,
        Family::DualCube => dual_cube_graph(spec)?,
    };
    topo.graph = topo.graph.with_vertex_transitive(true);
    Ok(topo)
}

/// Builds with the default budget.
pub fn build_default(spec: &TopologySpec) -> Result<Topology> {
    build(spec, &Budget::default())
}

fn plain(spec: &TopologySpec, graph: Graph) -> Topology {
    Topology { spec: spec.clone(), graph, tuples: None, edge_classes: None }
}

fn tuple_label(t: &[usize], radix: usize) -> String {
    if radix > 10 {
        t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    } else {
        t.iter().map(|&x| char::from(b'0' + x as u8)).collect()
    }
}

/// All k-arrangements of `{1..n}` in lexicographic order.
fn arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in 1..=n {
            if !used[s] {
                used[s] = true;
                cur.push(s);
                rec(n, k, cur, used, out);
                cur.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::with_capacity(k), &mut vec![false; n + 1], &mut out);
    out
}

fn tuple_graph(tuples: Vec<Vec<usize>>, radix: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    let labels = tuples.iter().map(|t| tuple_label(t, radix)).collect();
    Graph::from_edge_multiset(labels, edges)
}

fn arrangement_graph(spec: &TopologySpec) -> Result<Topology> {
    let (n, k) = (spec.n, spec.k_value());
    let tuples = arrangements(n, k);
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut edges = Vec::new();
    for (u, t) in tuples.iter().enumerate() {
        for pos in 0..k {
            for s in (1..=n).filter(|s| !t.contains(s)) {
                let mut w = t.clone();
                w[pos] = s;
                edges.push((u, index[w.as_slice()]));
            }
        }
    }
    let graph = tuple_graph(tuples.clone(), n + 1, edges)?;
    Ok(Topology { spec: spec.clone(), graph, tuples: Some(tuples), edge_classes: None })
}

fn nk_star_graph(spec: &TopologySpec) -> Result<Topology> {
    let (n, k) = (spec.n, spec.k_value());
    let tuples = arrangements(n, k);
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut edges = Vec::new();
    let mut classes = HashMap::new();
    for (u, t) in tuples.iter().enumerate() {
        for i in 1..k {
            let mut w = t.clone();
            w.swap(0, i);
            let v = index[w.as_slice()];
            edges.push((u, v));
            classes.insert((u.min(v), u.max(v)), EdgeClass::Swap);
        }
        for s in (1..=n).filter(|s| !t.contains(s)) {
            let mut w = t.clone();
            w[0] = s;
            let v = index[w.as_slice()];
            edges.push((u, v));
            classes.insert((u.min(v), u.max(v)), EdgeClass::Unswap);
        }
    }
    let graph = tuple_graph(tuples.clone(), n + 1, edges)?;
    Ok(Topology { spec: spec.clone(), graph, tuples: Some(tuples), edge_classes: Some(classes) })
}

/// Digits most significant first; vertex index is the base-k value.
fn digit_tuples(n: usize, radix: usize) -> Vec<Vec<usize>> {
    let count = radix.pow(n as u32);
    (0..count)
        .map(|mut x| {
            let mut d = vec![0; n];
            for slot in d.iter_mut().rev() {
                *slot = x % radix;
                x /= radix;
            }
            d
        })
        .collect()
}

fn kary_graph(spec: &TopologySpec) -> Result<Topology> {
    let (n, k) = (spec.n, spec.k_value());
    let tuples = digit_tuples(n, k);
    let mut edges = Vec::new();
    for (u, _) in tuples.iter().enumerate() {
        for dim in 0..n {
            let place = k.pow(dim as u32);
            let digit = (u / place) % k;
            let up = (digit + 1) % k;
            edges.push((u, u - digit * place + up * place));
        }
    }
    let graph = tuple_graph(tuples.clone(), k, edges)?;
    Ok(Topology { spec: spec.clone(), graph, tuples: Some(tuples), edge_classes: None })
}

fn cube_graph(spec: &TopologySpec) -> Result<Topology> {
    let n = spec.n;
    let tuples = digit_tuples(n, 2);
    let edges = (0..1usize << n).flat_map(|u| (0..n).map(move |b| (u, u ^ (1 << b)))).collect();
    let graph = tuple_graph(tuples.clone(), 2, edges)?;
    Ok(Topology { spec: spec.clone(), graph, tuples: Some(tuples), edge_classes: None })
}

/// Bit `2n` is the class bit. Class-0 vertices flip bits `0..n`, class-1 vertices flip
/// bits `n..2n`, and every vertex has one cross link flipping the class bit.
fn dual_cube_graph(spec: &TopologySpec) -> Result<Topology> {
    let n = spec.n;
    let width = 2 * n + 1;
    let tuples = digit_tuples(width, 2);
    let mut edges = Vec::new();
    for u in 0..1usize << width {
        let class = u >> (2 * n) & 1;
        let dims = if class == 0 { 0..n } else { n..2 * n };
        for b in dims {
            edges.push((u, u ^ (1 << b)));
        }
        edges.push((u, u ^ (1 << (2 * n))));
    }
    let graph = tuple_graph(tuples.clone(), 2, edges)?;
    Ok(Topology { spec: spec.clone(), graph, tuples: Some(tuples), edge_classes: None })
}

/// Partition into the cliques formed by vertices agreeing everywhere except `position` (1-based).
pub fn clique_partition(topo: &Topology, position: usize) -> Result<Vec<VertexSet>> {
    let k = topo.spec.k_value();
    match topo.spec.family {
        Family::Arrangement if (1..=k).contains(&position) => {}
        Family::NkStar if position == 1 => {}
        Family::Arrangement | Family::NkStar => {
            return Err(Error::Domain(format!("position {position} is not valid for {}", topo.spec)))
        }
        _ => return Err(Error::Domain(format!("{} has no clique partition", topo.spec.family.name()))),
    }
    let tuples = topo.tuples.as_ref().expect("arrangement families keep tuples");
    let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (v, t) in tuples.iter().enumerate() {
        let mut key = t.clone();
        key[position - 1] = 0;
        groups.entry(key).or_default().push(v);
    }
    let mut classes: Vec<VertexSet> = groups.into_values().map(VertexSet::new).collect();
    classes.sort();
    Ok(classes)
}

pub fn edge_class(topo: &Topology, u: usize, v: usize) -> Result<EdgeClass> {
    let classes = topo
        .edge_classes
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("{} has no edge classes", topo.spec.family.name())))?;
    let n = topo.graph.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(Error::Index { index: w, len: n });
        }
    }
    classes.get(&(u.min(v), u.max(v))).copied().ok_or(Error::Index { index: u.max(v), len: n })
}
