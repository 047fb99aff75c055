//! Immutable simple undirected graphs with labeled vertices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::flow::{CutOutcome, Role, SplitNetwork};

const DENSE_LIMIT: usize = 512;

/// A set of vertex indices kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.difference(other).union(&other.difference(self))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn labels(&self, g: &Graph) -> Vec<String> {
        self.iter().map(|v| g.label(v).to_string()).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Shape of a connected 3-vertex subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TripleKind {
    #[serde(rename = "P3")]
    Path,
    #[serde(rename = "C3")]
    Cycle,
}

/// A connected 3-vertex set with its shape; `center` is the middle vertex of a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub set: VertexSet,
    pub kind: TripleKind,
    pub center: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    dense: Option<Vec<BitSet>>,
    index: HashMap<String, usize>,
    edge_count: usize,
    vertex_transitive: bool,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges, bad indices and repeated labels.
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex label {l:?}")));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::Index { index: w, len: n });
                }
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
            let before = row.len();
            row.dedup();
            if row.len() != before {
                return Err(Error::Parse("parallel edge".into()));
            }
        }
        let dense = (n <= DENSE_LIMIT).then(|| {
            adj.iter()
                .map(|row| {
                    let mut b = BitSet::new(n);
                    row.iter().for_each(|&w| b.insert(w));
                    b
                })
                .collect()
        });
        Ok(Graph { labels, adj, dense, index, edge_count: edges.len(), vertex_transitive: false })
    }

    /// Like [`Graph::new`] but tolerates duplicate and reversed edges.
    pub fn from_edge_multiset(labels: Vec<String>, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::new(labels, edges)
    }

    /// Marks the graph as vertex-transitive, which lets searches fix one vertex.
    pub fn with_vertex_transitive(mut self, yes: bool) -> Self {
        self.vertex_transitive = yes;
        self
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_transitive
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor indices of `v`.
    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.dense {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::Index { index: v, len: self.vertex_count() });
        }
        Ok(())
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.members().last() {
            Some(&v) => self.check(v),
            None => Ok(()),
        }
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet(self.adj[v].clone()))
    }

    /// `N(X)`: the union of the neighborhoods of `x`, minus `x`.
    pub fn neighbor_set(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(VertexSet::new(x.iter().flat_map(|v| self.adj[v].iter().copied()).filter(|&w| !x.contains(w))))
    }

    pub fn common_neighbors(&self, x: usize, y: usize) -> Result<VertexSet> {
        self.check(x)?;
        self.check(y)?;
        if x == y {
            return Err(Error::Domain("common neighbors of a vertex with itself".into()));
        }
        Ok(match &self.dense {
            Some(rows) => VertexSet(rows[x].intersection(&rows[y]).collect()),
            None => VertexSet(self.adj[x].iter().copied().filter(|&w| self.has_edge(y, w)).collect()),
        })
    }

    /// Largest common neighborhood over non-adjacent pairs.
    pub fn ell(&self) -> Result<usize> {
        let n = self.vertex_count();
        let mut found = false;
        let mut best = 0;
        let mut count = vec![0usize; n];
        let mut touched = Vec::new();
        for x in 0..n {
            for &z in &self.adj[x] {
                for &w in &self.adj[z] {
                    if w > x && !self.has_edge(x, w) {
                        if count[w] == 0 {
                            touched.push(w);
                        }
                        count[w] += 1;
                    }
                }
            }
            for &w in &touched {
                best = best.max(count[w]);
                count[w] = 0;
            }
            touched.clear();
            if !found {
                let adjacent_or_self = self.adj[x].iter().filter(|&&w| w > x).count();
                found = n - 1 - x > adjacent_or_self;
            }
        }
        if !found {
            return Err(Error::NoNonAdjacentPair);
        }
        Ok(best)
    }

    /// Components of `G - removed`, ordered by size descending, then smallest label.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        removed.iter().filter(|&v| v < n).for_each(|v| gone[v] = true);
        let mut comps: Vec<VertexSet> = self.components_masked(&gone).into_iter().map(VertexSet::new).collect();
        let min_label = |c: &VertexSet| c.iter().map(|v| &self.labels[v]).min().cloned();
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| min_label(a).cmp(&min_label(b))));
        comps
    }

    pub(crate) fn components_masked(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Component sizes of `G - removed`, largest first.
    pub(crate) fn component_sizes(&self, removed: &[bool], scratch: &mut Scratch) -> Vec<usize> {
        let n = self.vertex_count();
        scratch.reset(n);
        let mut sizes = Vec::new();
        for s in 0..n {
            if removed[s] || scratch.seen(s) {
                continue;
            }
            scratch.visit(s);
            scratch.queue.push(s);
            let mut size = 0;
            while let Some(u) = scratch.queue.pop() {
                size += 1;
                for &w in &self.adj[u] {
                    if !removed[w] && !scratch.seen(w) {
                        scratch.visit(w);
                        scratch.queue.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.components_masked(&vec![false; self.vertex_count()]).len() == 1
    }

    /// True iff `G - f` is disconnected and every component has more than `h` vertices.
    pub fn is_rh_cut(&self, f: &VertexSet, h: usize) -> bool {
        let mut gone = vec![false; self.vertex_count()];
        f.iter().for_each(|v| gone[v] = true);
        let sizes = self.component_sizes(&gone, &mut Scratch::default());
        sizes.len() >= 2 && sizes.iter().all(|&s| s > h)
    }

    /// `Σ(H)`: the degree sum of the subgraph induced by `x`.
    pub fn internal_degree_sum(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        Ok(x.iter().map(|v| self.adj[v].iter().filter(|&&w| x.contains(w)).count()).sum())
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|r| r.len() == d).then_some(d)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Minimum vertex set disjoint from `a ∪ b` separating `a` from `b`.
    pub fn min_vertex_separator(&self, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        if a.is_empty() || b.is_empty() {
            return Err(Error::Domain("terminal sets must be nonempty".into()));
        }
        if !a.intersection(b).is_empty() || a.iter().any(|u| b.iter().any(|v| self.has_edge(u, v))) {
            return Err(Error::Inseparable);
        }
        let mut net = SplitNetwork::new(self);
        let mut roles = vec![Role::Normal; self.vertex_count()];
        a.iter().chain(b.iter()).for_each(|v| roles[v] = Role::Protected);
        match net.min_cut(a.members(), b.members(), &roles, usize::MAX) {
            CutOutcome::Cut(s) => Ok(VertexSet::new(s)),
            CutOutcome::Inseparable => Err(Error::Inseparable),
            CutOutcome::AtLeast(_) => unreachable!("unbounded search cannot hit its limit"),
        }
    }

    /// Every vertex set of the given size inducing a connected subgraph, in lexicographic order.
    pub fn connected_subsets(&self, size: usize) -> Vec<VertexSet> {
        let n = self.vertex_count();
        if size == 0 || size > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut sub = Vec::with_capacity(size);
        for root in 0..n {
            sub.push(root);
            let ext: Vec<usize> = self.adj[root].iter().copied().filter(|&w| w > root).collect();
            self.extend_subgraph(&mut sub, ext, root, size, &mut out);
            sub.pop();
        }
        out.sort();
        out
    }

    // Enumeration of connected induced subgraphs, each produced once from its minimum vertex.
    fn extend_subgraph(
        &self,
        sub: &mut Vec<usize>,
        mut ext: Vec<usize>,
        root: usize,
        size: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if sub.len() == size {
            out.push(VertexSet::new(sub.iter().copied()));
            return;
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in &self.adj[w] {
                if u > root
                    && !sub.contains(&u)
                    && u != w
                    && !next.contains(&u)
                    && !sub.iter().any(|&s| self.has_edge(s, u))
                {
                    next.push(u);
                }
            }
            sub.push(w);
            self.extend_subgraph(sub, next, root, size, out);
            sub.pop();
        }
    }

    /// Connected 3-sets classified as paths or triangles.
    pub fn connected_triples(&self) -> Vec<Triple> {
        self.connected_subsets(3)
            .into_iter()
            .map(|set| {
                let m = set.members();
                let deg = |i: usize| (0..3).filter(|&j| j != i && self.has_edge(m[i], m[j])).count();
                if (0..3).all(|i| deg(i) == 2) {
                    Triple { set, kind: TripleKind::Cycle, center: None }
                } else {
                    let c = (0..3).find(|&i| deg(i) == 2).map(|i| m[i]);
                    Triple { set, kind: TripleKind::Path, center: c }
                }
            })
            .collect()
    }

    /// Whether a cycle with exactly `len` distinct vertices exists (chords allowed).
    pub fn has_cycle_of_length(&self, len: usize) -> Result<bool> {
        if !(3..=5).contains(&len) {
            return Err(Error::Domain(format!("cycle length {len} not in 3..=5")));
        }
        Ok(self.find_cycle(len).is_some())
    }

    /// A cycle of exactly `len` vertices, listed in order with its minimum vertex first.
    pub fn find_cycle(&self, len: usize) -> Option<Vec<usize>> {
        let mut path = Vec::with_capacity(len);
        (0..self.vertex_count()).find_map(|s| {
            path.clear();
            path.push(s);
            self.close_cycle(&mut path, len).then(|| path.clone())
        })
    }

    fn close_cycle(&self, path: &mut Vec<usize>, len: usize) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            return self.has_edge(last, s);
        }
        for &w in &self.adj[last] {
            if w > s && !path.contains(&w) {
                path.push(w);
                if self.close_cycle(path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    /// Serializes to the `p`/`v`/`e` edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p {} {}", self.vertex_count(), self.edge_count());
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "v {i} {l}");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let bad = |no: usize, why: &str| Error::Parse(format!("line {}: {why}", no + 1));
        let (no, header) = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let (n, m) = match head.as_slice() {
            ["p", n, m] => (
                n.parse::<usize>().map_err(|_| bad(no, "bad vertex count"))?,
                m.parse::<usize>().map_err(|_| bad(no, "bad edge count"))?,
            ),
            _ => return Err(bad(no, "expected `p <vertex_count> <edge_count>`")),
        };
        let mut labels: Vec<Option<String>> = vec![None; n];
        let mut edges = Vec::with_capacity(m);
        let mut seen = HashSet::new();
        for (no, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["v", i, label] => {
                    let i: usize = i.parse().map_err(|_| bad(no, "bad vertex index"))?;
                    let slot = labels.get_mut(i).ok_or_else(|| bad(no, "vertex index out of range"))?;
                    if slot.replace(label.to_string()).is_some() {
                        return Err(bad(no, "vertex declared twice"));
                    }
                }
                ["e", u, v] => {
                    let u: usize = u.parse().map_err(|_| bad(no, "bad edge endpoint"))?;
                    let v: usize = v.parse().map_err(|_| bad(no, "bad edge endpoint"))?;
                    if u >= n || v >= n {
                        return Err(bad(no, "edge endpoint out of range"));
                    }
                    if u == v {
                        return Err(bad(no, "self-loop"));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(bad(no, "parallel edge"));
                    }
                    edges.push((u.min(v), u.max(v)));
                }
                _ => return Err(bad(no, "expected a `v` or `e` record")),
            }
        }
        if edges.len() != m {
            return Err(Error::Parse(format!("header promises {m} edges, found {}", edges.len())));
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or_else(|| Error::Parse(format!("vertex {i} has no label"))))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(labels, edges)
    }
}

/// Reusable visit marks for repeated traversals.
#[derive(Debug, Default)]
pub(crate) struct Scratch {
    mark: Vec<u32>,
    stamp: u32,
    pub(crate) queue: Vec<usize>,
}

impl Scratch {
    pub(crate) fn reset(&mut self, n: usize) {
        if self.mark.len() != n || self.stamp == u32::MAX {
            self.mark = vec![0; n];
            self.stamp = 0;
        }
        self.stamp += 1;
        self.queue.clear();
    }

    pub(crate) fn seen(&self, v: usize) -> bool {
        self.mark[v] == self.stamp
    }

    pub(crate) fn visit(&mut self, v: usize) {
        self.mark[v] = self.stamp;
    }
}

/// Small named graphs used by tests and examples.
pub mod small {
    use super::Graph;

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(numbered(n), (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect()).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(numbered(n), (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(numbered(n), edges).unwrap()
    }

    /// `K_{1,leaves}` with the center at index 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(numbered(leaves + 1), (1..=leaves).map(|v| (0, v)).collect()).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_multiset(numbered(10), edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::small::*;
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    #[test]
    fn neighborhoods() {
        let k13 = star(3);
        assert_eq!(k13.neighbors(0).unwrap(), set(&[1, 2, 3]));
        assert!(matches!(k13.neighbors(9), Err(Error::Index { index: 9, len: 4 })));
        let lonely = Graph::new(vec!["a".into()], vec![]).unwrap();
        assert!(lonely.neighbors(0).unwrap().is_empty());
        let k2 = complete(2);
        assert_eq!(k2.neighbor_set(&set(&[0])).unwrap(), set(&[1]));
        assert!(k2.neighbor_set(&set(&[0, 1])).unwrap().is_empty());
    }

    #[test]
    fn common_neighbor_counts() {
        let c4 = cycle(4);
        assert_eq!(c4.common_neighbors(0, 2).unwrap().len(), 2);
        assert_eq!(c4.common_neighbors(0, 1).unwrap().len(), 0);
        assert!(matches!(c4.common_neighbors(1, 1), Err(Error::Domain(_))));
        assert_eq!(c4.ell().unwrap(), 2);
        assert!(matches!(complete(4).ell(), Err(Error::NoNonAdjacentPair)));
        assert_eq!(petersen().ell().unwrap(), 1);
    }

    #[test]
    fn components_and_sizes() {
        let k13 = star(3);
        assert_eq!(k13.components(&VertexSet::empty()).len(), 1);
        let parts = k13.components(&set(&[0]));
        assert_eq!(parts, vec![set(&[1]), set(&[2]), set(&[3])]);
        let p5 = path(5);
        let parts = p5.components(&set(&[1]));
        assert_eq!(parts, vec![set(&[2, 3, 4]), set(&[0])]);
    }

    #[test]
    fn rh_cuts() {
        let c6 = cycle(6);
        assert!(c6.is_rh_cut(&set(&[0, 3]), 1));
        assert!(!c6.is_rh_cut(&set(&[0, 2]), 1));
        assert!(c6.is_rh_cut(&set(&[0, 2]), 0));
        assert!(!c6.is_rh_cut(&set(&[0]), 0));
    }

    #[test]
    fn degree_sums() {
        let p3 = path(3);
        assert_eq!(p3.internal_degree_sum(&set(&[0, 1, 2])).unwrap(), 4);
        assert_eq!(complete(3).internal_degree_sum(&set(&[0, 1, 2])).unwrap(), 6);
        assert_eq!(path(5).internal_degree_sum(&set(&[0, 2, 4])).unwrap(), 0);
    }

    #[test]
    fn separators() {
        assert_eq!(cycle(6).min_vertex_separator(&set(&[0]), &set(&[3])).unwrap().len(), 2);
        assert_eq!(star(3).min_vertex_separator(&set(&[1]), &set(&[2])).unwrap(), set(&[0]));
        assert!(matches!(cycle(6).min_vertex_separator(&set(&[0]), &set(&[1])), Err(Error::Inseparable)));
        assert!(matches!(cycle(6).min_vertex_separator(&set(&[0]), &set(&[0])), Err(Error::Inseparable)));
    }

    #[test]
    fn connected_subsets_and_triples() {
        let c5 = cycle(5);
        let t = c5.connected_triples();
        assert_eq!(t.len(), 5);
        assert!(t.iter().all(|x| x.kind == TripleKind::Path));
        let k3 = complete(3).connected_triples();
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[0].kind, TripleKind::Cycle);
        assert_eq!(complete(5).connected_subsets(4).len(), 5);
        assert_eq!(path(4).connected_subsets(2).len(), 3);
        assert!(path(4).connected_subsets(0).is_empty());
    }

    #[test]
    fn cycles() {
        let c5 = cycle(5);
        assert_eq!((3..=5).map(|l| c5.has_cycle_of_length(l).unwrap()).collect::<Vec<_>>(), vec![false, false, true]);
        assert!(matches!(c5.has_cycle_of_length(6), Err(Error::Domain(_))));
        let k4 = complete(4);
        assert!(k4.has_cycle_of_length(3).unwrap() && k4.has_cycle_of_length(4).unwrap());
        assert!(!petersen().has_cycle_of_length(4).unwrap());
    }

    #[test]
    fn construction_rejects_malformed_input() {
        let l = vec!["a".to_string(), "b".to_string()];
        assert!(Graph::new(l.clone(), vec![(0, 0)]).is_err());
        assert!(Graph::new(l.clone(), vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(l.clone(), vec![(0, 2)]).is_err());
        assert!(Graph::new(vec!["a".into(), "a".into()], vec![]).is_err());
        assert!(Graph::from_edge_multiset(l, vec![(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = petersen();
        let text = g.to_edge_list();
        assert!(text.starts_with("p 10 15\nv 0 0\n"));
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(Graph::parse_edge_list("p 2 1\nv 0 a\nv 1 b\ne 0 0\n").is_err());
        assert!(Graph::parse_edge_list("p 2 2\nv 0 a\nv 1 b\ne 0 1\n").is_err());
        assert!(Graph::parse_edge_list("p 2 1\nv 0 a\ne 0 1\n").is_err());
        assert!(Graph::parse_edge_list("q 1 0\n").is_err());
    }
}
