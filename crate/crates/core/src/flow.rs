//! Unit-capacity vertex-splitting max-flow for minimum vertex separators.

use std::collections::VecDeque;

use crate::graph::Graph;

const INF: u32 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Role {
    /// May be cut at unit cost.
    Normal,
    /// Never cut.
    Protected,
    /// Already removed from the graph.
    Deleted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CutOutcome {
    /// A minimum separator (its size is below the requested limit).
    Cut(Vec<usize>),
    /// Every separator has at least this many vertices.
    AtLeast(usize),
    /// Some source reaches some sink through protected vertices only.
    Inseparable,
}

/// Each vertex `v` becomes `in(v) = 2v -> out(v) = 2v+1`; every edge becomes two infinite arcs.
#[derive(Debug, Clone)]
pub(crate) struct SplitNetwork {
    n: usize,
    head: Vec<u32>,
    base: Vec<u32>,
    cap: Vec<u32>,
    out_arcs: Vec<Vec<u32>>,
    parent: Vec<u32>,
    visited: Vec<bool>,
    queue: VecDeque<usize>,
}

impl SplitNetwork {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut net = SplitNetwork {
            n,
            head: Vec::new(),
            base: Vec::new(),
            cap: Vec::new(),
            out_arcs: vec![Vec::new(); 2 * n],
            parent: vec![u32::MAX; 2 * n],
            visited: vec![false; 2 * n],
            queue: VecDeque::new(),
        };
        // Arc 2v is the split arc of v, so vertex caps can be reset by index.
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, INF);
            net.add_arc(2 * v + 1, 2 * u, INF);
        }
        net.cap = net.base.clone();
        net
    }

    /// Placeholder used while a worker's network is temporarily moved out.
    pub(crate) fn empty() -> Self {
        SplitNetwork {
            n: 0,
            head: Vec::new(),
            base: Vec::new(),
            cap: Vec::new(),
            out_arcs: Vec::new(),
            parent: Vec::new(),
            visited: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let a = self.head.len() as u32;
        self.head.push(to as u32);
        self.base.push(cap);
        self.out_arcs[from].push(a);
        self.head.push(from as u32);
        self.base.push(0);
        self.out_arcs[to].push(a + 1);
    }

    /// Minimum separator of `sources` from `sinks` avoiding protected and deleted vertices,
    /// giving up once `limit` disjoint paths are found.
    pub(crate) fn min_cut(&mut self, sources: &[usize], sinks: &[usize], roles: &[Role], limit: usize) -> CutOutcome {
        self.cap.copy_from_slice(&self.base);
        for (v, role) in roles.iter().enumerate() {
            self.cap[2 * v] = match role {
                Role::Normal => 1,
                Role::Protected => INF,
                Role::Deleted => 0,
            };
        }
        let mut is_sink = vec![false; 2 * self.n];
        for &t in sinks {
            is_sink[2 * t] = true;
        }
        let mut flow = 0usize;
        loop {
            if flow >= limit {
                return CutOutcome::AtLeast(limit);
            }
            match self.augmenting_path(sources, &is_sink) {
                None => break,
                Some(end) => {
                    let mut bottleneck = INF;
                    let mut node = end;
                    while self.parent[node] != u32::MAX {
                        let a = self.parent[node] as usize;
                        bottleneck = bottleneck.min(self.cap[a]);
                        node = self.head[a ^ 1] as usize;
                    }
                    if bottleneck >= INF / 2 {
                        return CutOutcome::Inseparable;
                    }
                    let mut node = end;
                    while self.parent[node] != u32::MAX {
                        let a = self.parent[node] as usize;
                        self.cap[a] -= bottleneck;
                        self.cap[a ^ 1] += bottleneck;
                        node = self.head[a ^ 1] as usize;
                    }
                    flow += bottleneck as usize;
                }
            }
        }
        // The last failed search left `visited` as the residual source side.
        let cut: Vec<usize> = (0..self.n)
            .filter(|&v| roles[v] == Role::Normal && self.visited[2 * v] && !self.visited[2 * v + 1])
            .collect();
        debug_assert_eq!(cut.len(), flow);
        CutOutcome::Cut(cut)
    }

    fn augmenting_path(&mut self, sources: &[usize], is_sink: &[bool]) -> Option<usize> {
        self.visited.iter_mut().for_each(|x| *x = false);
        self.queue.clear();
        for &s in sources {
            for node in [2 * s, 2 * s + 1] {
                self.visited[node] = true;
                self.parent[node] = u32::MAX;
            }
            self.queue.push_back(2 * s + 1);
        }
        while let Some(u) = self.queue.pop_front() {
            for &a in &self.out_arcs[u] {
                let a = a as usize;
                let w = self.head[a] as usize;
                if self.cap[a] > 0 && !self.visited[w] {
                    self.visited[w] = true;
                    self.parent[w] = a as u32;
                    if is_sink[w] {
                        return Some(w);
                    }
                    self.queue.push_back(w);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small;

    #[test]
    fn cycle_cut_and_limit() {
        let g = small::cycle(8);
        let mut net = SplitNetwork::new(&g);
        let roles = vec![Role::Normal; 8];
        match net.min_cut(&[0], &[4], &roles, usize::MAX) {
            CutOutcome::Cut(c) => assert_eq!(c.len(), 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(net.min_cut(&[0], &[4], &roles, 1), CutOutcome::AtLeast(1));
    }

    #[test]
    fn protected_and_deleted_vertices() {
        let g = small::cycle(6);
        let mut net = SplitNetwork::new(&g);
        let mut roles = vec![Role::Normal; 6];
        roles[1] = Role::Protected;
        roles[2] = Role::Protected;
        assert_eq!(net.min_cut(&[0], &[3], &roles, usize::MAX), CutOutcome::Inseparable);
        roles[2] = Role::Deleted;
        match net.min_cut(&[0], &[3], &roles, usize::MAX) {
            CutOutcome::Cut(c) => assert_eq!(c.len(), 1),
            other => panic!("{other:?}"),
        }
    }
}
