//! Isomorphism testing for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ISOMORPHISM_CAP: usize = 16;

/// Backtracking isomorphism test, refusing graphs above [`ISOMORPHISM_CAP`] vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An adjacency-preserving bijection `map[g_vertex] = h_vertex`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    for x in [g, h] {
        if x.vertex_count() > ISOMORPHISM_CAP {
            return Err(Error::Budget(format!(
                "isomorphism search is capped at {ISOMORPHISM_CAP} vertices, got {}",
                x.vertex_count()
            )));
        }
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let gi: Vec<_> = (0..n).map(|v| invariant(g, v)).collect();
    let hi: Vec<_> = (0..n).map(|v| invariant(h, v)).collect();
    let mut a = gi.clone();
    let mut b = hi.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let order = search_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend(g, h, &gi, &hi, &order, 0, &mut map, &mut used);
    Ok(found.then_some(map))
}

/// Checks that `map` is a bijection preserving adjacency and non-adjacency.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || map.len() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

fn invariant(g: &Graph, v: usize) -> (usize, usize, Vec<usize>) {
    let nb = g.adj(v);
    let triangles =
        nb.iter().enumerate().map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count()).sum();
    let mut degs: Vec<usize> = nb.iter().map(|&w| g.degree(w)).collect();
    degs.sort_unstable();
    (nb.len(), triangles, degs)
}

// Breadth-first order so each new vertex has mapped neighbors to constrain it.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| g.degree(v)).unwrap();
        placed[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let u = order[i];
            for &w in g.adj(u) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    gi: &[(usize, usize, Vec<usize>)],
    hi: &[(usize, usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in 0..h.vertex_count() {
        if used[c] || gi[v] != hi[c] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], c));
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g, h, gi, hi, order, depth + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small;

    #[test]
    fn basic_cases() {
        assert!(!are_isomorphic(&small::cycle(4), &small::complete(4)).unwrap());
        assert!(are_isomorphic(&small::petersen(), &small::petersen()).unwrap());
        assert!(!are_isomorphic(&small::cycle(6), &small::path(6)).unwrap());
        let two_triangles =
            Graph::new((0..6).map(|i| i.to_string()).collect(), vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert!(!are_isomorphic(&small::cycle(6), &two_triangles).unwrap());
        assert!(matches!(are_isomorphic(&small::cycle(17), &small::cycle(17)), Err(Error::Budget(_))));
    }

    #[test]
    fn relabeled_cycle() {
        let g = small::cycle(7);
        let perm = [3, 6, 2, 0, 5, 1, 4];
        let edges = g.edges().map(|(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v]))).collect();
        let h = Graph::new(g.labels().to_vec(), edges).unwrap();
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(is_isomorphism(&g, &h, &map));
        assert!(is_isomorphism(&g, &h, &perm));
    }
}
