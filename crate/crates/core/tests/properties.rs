//! Property-based checks of the core invariants against independent brute-force oracles.

use proptest::prelude::*;

use netdiag_core::diagnosis::{
    conditional_diagnosability_exact, distinguishable_by_syndromes, distinguishable_semantic,
    distinguishable_structural, is_conditional, tc_upper_witness, FaultSet,
};
use netdiag_core::extra::{kappa_h, kappa_h_brute, KappaStatus};
use netdiag_core::iso::{find_isomorphism, is_isomorphism};
use netdiag_core::perm::{compose, Parity, Permutation};
use netdiag_core::{Budget, Graph, VertexSet};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn same_size_perms(max_n: usize, count: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), count)
            .prop_map(|vs| vs.into_iter().map(|v| Permutation::new(v).unwrap()).collect())
    })
}

/// Connected graphs: a random spanning tree plus random extra edges.
fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
            let extras = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), parents, extras, 0u8..3)
        })
        .prop_map(|(n, parents, extras, density)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extras[idx] && (idx as u8 % 3) < density {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edge_multiset((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
        })
}

fn subset(n: usize, mask: u32) -> VertexSet {
    VertexSet::new((0..n).filter(|i| mask >> i & 1 == 1))
}

fn brute_components(g: &Graph, removed: &VertexSet) -> usize {
    let n = g.vertex_count();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            if !removed.contains(u) && !removed.contains(v) && label[u] != label[v] {
                let m = label[u].min(label[v]);
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = (0..n).filter(|v| !removed.contains(*v)).map(|v| label[v]).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn inverse_cancels(p in permutation(9)) {
        prop_assert!(compose(&p, &p.inverse()).unwrap().is_identity());
        prop_assert!(compose(&p.inverse(), &p).unwrap().is_identity());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(Permutation::from_one_line(&p.label()).unwrap(), p);
    }

    #[test]
    fn composition_is_associative_and_parity_multiplies(ps in same_size_perms(8, 3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        let left = compose(&compose(a, b).unwrap(), c).unwrap();
        let right = compose(a, &compose(b, c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(compose(a, b).unwrap().parity(), a.parity().flip(b.parity()));
        let inversions = (0..a.n()).flat_map(|i| (i + 1..a.n()).map(move |j| (i, j))).filter(|&(i, j)| a.images()[i] > a.images()[j]).count();
        prop_assert_eq!(a.parity() == Parity::Even, inversions % 2 == 0);
    }

    #[test]
    fn components_partition_the_survivors(g in connected_graph(2, 12), mask in any::<u32>()) {
        let n = g.vertex_count();
        let removed = subset(n, mask & 0x0fff);
        let comps = g.components(&removed);
        prop_assert_eq!(comps.iter().map(VertexSet::len).sum::<usize>(), n - removed.len());
        prop_assert_eq!(comps.len(), brute_components(&g, &removed));
        prop_assert!(comps.windows(2).all(|w| w[0].len() >= w[1].len()));
        for (u, v) in g.edges() {
            let side = |x: usize| comps.iter().position(|c| c.contains(x));
            if !removed.contains(u) && !removed.contains(v) {
                prop_assert_eq!(side(u), side(v));
            }
        }
    }

    #[test]
    fn separators_separate_and_are_minimum(g in connected_graph(3, 9), a in 0usize..9, b in 0usize..9) {
        let n = g.vertex_count();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        let s = g.min_vertex_separator(&VertexSet::new([a]), &VertexSet::new([b])).unwrap();
        prop_assert!(!s.contains(a) && !s.contains(b));
        let same = |removed: &VertexSet| g.components(removed).iter().any(|c| c.contains(a) && c.contains(b));
        prop_assert!(!same(&s));
        let smaller = (0u32..1 << n).map(|m| subset(n, m)).filter(|f| f.len() < s.len() && !f.contains(a) && !f.contains(b)).any(|f| !same(&f));
        prop_assert!(!smaller);
    }

    #[test]
    fn relabeled_copies_are_isomorphic(g in connected_graph(2, 10), shuffle in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()) {
        let n = g.vertex_count();
        let order: Vec<usize> = shuffle.into_iter().filter(|&i| i < n).collect();
        let h = Graph::new(g.labels().to_vec(), g.edges().map(|(u, v)| (order[u], order[v])).collect()).unwrap();
        let map = find_isomorphism(&g, &h).unwrap().expect("relabeling is an isomorphism");
        prop_assert!(is_isomorphism(&g, &h, &map));
        let back = find_isomorphism(&h, &g).unwrap().expect("isomorphism is symmetric");
        prop_assert!(is_isomorphism(&h, &g, &back));
    }

    #[test]
    fn edge_lists_round_trip(g in connected_graph(1, 12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn ell_matches_pairwise_scan(g in connected_graph(3, 12)) {
        let n = g.vertex_count();
        let brute = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| !g.has_edge(x, y))
            .map(|(x, y)| g.common_neighbors(x, y).unwrap().len()).max();
        prop_assert_eq!(g.ell().ok(), brute);
    }

    #[test]
    fn conditional_sets_match_definition(g in connected_graph(2, 12), mask in any::<u32>()) {
        let n = g.vertex_count();
        let f = subset(n, mask & 0x0fff);
        let by_def = (0..n).filter(|v| !f.contains(*v)).all(|v| g.adj(v).iter().any(|w| !f.contains(*w)));
        prop_assert_eq!(is_conditional(&g, &f), by_def);
    }

    #[test]
    fn structural_and_semantic_distinguishability_agree(g in connected_graph(2, 10), m1 in any::<u32>(), m2 in any::<u32>()) {
        let n = g.vertex_count();
        let (a, b) = (subset(n, m1 & 0x3ff), subset(n, m2 & 0x3ff));
        prop_assume!(a != b);
        let (f1, f2) = (FaultSet::new(&g, a).unwrap(), FaultSet::new(&g, b).unwrap());
        prop_assert_eq!(distinguishable_structural(&g, &f1, &f2).unwrap(), distinguishable_semantic(&g, &f1, &f2).unwrap());
    }

    #[test]
    fn syndrome_enumeration_agrees_when_small(g in connected_graph(2, 5), m1 in any::<u32>(), m2 in any::<u32>()) {
        let n = g.vertex_count();
        let (a, b) = (subset(n, m1 & 0x1f), subset(n, m2 & 0x1f));
        prop_assume!(a != b);
        let (f1, f2) = (FaultSet::new(&g, a).unwrap(), FaultSet::new(&g, b).unwrap());
        if let Ok(by_syndromes) = distinguishable_by_syndromes(&g, &f1, &f2) {
            prop_assert_eq!(by_syndromes, distinguishable_semantic(&g, &f1, &f2).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn flow_engine_matches_brute_force(g in connected_graph(4, 12), h in 0usize..3) {
        let fast = kappa_h(&g, h, &Budget::default()).unwrap();
        let slow = kappa_h_brute(&g, h, 8).unwrap();
        match (fast.status, slow.status) {
            (KappaStatus::Exact, KappaStatus::Exact) => prop_assert_eq!(fast.value(), slow.value()),
            (KappaStatus::NotRhGraph, KappaStatus::NotRhGraph) => {}
            (KappaStatus::Exact, KappaStatus::Bracket) => prop_assert!(fast.lower > 8),
            other => prop_assert!(false, "engine and brute force disagree: {:?}", other),
        }
        if let Some(w) = &fast.witness {
            prop_assert!(g.is_rh_cut(w, h));
        }
    }

    #[test]
    fn exact_diagnosability_never_exceeds_the_witness(g in connected_graph(5, 10)) {
        if let Ok(w) = tc_upper_witness(&g) {
            let cap = w.bound.min(6);
            let exact = conditional_diagnosability_exact(&g, cap).unwrap();
            prop_assert!(exact.value <= w.bound);
            prop_assert!(!distinguishable_semantic(&g, &w.f1, &w.f2).unwrap());
        }
    }
}
