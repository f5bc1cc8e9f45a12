//! Cross-checks of the search engine and constructions against independent
//! brute force.

use std::collections::BTreeSet;
use std::sync::Arc;

use ebi_core::ebi_search::{compute_ebi, find_strongly_edge_balanced, SearchConfig};
use ebi_core::graph::{
    complete_bipartite, complete_graph, crown_graph, cycle_graph, path_graph, Graph,
};
use ebi_core::{
    ebi_formula, labeling_for_index, max_labeling_even, max_labeling_odd, EdgeLabeling,
};

/// Index set over every labeling of both friendly splits, straight from the
/// definition: walk all 2^q labelings and keep the edge-friendly ones.
fn full_space_index_set(g: &Arc<Graph>) -> BTreeSet<usize> {
    let q = g.edge_count();
    assert!(q <= 16);
    (0u32..1 << q)
        .filter_map(|mask| {
            let labels = (0..q).map(|i| mask >> i & 1 == 1).collect();
            let l = EdgeLabeling::new(Arc::clone(g), labels).unwrap();
            l.is_edge_friendly().then(|| l.index())
        })
        .collect()
}

fn small_graphs() -> Vec<Graph> {
    vec![
        complete_graph(2),
        complete_graph(3),
        complete_graph(4),
        path_graph(5),
        cycle_graph(5),
        cycle_graph(6),
        complete_bipartite(2, 3),
        complete_bipartite(1, 4),
        Graph::new(6, [(0, 1), (2, 3), (3, 4), (4, 5), (2, 5), (1, 2)]).unwrap(),
        Graph::new(7, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap(),
    ]
}

#[test]
fn half_space_agrees_with_full_enumeration() {
    for g in small_graphs() {
        let g = Arc::new(g);
        let report = compute_ebi(&g, SearchConfig::default()).unwrap();
        let expected: Vec<_> = full_space_index_set(&g).into_iter().collect();
        assert_eq!(report.index_set, expected, "{}", g.to_edge_list());
    }
}

#[test]
fn crown_sets_match_formula_for_small_orders() {
    for n in 3..=5 {
        let g = Arc::new(crown_graph(n));
        let report = compute_ebi(&g, SearchConfig::default()).unwrap();
        assert_eq!(report.index_set, ebi_formula(n).unwrap(), "n = {n}");
    }
    // crown(4) has 12 edges: the full-space oracle is cheap there.
    let expected: Vec<_> = full_space_index_set(&Arc::new(crown_graph(4)))
        .into_iter()
        .collect();
    assert_eq!(expected, vec![0, 2, 4]);
}

#[test]
fn crown_five_histogram_total() {
    let report = compute_ebi(&Arc::new(crown_graph(5)), SearchConfig::default()).unwrap();
    assert_eq!(report.enumerated, 184_756);
    assert_eq!(report.histogram.values().sum::<u64>(), 184_756);
    assert_eq!(report.index_set, vec![0, 1, 2]);
}

#[test]
fn k4_max_index_by_full_enumeration() {
    let g = Arc::new(complete_graph(4));
    assert_eq!(full_space_index_set(&g).last(), Some(&2));
}

#[test]
fn every_even_order_max_labeling() {
    for n in (4..=50).step_by(2) {
        let l = max_labeling_even(n).unwrap();
        let c = l.counts();
        assert_eq!(c.e0, c.e1, "n = {n}");
        assert_eq!(c.e1, (n - 1) * n / 2);
        assert_eq!(c.index, 2 * n - 4);
        assert_eq!((c.v0, c.unlabeled), (2, 0));
    }
}

#[test]
fn every_odd_order_max_labeling() {
    for n in (7..=51).step_by(2) {
        let l = max_labeling_odd(n).unwrap();
        let c = l.counts();
        assert!(l.is_edge_friendly());
        assert_eq!(c.e0, c.e1, "n = {n}");
        assert_eq!(c.e1, (n - 2) * (n + 1) / 2 + 1);
        assert_eq!(c.index, 2 * n - 8);
        assert_eq!((c.v0, c.unlabeled), (4, 0));
    }
}

#[test]
fn crown_three_witness_is_strongly_balanced() {
    let balanced = labeling_for_index(3, 0).unwrap();
    let found = find_strongly_edge_balanced(balanced.graph(), SearchConfig::default());
    assert!(found.found().is_some());
    assert!(balanced.is_strongly_edge_balanced());
    let c = balanced.counts();
    assert_eq!((c.e0, c.e1, c.v0, c.v1), (3, 3, 1, 1));
}

#[test]
fn reports_are_deterministic() {
    let g = Arc::new(crown_graph(5));
    let a = compute_ebi(&g, SearchConfig::default()).unwrap();
    let b = compute_ebi(&g, SearchConfig::with_jobs(4)).unwrap();
    assert_eq!(a, b);
    for (k, w) in &a.witnesses {
        assert_eq!(w.index(), *k);
        assert!(w.is_edge_friendly());
    }
}
