//! Commutativity-graph properties across engines and power bounds.

use std::collections::BTreeSet;

use commgraph::catalog::{elementary_set, heisenberg_set, nielsen_set};
use commgraph::certify::thompson_generators;
use commgraph::commgraph::{edge_witness, CommGraph, GeneratorSet};

fn edge_pairs(g: &CommGraph) -> BTreeSet<(String, String)> {
    g.edges().into_iter().map(|e| (e.s, e.t)).collect()
}

fn sets(bound: u32) -> Vec<GeneratorSet> {
    vec![
        heisenberg_set(bound).unwrap(),
        elementary_set(3, bound).unwrap(),
        nielsen_set(3, bound).unwrap(),
        thompson_generators(6, bound).unwrap(),
    ]
}

#[test]
fn edge_sets_grow_with_power_bound() {
    let graphs: Vec<Vec<CommGraph>> = (1..=5).map(|b| sets(b).iter().map(CommGraph::build).collect()).collect();
    for w in graphs.windows(2) {
        for (small, large) in w[0].iter().zip(&w[1]) {
            assert!(edge_pairs(small).is_subset(&edge_pairs(large)));
        }
    }
}

#[test]
fn every_stored_witness_reverifies() {
    for bound in [1, 3] {
        for gens in sets(bound) {
            let g = CommGraph::build(&gens);
            for e in g.edges() {
                let (s, t) = (gens.get(&e.s).unwrap(), gens.get(&e.t).unwrap());
                assert!(e.witness().verify(s, t).unwrap(), "{}--{}", e.s, e.t);
                assert!(e.n_s >= 1 && e.n_t >= 1 && e.n_s as u32 <= bound && e.n_t as u32 <= bound);
            }
        }
    }
}

#[test]
fn no_edge_means_no_witness_within_bound() {
    for gens in sets(2) {
        let g = CommGraph::build(&gens);
        for (i, s) in gens.items().iter().enumerate() {
            for t in &gens.items()[i + 1..] {
                let w = edge_witness(&s.element, &t.element, 2).unwrap();
                assert_eq!(w.is_some(), g.has_edge(&s.label, &t.label));
            }
        }
    }
}

#[test]
fn forest_spans_each_component() {
    for gens in sets(1) {
        let comps = CommGraph::build(&gens).components();
        for part in &comps.parts {
            assert_eq!(part.forest.len() + 1, part.vertices.len());
        }
        let covered: usize = comps.parts.iter().map(|p| p.vertices.len()).sum();
        assert_eq!(covered, gens.len());
    }
}

#[test]
fn heisenberg_a_b_never_commute_up_to_five() {
    let gens = heisenberg_set(5).unwrap();
    let g = CommGraph::build(&gens);
    assert!(!g.has_edge("a", "b"));
    assert_eq!(g.edge_count(), 2);
}

#[test]
fn thompson_isolated_vertices() {
    let g = CommGraph::build(&thompson_generators(10, 1).unwrap());
    assert_eq!(g.degree("x0"), Some(0));
    assert_eq!(g.degree("x1"), Some(0));
    assert!(g.remove_vertices(&["x0", "x1"]).unwrap().is_connected());
    assert!(!g.is_connected());
}

#[test]
fn sl_disjoint_elementaries_commute() {
    let g = CommGraph::build(&elementary_set(5, 1).unwrap());
    let w = g.witness("e12", "e34").unwrap();
    assert_eq!((w.n_s, w.n_t), (1, 1));
    assert!(!g.has_edge("e12", "e23"));
}
