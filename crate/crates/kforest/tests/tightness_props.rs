//! Heterochromatic number and tightness against brute force, the graph
//! connectivity equivalence, and the edge-minimality characterization of
//! trees.

mod common;

use kforest::hypergraph::Hypergraph;
use kforest::tightness::{
    heterochromatic_number, is_connected, is_k_tree, is_tight, rainbow_free_witness, HcOutcome,
};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn hc_matches_brute_force_exhaustively_on_four_vertices() {
    for h in common::all_hypergraphs_brute(4, 3) {
        assert_eq!(heterochromatic_number(&h).value(), common::hc_brute(&h), "hc on {h:?}");
    }
}

#[test]
fn hc_of_builtin_instance_is_four() {
    // Derived by brute force over all coloring classes; only hc >= 4 follows
    // from the reference rainbow-free 3-coloring.
    let h = common::paper_h();
    assert_eq!(common::hc_brute(&h), Some(4));
    match heterochromatic_number(&h) {
        HcOutcome::Value(r) => {
            assert_eq!(r.hc, 4);
            let c = r.witness.coloring();
            assert_eq!(c.num_colors(), 3);
            assert!(kforest::rainbow_edges(&h, &c).is_empty());
        }
        HcOutcome::NoRainbowEdgePossible => panic!("built-in instance has edges"),
    }
}

#[test]
fn witness_search_matches_brute_force() {
    for h in common::all_hypergraphs_brute(4, 3) {
        for t in 1..=4u32 {
            let brute = common::rainbow_free_brute(&h, t);
            match rainbow_free_witness(&h, t).unwrap() {
                Some(class) => {
                    // First in enumeration order means the minimum class.
                    let min = brute.iter().next().expect("oracle agrees a witness exists");
                    assert_eq!(class.colors(), min.as_slice());
                }
                None => assert!(brute.is_empty(), "missed witness for t={t} on {h:?}"),
            }
        }
    }
}

#[test]
fn hc_bounds_hold_wherever_defined() {
    for h in common::all_hypergraphs_brute(4, 3) {
        if let Some(hc) = heterochromatic_number(&h).value() {
            assert!(hc >= h.k() && hc <= h.n(), "bounds violated on {h:?}");
        }
    }
}

#[test]
fn tightness_equals_connectivity_for_graphs() {
    // Exhaustive over all 2-graphs on 2..=5 vertices. Edgeless graphs fall
    // out consistently: not tight and (for n >= 2) not connected.
    for n in 2..=5u32 {
        for h in common::all_hypergraphs_brute(n, 2) {
            assert_eq!(
                is_tight(&h),
                is_connected(&h).unwrap(),
                "tightness vs connectivity on {h:?}"
            );
        }
    }
    // The single-vertex graph is the one degenerate divergence: connected by
    // the partition formulation, but edgeless and therefore not tight.
    let lonely = Hypergraph::new(1, 2, vec![]).unwrap();
    assert!(is_connected(&lonely).unwrap());
    assert!(!is_tight(&lonely));
    assert_eq!(heterochromatic_number(&lonely), HcOutcome::NoRainbowEdgePossible);
}

fn tight_and_edge_removal_minimal(h: &Hypergraph) -> bool {
    is_tight(h) && h.edges().iter().all(|&e| !is_tight(&h.without_edge(e)))
}

#[test]
fn trees_are_the_edge_minimal_tight_graphs() {
    // A tight forest is the same thing as a tight graph that loses
    // tightness on every edge removal.
    for h in common::all_hypergraphs_brute(4, 3) {
        assert_eq!(is_k_tree(&h), tight_and_edge_removal_minimal(&h), "on {h:?}");
    }
    let mut rng = StdRng::seed_from_u64(42);
    let possible: Vec<_> = kforest::hypergraph::k_subsets(5, 3).collect();
    for _ in 0..120 {
        let edges: Vec<_> =
            possible.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
        let h = Hypergraph::new(5, 3, edges).unwrap();
        assert_eq!(is_k_tree(&h), tight_and_edge_removal_minimal(&h), "on {h:?}");
    }
}

#[test]
fn returned_witnesses_revalidate() {
    for h in common::all_hypergraphs_brute(4, 3) {
        if let HcOutcome::Value(r) = heterochromatic_number(&h) {
            let c = r.witness.coloring();
            assert!(kforest::rainbow_edges(&h, &c).is_empty());
            assert_eq!(c.num_colors(), r.hc - 1);
        }
    }
}
