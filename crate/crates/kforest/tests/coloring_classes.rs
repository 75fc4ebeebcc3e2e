//! Class enumeration against the brute-force quotient of the full
//! assignment space.

mod common;

use std::collections::BTreeSet;

use kforest::coloring::{enumerate_colorings, Coloring, ColoringClass};

#[test]
fn enumeration_matches_brute_force_quotient() {
    for n in 1..=6u32 {
        for t in 1..=n {
            let brute = common::coloring_classes_brute(n, t);
            let streamed: Vec<Vec<u8>> =
                enumerate_colorings(n, t).map(|c| c.colors().to_vec()).collect();
            assert_eq!(
                streamed,
                brute.iter().cloned().collect::<Vec<_>>(),
                "classes for n={n}, t={t}"
            );
        }
    }
}

#[test]
fn frozen_class_counts() {
    // Brute-force counts over 3^4 and 3^6 assignments, frozen here.
    assert_eq!(common::coloring_classes_brute(4, 3).len(), 6);
    assert_eq!(common::coloring_classes_brute(6, 3).len(), 90);
    assert_eq!(enumerate_colorings(4, 3).count(), 6);
    assert_eq!(enumerate_colorings(6, 3).count(), 90);
}

#[test]
fn expanding_classes_recovers_all_surjective_colorings() {
    for n in 2..=5u32 {
        for t in 1..=n {
            let mut expanded = BTreeSet::new();
            let mut total = 0usize;
            for class in enumerate_colorings(n, t) {
                for member in class.expansions() {
                    expanded.insert(member.colors().to_vec());
                    total += 1;
                }
            }
            assert_eq!(total, expanded.len(), "relabelings collide for n={n}, t={t}");
            let direct: BTreeSet<Vec<u8>> = common::all_surjective_colorings(n, t)
                .iter()
                .map(|c| c.colors().to_vec())
                .collect();
            assert_eq!(expanded, direct, "expansion soundness for n={n}, t={t}");
        }
    }
}

#[test]
fn stream_supports_early_termination() {
    let mut stream = enumerate_colorings(20, 7);
    let first = stream.next().unwrap();
    assert_eq!(first.num_colors(), 7);
    drop(stream);
}

#[test]
fn canonicalization_agrees_with_oracle() {
    for c in common::all_surjective_colorings(5, 3) {
        let class = ColoringClass::of(&c);
        assert_eq!(class.colors(), common::canonical_colors(c.colors()).as_slice());
    }
}

#[test]
fn merging_colors_preserves_rainbow_freeness() {
    // Basis of the heterochromatic monotonicity argument.
    let h = common::paper_h();
    let witness = Coloring::new(vec![3, 2, 2, 2, 2, 1], 3).unwrap();
    assert!(kforest::rainbow_edges(&h, &witness).is_empty());
    for from in 1..=3u8 {
        for to in 1..=3u8 {
            if from == to {
                continue;
            }
            let merged = witness.merge_colors(from, to);
            assert!(
                kforest::rainbow_edges(&h, &merged).is_empty(),
                "merging {from} into {to} introduced a rainbow edge"
            );
        }
    }
}
