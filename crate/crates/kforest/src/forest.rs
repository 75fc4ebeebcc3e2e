//! The forest decision procedure and its witness structures.
//!
//! A hypergraph is a forest when every edge admits a coloring that makes it
//! the unique rainbow edge. `phi` enumerates those witness classes per edge,
//! `delta` derives the non-edges forced rainbow by all of them (adding such a
//! non-edge can never be a forest again), and `check_saturated` decides
//! inclusion-maximality by the direct definition, attaching delta
//! certificates where they exist.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::ColoringClass;
use crate::hypergraph::{binomial, Hypergraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("{edge} is not an edge")]
    EdgeNotInGraph { edge: VertexSet },
    #[error("{edge} is not a forest edge: no coloring has it as unique rainbow edge")]
    EmptyPhi { edge: VertexSet },
    #[error("not a forest: edge {edge} has no witness coloring")]
    NotAForest { edge: VertexSet },
}

/// The witness classes for one edge: every class of surjective `k`-colorings
/// whose rainbow set is exactly `{edge}`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiSet {
    pub edge: VertexSet,
    pub classes: Vec<ColoringClass>,
}

/// The non-edges that are rainbow under every class in `phi(edge)`. Adding
/// any of them destroys the witness for `edge`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaSet {
    pub edge: VertexSet,
    pub forced: Vec<VertexSet>,
}

/// Result of the forest check: either a witness coloring per edge (one row
/// per edge, in edge order) or the first edge that has none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestCheck {
    Forest { witnesses: Vec<EdgeWitness> },
    NotForest { failing_edge: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeWitness {
    pub edge: VertexSet,
    pub coloring: ColoringClass,
}

impl ForestCheck {
    pub fn is_forest(&self) -> bool {
        matches!(self, ForestCheck::Forest { .. })
    }

    pub fn witnesses(&self) -> &[EdgeWitness] {
        match self {
            ForestCheck::Forest { witnesses } => witnesses,
            ForestCheck::NotForest { .. } => &[],
        }
    }
}

/// Result of the saturation check: per non-edge certificates when saturated,
/// or the first non-edge whose addition keeps the graph a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SaturationCheck {
    Saturated { certificates: Vec<NonEdgeCertificate> },
    NotSaturated { addable_edge: VertexSet },
}

impl SaturationCheck {
    pub fn is_saturated(&self) -> bool {
        matches!(self, SaturationCheck::Saturated { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonEdgeCertificate {
    pub non_edge: VertexSet,
    pub kind: CertificateKind,
}

/// How a non-edge was ruled out. The direct re-check is always what decides;
/// a `DeltaCover` additionally names the first edge (in edge order) whose
/// delta set contains the non-edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateKind {
    DeltaCover { edge: VertexSet },
    DirectOnly,
}

/// Backtracking enumeration of the classes with rainbow set exactly
/// `{target}`, capped at `limit` classes.
///
/// Vertices are colored in label order in restricted-growth form. A branch
/// dies as soon as a fully-colored edge other than the target is rainbow, or
/// two target vertices share a color. Because the target ends up rainbow
/// under `k` colors, every emitted class is automatically surjective.
fn phi_classes(h: &Hypergraph, target: VertexSet, limit: usize) -> Vec<ColoringClass> {
    let n = h.n() as usize;
    let k = h.k() as u8;
    let closing = h.edges_by_max_vertex();
    let mut colors = vec![0u8; n];
    let mut out = Vec::new();

    fn go(
        v: usize,
        max_used: u8,
        target_colors: u64,
        h: &Hypergraph,
        target: VertexSet,
        k: u8,
        closing: &[Vec<VertexSet>],
        colors: &mut Vec<u8>,
        out: &mut Vec<ColoringClass>,
        limit: usize,
    ) -> bool {
        let n = h.n() as usize;
        if v > n {
            out.push(ColoringClass::from_rgs_unchecked(colors.clone()));
            return out.len() >= limit;
        }
        let on_target = target.contains(v as u32);
        let cap = (max_used + 1).min(k);
        for c in 1..=cap {
            if on_target && target_colors & (1 << (c - 1)) != 0 {
                continue;
            }
            colors[v - 1] = c;
            let mut ok = true;
            for &f in &closing[v] {
                if f == target {
                    continue; // distinctness on the target is enforced above
                }
                let mut bits = 0u64;
                for u in f.vertices() {
                    bits |= 1 << (colors[(u - 1) as usize] - 1);
                }
                if bits.count_ones() == f.len() {
                    ok = false;
                    break;
                }
            }
            if ok {
                let next_target_colors =
                    if on_target { target_colors | 1 << (c - 1) } else { target_colors };
                if go(
                    v + 1,
                    max_used.max(c),
                    next_target_colors,
                    h,
                    target,
                    k,
                    closing,
                    colors,
                    out,
                    limit,
                ) {
                    return true;
                }
            }
        }
        false
    }

    go(1, 0, 0, h, target, k, &closing, &mut colors, &mut out, limit);
    out
}

/// All classes of surjective `k`-colorings in which `e` is the only rainbow
/// edge.
pub fn phi(h: &Hypergraph, e: VertexSet) -> Result<PhiSet, ForestError> {
    if !h.has_edge(e) {
        return Err(ForestError::EdgeNotInGraph { edge: e });
    }
    Ok(PhiSet { edge: e, classes: phi_classes(h, e, usize::MAX) })
}

/// First witness class for `e`, if any. The cheap core of the forest check.
pub fn first_phi_class(h: &Hypergraph, e: VertexSet) -> Result<Option<ColoringClass>, ForestError> {
    if !h.has_edge(e) {
        return Err(ForestError::EdgeNotInGraph { edge: e });
    }
    Ok(phi_classes(h, e, 1).into_iter().next())
}

/// Decides the forest property, producing one witness coloring per edge on
/// success and the first edge without one on failure.
///
/// An edgeless hypergraph is vacuously a forest.
pub fn check_forest(h: &Hypergraph) -> ForestCheck {
    let mut witnesses = Vec::with_capacity(h.edge_count());
    for &e in h.edges() {
        match phi_classes(h, e, 1).into_iter().next() {
            Some(coloring) => witnesses.push(EdgeWitness { edge: e, coloring }),
            None => return ForestCheck::NotForest { failing_edge: e },
        }
    }
    ForestCheck::Forest { witnesses }
}

pub fn is_k_forest(h: &Hypergraph) -> bool {
    check_forest(h).is_forest()
}

/// The non-edges rainbow under every class of `phi(h, e)`, in ascending
/// bitmask order. Errors when `phi(h, e)` is empty: "all colorings" would be
/// vacuous and would poison saturation certificates.
pub fn delta(h: &Hypergraph, e: VertexSet) -> Result<DeltaSet, ForestError> {
    let phi = phi(h, e)?;
    if phi.classes.is_empty() {
        return Err(ForestError::EmptyPhi { edge: e });
    }
    let forced = h
        .non_edges()
        .into_iter()
        .filter(|&f| phi.classes.iter().all(|class| class.is_rainbow(f)))
        .collect();
    Ok(DeltaSet { edge: e, forced })
}

/// Direct saturation test: the first non-edge whose addition leaves the
/// graph a forest, or `None` when the graph is saturated.
pub fn first_addable_edge(h: &Hypergraph) -> Option<VertexSet> {
    h.non_edges().into_iter().find(|&f| {
        let extended = h.with_edge(f).expect("non-edge insertion is valid");
        is_k_forest(&extended)
    })
}

/// Decides saturation of a forest by the direct definition, attaching a
/// delta certificate per non-edge where one exists.
pub fn check_saturated(h: &Hypergraph) -> Result<SaturationCheck, ForestError> {
    if let ForestCheck::NotForest { failing_edge } = check_forest(h) {
        return Err(ForestError::NotAForest { edge: failing_edge });
    }
    if let Some(addable_edge) = first_addable_edge(h) {
        return Ok(SaturationCheck::NotSaturated { addable_edge });
    }
    let deltas: Vec<DeltaSet> =
        h.edges().iter().map(|&e| delta(h, e).expect("forest edge has witnesses")).collect();
    let certificates = h
        .non_edges()
        .into_iter()
        .map(|f| {
            let cover = deltas.iter().find(|d| d.forced.contains(&f));
            let kind = match cover {
                Some(d) => CertificateKind::DeltaCover { edge: d.edge },
                None => CertificateKind::DirectOnly,
            };
            NonEdgeCertificate { non_edge: f, kind }
        })
        .collect();
    Ok(SaturationCheck::Saturated { certificates })
}

pub fn is_saturated(h: &Hypergraph) -> Result<bool, ForestError> {
    if let ForestCheck::NotForest { failing_edge } = check_forest(h) {
        return Err(ForestError::NotAForest { edge: failing_edge });
    }
    Ok(first_addable_edge(h).is_none())
}

/// Forests on `n` vertices have at most `C(n-1, k-1)` edges.
pub fn lovasz_bound(h: &Hypergraph) -> u64 {
    binomial(h.n() - 1, h.k() - 1)
}

pub fn lovasz_bound_ok(h: &Hypergraph) -> bool {
    h.edge_count() as u64 <= lovasz_bound(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Coloring;
    use crate::hypergraph::k_subsets;

    fn edge(vs: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn paper_h() -> Hypergraph {
        "6 3\n1 2 3\n1 2 4\n1 2 5\n1 3 4\n2 3 6\n2 5 6\n3 4 6\n3 5 6".parse().unwrap()
    }

    fn complete(n: u32, k: u32) -> Hypergraph {
        Hypergraph::new(n, k, k_subsets(n, k).collect()).unwrap()
    }

    #[test]
    fn phi_of_first_edge_is_unique() {
        let h = paper_h();
        let phi = phi(&h, edge(&[1, 2, 3])).unwrap();
        assert_eq!(phi.classes.len(), 1);
        let expected = ColoringClass::of(&Coloring::new(vec![3, 2, 1, 3, 2, 1], 3).unwrap());
        assert_eq!(phi.classes[0], expected);
    }

    #[test]
    fn phi_class_counts_for_reference_edges() {
        let h = paper_h();
        assert_eq!(phi(&h, edge(&[1, 3, 4])).unwrap().classes.len(), 2);
        assert_eq!(phi(&h, edge(&[2, 3, 6])).unwrap().classes.len(), 1);
    }

    #[test]
    fn phi_rejects_non_edges() {
        let h = paper_h();
        assert_eq!(
            phi(&h, edge(&[1, 2, 6])).unwrap_err(),
            ForestError::EdgeNotInGraph { edge: edge(&[1, 2, 6]) }
        );
    }

    #[test]
    fn phi_classes_have_exact_rainbow_set() {
        let h = paper_h();
        for &e in h.edges() {
            for class in phi(&h, e).unwrap().classes {
                let c = class.coloring();
                assert_eq!(crate::coloring::rainbow_edges(&h, &c), vec![e]);
            }
        }
    }

    #[test]
    fn paper_instance_is_forest_with_valid_witness_table() {
        let h = paper_h();
        let check = check_forest(&h);
        assert!(check.is_forest());
        let witnesses = check.witnesses();
        assert_eq!(witnesses.len(), 8);
        for w in witnesses {
            let c = w.coloring.coloring();
            assert_eq!(crate::coloring::rainbow_edges(&h, &c), vec![w.edge]);
        }
    }

    #[test]
    fn complete_four_vertex_graph_is_not_forest() {
        let h = complete(4, 3);
        match check_forest(&h) {
            ForestCheck::NotForest { failing_edge } => assert_eq!(failing_edge, edge(&[1, 2, 3])),
            ForestCheck::Forest { .. } => panic!("should not be a forest"),
        }
    }

    #[test]
    fn single_edge_is_forest() {
        let h: Hypergraph = "3 3\n1 2 3".parse().unwrap();
        assert!(is_k_forest(&h));
        let edgeless = Hypergraph::new(4, 3, vec![]).unwrap();
        assert!(is_k_forest(&edgeless));
    }

    #[test]
    fn delta_of_first_edge_includes_all_forced_non_edges() {
        // The unique witness class (3,2,1,3,2,1) colors seven non-edges
        // polychromatically, including {2,3,4}.
        let h = paper_h();
        let d = delta(&h, edge(&[1, 2, 3])).unwrap();
        let expected: Vec<VertexSet> = [
            [2u32, 3, 4],
            [1, 3, 5],
            [3, 4, 5],
            [1, 2, 6],
            [2, 4, 6],
            [1, 5, 6],
            [4, 5, 6],
        ]
        .iter()
        .map(|vs| edge(vs))
        .collect();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(d.forced, expected);
    }

    #[test]
    fn delta_of_reference_edges() {
        let h = paper_h();
        let d134 = delta(&h, edge(&[1, 3, 4])).unwrap();
        let mut expected: Vec<VertexSet> =
            vec![edge(&[1, 4, 6]), edge(&[2, 3, 4]), edge(&[2, 4, 6])];
        expected.sort_unstable();
        assert_eq!(d134.forced, expected);

        let d236 = delta(&h, edge(&[2, 3, 6])).unwrap();
        let mut expected: Vec<VertexSet> = vec![
            edge(&[1, 3, 5]),
            edge(&[1, 3, 6]),
            edge(&[1, 4, 5]),
            edge(&[1, 4, 6]),
            edge(&[2, 3, 5]),
            edge(&[2, 4, 5]),
            edge(&[2, 4, 6]),
        ];
        expected.sort_unstable();
        assert_eq!(d236.forced, expected);
    }

    #[test]
    fn delta_errors_on_empty_phi() {
        let h = complete(4, 3);
        assert_eq!(
            delta(&h, edge(&[1, 2, 3])).unwrap_err(),
            ForestError::EmptyPhi { edge: edge(&[1, 2, 3]) }
        );
    }

    #[test]
    fn paper_instance_is_saturated_with_full_delta_coverage() {
        let h = paper_h();
        match check_saturated(&h).unwrap() {
            SaturationCheck::Saturated { certificates } => {
                assert_eq!(certificates.len(), 12);
                for cert in &certificates {
                    assert!(
                        matches!(cert.kind, CertificateKind::DeltaCover { .. }),
                        "non-edge {} lacks a delta certificate",
                        cert.non_edge
                    );
                }
            }
            SaturationCheck::NotSaturated { addable_edge } => {
                panic!("unexpected addable edge {addable_edge}")
            }
        }
    }

    #[test]
    fn single_edge_saturation_depends_on_vertex_count() {
        let tight: Hypergraph = "3 3\n1 2 3".parse().unwrap();
        assert!(is_saturated(&tight).unwrap());

        // On four vertices, {1,2,4} can still be added: (1,2,3,1) has
        // {1,2,3} as its unique rainbow edge and (1,2,1,3) has {1,2,4}.
        let loose: Hypergraph = "4 3\n1 2 3".parse().unwrap();
        assert!(!is_saturated(&loose).unwrap());
        let extended = loose.with_edge(edge(&[1, 2, 4])).unwrap();
        let c1 = Coloring::new(vec![1, 2, 3, 1], 3).unwrap();
        let c2 = Coloring::new(vec![1, 2, 1, 3], 3).unwrap();
        assert_eq!(crate::coloring::rainbow_edges(&extended, &c1), vec![edge(&[1, 2, 3])]);
        assert_eq!(crate::coloring::rainbow_edges(&extended, &c2), vec![edge(&[1, 2, 4])]);
        assert!(is_k_forest(&extended));
    }

    #[test]
    fn saturation_requires_forest() {
        let h = complete(4, 3);
        assert!(matches!(is_saturated(&h), Err(ForestError::NotAForest { .. })));
    }

    #[test]
    fn lovasz_bound_examples() {
        assert!(lovasz_bound_ok(&paper_h()));
        assert_eq!(lovasz_bound(&paper_h()), 10);

        let tree: Hypergraph = "4 2\n1 2\n2 3\n3 4".parse().unwrap();
        assert_eq!(lovasz_bound(&tree), 3);
        assert!(lovasz_bound_ok(&tree));

        let complete4 = complete(4, 3);
        assert_eq!(lovasz_bound(&complete4), 3);
        assert!(!lovasz_bound_ok(&complete4));
    }
}
