//! One structured record of every check on a single hypergraph.

use serde::Serialize;

use crate::coloring::ColoringClass;
use crate::forest::{
    check_forest, delta, phi, CertificateKind, EdgeWitness, ForestCheck, NonEdgeCertificate,
    lovasz_bound,
};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::tightness::{heterochromatic_number, is_tight, HcOutcome};

/// Full verification record for one hypergraph. Every field is re-derivable
/// by running the underlying checks on `input` again; vertex labels are
/// 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// Canonical text serialization of the instance.
    pub input: String,
    pub n: u32,
    pub k: u32,
    pub edge_count: usize,
    pub k_forest: bool,
    /// First edge without a witness coloring, when not a forest.
    pub failing_edge: Option<VertexSet>,
    /// One witness row per edge, in edge order; empty when not a forest.
    pub witness_table: Vec<EdgeWitness>,
    /// Per edge, the number of coloring classes having it as unique rainbow
    /// edge.
    pub phi_class_counts: Vec<PhiCount>,
    /// Per edge, the non-edges rainbow under all its witness classes; absent
    /// for edges with no witness.
    pub delta_sets: Vec<DeltaReport>,
    /// Saturation verdict; absent when the graph is not a forest.
    pub saturated: Option<bool>,
    /// A non-edge whose addition keeps the forest property, when one exists.
    pub addable_edge: Option<VertexSet>,
    /// Per non-edge certificates, present when saturated.
    pub saturation_certificates: Vec<NonEdgeCertificate>,
    pub hc: HcOutcome,
    pub tight: bool,
    pub k_tree: bool,
    pub lovasz: LovaszReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiCount {
    pub edge: VertexSet,
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub edge: VertexSet,
    pub forced: Option<Vec<VertexSet>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LovaszReport {
    pub edges: u64,
    pub bound: u64,
    pub ok: bool,
}

impl VerificationReport {
    pub fn compute(h: &Hypergraph) -> VerificationReport {
        let forest_check = check_forest(h);
        let k_forest = forest_check.is_forest();
        let (witness_table, failing_edge) = match forest_check {
            ForestCheck::Forest { witnesses } => (witnesses, None),
            ForestCheck::NotForest { failing_edge } => (Vec::new(), Some(failing_edge)),
        };

        let phi_sets: Vec<_> =
            h.edges().iter().map(|&e| phi(h, e).expect("e is an edge")).collect();
        let phi_class_counts = phi_sets
            .iter()
            .map(|p| PhiCount { edge: p.edge, classes: p.classes.len() })
            .collect();
        let delta_sets: Vec<DeltaReport> = phi_sets
            .iter()
            .map(|p| DeltaReport {
                edge: p.edge,
                forced: if p.classes.is_empty() {
                    None
                } else {
                    Some(delta(h, p.edge).expect("phi non-empty").forced)
                },
            })
            .collect();

        let (saturated, addable_edge, saturation_certificates) = if k_forest {
            match crate::forest::first_addable_edge(h) {
                Some(f) => (Some(false), Some(f), Vec::new()),
                None => {
                    let certificates = h
                        .non_edges()
                        .into_iter()
                        .map(|f| {
                            let cover = delta_sets.iter().find(|d| {
                                d.forced.as_ref().is_some_and(|forced| forced.contains(&f))
                            });
                            let kind = match cover {
                                Some(d) => CertificateKind::DeltaCover { edge: d.edge },
                                None => CertificateKind::DirectOnly,
                            };
                            NonEdgeCertificate { non_edge: f, kind }
                        })
                        .collect();
                    (Some(true), None, certificates)
                }
            }
        } else {
            (None, None, Vec::new())
        };

        let hc = heterochromatic_number(h);
        let tight = is_tight(h);
        let bound = lovasz_bound(h);

        VerificationReport {
            input: h.to_text(),
            n: h.n(),
            k: h.k(),
            edge_count: h.edge_count(),
            k_forest,
            failing_edge,
            witness_table,
            phi_class_counts,
            delta_sets,
            saturated,
            addable_edge,
            saturation_certificates,
            hc,
            tight,
            k_tree: k_forest && tight,
            lovasz: LovaszReport { edges: h.edge_count() as u64, bound, ok: h.edge_count() as u64 <= bound },
        }
    }

    /// The heterochromatic witness, when the number is defined.
    pub fn hc_witness(&self) -> Option<&ColoringClass> {
        match &self.hc {
            HcOutcome::Value(r) => Some(&r.witness),
            HcOutcome::NoRainbowEdgePossible => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_h() -> Hypergraph {
        "6 3\n1 2 3\n1 2 4\n1 2 5\n1 3 4\n2 3 6\n2 5 6\n3 4 6\n3 5 6".parse().unwrap()
    }

    #[test]
    fn report_on_paper_instance() {
        let report = VerificationReport::compute(&paper_h());
        assert!(report.k_forest);
        assert_eq!(report.saturated, Some(true));
        assert!(!report.tight);
        assert!(!report.k_tree);
        assert_eq!(report.hc.value(), Some(4));
        assert_eq!(report.lovasz, LovaszReport { edges: 8, bound: 10, ok: true });
        assert_eq!(report.witness_table.len(), 8);
        assert_eq!(report.saturation_certificates.len(), 12);
    }

    #[test]
    fn report_on_non_forest() {
        let h = Hypergraph::new(4, 3, crate::hypergraph::k_subsets(4, 3).collect()).unwrap();
        let report = VerificationReport::compute(&h);
        assert!(!report.k_forest);
        assert!(report.failing_edge.is_some());
        assert_eq!(report.saturated, None);
        assert!(report.delta_sets.iter().all(|d| d.forced.is_none()));
        assert!(!report.lovasz.ok);
    }

    #[test]
    fn report_fields_are_rederivable() {
        let report = VerificationReport::compute(&paper_h());
        let reparsed: Hypergraph = report.input.parse().unwrap();
        let again = VerificationReport::compute(&reparsed);
        assert_eq!(report, again);
    }
}
