//! Decision procedures and exhaustive search for forests, saturation and
//! tightness in small uniform hypergraphs.
//!
//! A `k`-graph is a forest when every edge admits a surjective `k`-coloring
//! under which it is the only rainbow edge, saturated when no edge can be
//! added without losing that property, and tight when every surjective
//! `k`-coloring produces some rainbow edge. For graphs (`k = 2`) these are
//! acyclicity, inclusion-maximality and connectivity, where all three meet
//! in the notion of a tree; in higher uniformity they come apart, and this
//! crate provides the machinery to check the properties, produce witnesses
//! and search small vertex counts exhaustively:
//!
//! - [`hypergraph`], [`coloring`]: bitmask-backed value types, the text file
//!   format, rainbow detection and enumeration of colorings up to color
//!   relabeling.
//! - [`forest`]: the forest decision procedure with per-edge witness
//!   colorings, the `phi`/`delta` witness structures and the saturation
//!   check.
//! - [`tightness`]: heterochromatic number, tightness, the tree predicate
//!   and the graph connectivity cross-check.
//! - [`search`]: isomorph-reduced exhaustive enumeration and predicate
//!   searches with deterministic, shardable output.
//! - [`cnf`]: CNF encodings of the two coloring-existence queries, DIMACS
//!   I/O and a minimal DPLL solver.
//! - [`report`]: the structured record of all checks on one instance.

pub mod builtin;
pub mod cnf;
pub mod coloring;
pub mod forest;
pub mod hypergraph;
pub mod report;
pub mod search;
pub mod tightness;

pub use coloring::{enumerate_colorings, rainbow_edges, Coloring, ColoringClass};
pub use forest::{
    check_forest, check_saturated, delta, is_k_forest, is_saturated, lovasz_bound_ok, phi,
    DeltaSet, ForestCheck, PhiSet, SaturationCheck,
};
pub use hypergraph::{Hypergraph, VertexSet};
pub use report::VerificationReport;
pub use search::{
    are_isomorphic, enumerate_hypergraphs, run_search, SearchHit, SearchMode, SearchTask,
};
pub use tightness::{heterochromatic_number, is_connected, is_k_tree, is_tight, HcOutcome};
