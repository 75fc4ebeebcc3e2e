//! Built-in named instances.

use crate::hypergraph::{Hypergraph, VertexSet};

/// The 6-vertex 3-graph that is a saturated forest but not tight. Available
/// to the CLI under the name `paper-h`, so the full verification chain runs
/// without any input file.
pub fn paper_h() -> Hypergraph {
    let edges = [
        [1u32, 2, 3],
        [1, 2, 4],
        [1, 2, 5],
        [1, 3, 4],
        [2, 3, 6],
        [2, 5, 6],
        [3, 4, 6],
        [3, 5, 6],
    ]
    .iter()
    .map(|vs| VertexSet::from_vertices(vs.iter().copied()))
    .collect();
    Hypergraph::new(6, 3, edges).expect("built-in instance is valid")
}

/// Resolves a CLI input: the literal name `paper-h` means the built-in
/// instance, anything else is a path.
pub const BUILTIN_NAME: &str = "paper-h";
