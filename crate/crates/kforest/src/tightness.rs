//! Heterochromatic number, tightness and the tree predicate.
//!
//! The heterochromatic number is the least `t` such that every surjective
//! `t`-coloring produces a rainbow edge; a `k`-graph is tight when that
//! number equals `k`. Merging two colors of a rainbow-free coloring keeps it
//! rainbow-free, so rainbow-free colorings exist for all `t` up to some
//! maximum and the descending search below is exact.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::ColoringClass;
use crate::forest::is_k_forest;
use crate::hypergraph::{Hypergraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TightnessError {
    #[error("color count {t} out of range 1..={n}")]
    ColorCountOutOfRange { t: u32, n: u32 },
    #[error("connectivity is defined for 2-graphs, got k={k}")]
    NotTwoUniform { k: u32 },
}

/// Heterochromatic number with its witness: a rainbow-free surjective
/// coloring on `hc - 1` colors (the most colors that avoid a rainbow edge).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcResult {
    pub hc: u32,
    pub witness: ColoringClass,
}

/// Outcome of the heterochromatic number computation. An edgeless graph has
/// no rainbow edge under any coloring, so no color count forces one and the
/// number is reported as a status rather than a value beyond `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HcOutcome {
    Value(HcResult),
    NoRainbowEdgePossible,
}

impl HcOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            HcOutcome::Value(r) => Some(r.hc),
            HcOutcome::NoRainbowEdgePossible => None,
        }
    }
}

/// First class (in enumeration order) of surjective `t`-colorings of `h`
/// without a rainbow edge, or `None` when every such coloring has one.
///
/// Backtracking over vertices in label order: a branch dies as soon as a
/// fully-colored edge is rainbow, and colors stay in restricted-growth form
/// with exactly `t` colors overall.
pub fn rainbow_free_witness(
    h: &Hypergraph,
    t: u32,
) -> Result<Option<ColoringClass>, TightnessError> {
    if t < 1 || t > h.n() {
        return Err(TightnessError::ColorCountOutOfRange { t, n: h.n() });
    }
    let n = h.n() as usize;
    let t = t as u8;
    let closing = h.edges_by_max_vertex();
    let mut colors = vec![0u8; n];

    fn go(
        v: usize,
        max_used: u8,
        n: usize,
        t: u8,
        closing: &[Vec<VertexSet>],
        colors: &mut Vec<u8>,
    ) -> bool {
        if v > n {
            return true;
        }
        let cap = (max_used + 1).min(t);
        for c in 1..=cap {
            // The suffix must still be able to reach t distinct colors.
            let new_max = max_used.max(c);
            if t - new_max > (n - v) as u8 {
                continue;
            }
            colors[v - 1] = c;
            let rainbow = closing[v].iter().any(|f| {
                let mut bits = 0u64;
                for u in f.vertices() {
                    bits |= 1 << (colors[(u - 1) as usize] - 1);
                }
                bits.count_ones() == f.len()
            });
            if !rainbow && go(v + 1, new_max, n, t, closing, colors) {
                return true;
            }
        }
        false
    }

    if go(1, 0, n, t, &closing, &mut colors) {
        Ok(Some(ColoringClass::from_rgs_unchecked(colors)))
    } else {
        Ok(None)
    }
}

/// Computes the heterochromatic number by descending from `t = n` to the
/// first color count that admits a rainbow-free coloring.
pub fn heterochromatic_number(h: &Hypergraph) -> HcOutcome {
    if h.edge_count() == 0 {
        return HcOutcome::NoRainbowEdgePossible;
    }
    for t in (1..=h.n()).rev() {
        if let Some(witness) = rainbow_free_witness(h, t).expect("t is in range") {
            return HcOutcome::Value(HcResult { hc: t + 1, witness });
        }
    }
    // Unreachable for k >= 2: any surjective (k-1)-coloring is rainbow-free.
    unreachable!("a 1-coloring of a k-graph with k >= 2 has no rainbow edge")
}

/// A `k`-graph is tight when its heterochromatic number is `k`, i.e. no
/// surjective `k`-coloring avoids a rainbow edge. Edgeless graphs are not
/// tight; `heterochromatic_number` carries the explanatory status.
pub fn is_tight(h: &Hypergraph) -> bool {
    if h.edge_count() == 0 {
        return false;
    }
    rainbow_free_witness(h, h.k()).expect("k <= n when edges exist").is_none()
}

/// A tight forest.
pub fn is_k_tree(h: &Hypergraph) -> bool {
    is_k_forest(h) && is_tight(h)
}

/// Standard graph connectivity for 2-graphs. Isolated vertices make the
/// graph disconnected when `n > 1`; the single-vertex graph is connected
/// because no partition into two non-empty sets exists.
pub fn is_connected(h: &Hypergraph) -> Result<bool, TightnessError> {
    if h.k() != 2 {
        return Err(TightnessError::NotTwoUniform { k: h.k() });
    }
    if h.n() == 1 {
        return Ok(true);
    }
    let mut reached: u64 = 1; // vertex 1
    loop {
        let mut grew = false;
        for e in h.edges() {
            let bits = e.bits();
            if bits & reached != 0 && bits & !reached != 0 {
                reached |= bits;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    Ok(reached.count_ones() == h.n())
}
