//! Brute-force oracles, deliberately independent of the implementation
//! paths they check: plain enumeration of all assignments or permutations,
//! no pruning, no shared helpers beyond the value types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use kforest::coloring::Coloring;
use kforest::hypergraph::{k_subsets, Hypergraph, VertexSet};

/// All surjective assignments of colors `1..=t` to `n` vertices, by walking
/// the full `t^n` space.
pub fn all_surjective_colorings(n: u32, t: u32) -> Vec<Coloring> {
    let mut out = Vec::new();
    let mut colors = vec![1u8; n as usize];
    loop {
        let mut used = 0u64;
        for &c in &colors {
            used |= 1 << (c - 1);
        }
        if used == (1u64 << t) - 1 {
            out.push(Coloring::new(colors.clone(), t).unwrap());
        }
        // Odometer increment over colors 1..=t.
        let mut pos = 0;
        loop {
            if pos == n as usize {
                return out;
            }
            if colors[pos] < t as u8 {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
            pos += 1;
        }
    }
}

/// Canonical representative of a coloring's class: rename colors by first
/// occurrence.
pub fn canonical_colors(colors: &[u8]) -> Vec<u8> {
    let mut rename = [0u8; 64];
    let mut next = 1u8;
    colors
        .iter()
        .map(|&c| {
            if rename[c as usize] == 0 {
                rename[c as usize] = next;
                next += 1;
            }
            rename[c as usize]
        })
        .collect()
}

/// Classes of surjective `t`-colorings by brute-force quotient; ascending
/// (lexicographic) order.
pub fn coloring_classes_brute(n: u32, t: u32) -> BTreeSet<Vec<u8>> {
    all_surjective_colorings(n, t)
        .iter()
        .map(|c| canonical_colors(c.colors()))
        .collect()
}

fn rainbow_set(h: &Hypergraph, c: &Coloring) -> Vec<VertexSet> {
    h.edges()
        .iter()
        .copied()
        .filter(|e| {
            let mut bits = 0u64;
            for v in e.vertices() {
                bits |= 1 << (c.color_of(v) - 1);
            }
            bits.count_ones() == e.len()
        })
        .collect()
}

/// Classes of surjective `k`-colorings whose rainbow set is exactly `{e}`.
pub fn phi_brute(h: &Hypergraph, e: VertexSet) -> BTreeSet<Vec<u8>> {
    all_surjective_colorings(h.n(), h.k())
        .iter()
        .filter(|c| rainbow_set(h, c) == vec![e])
        .map(|c| canonical_colors(c.colors()))
        .collect()
}

/// Classes of rainbow-free surjective `t`-colorings.
pub fn rainbow_free_brute(h: &Hypergraph, t: u32) -> BTreeSet<Vec<u8>> {
    all_surjective_colorings(h.n(), t)
        .iter()
        .filter(|c| rainbow_set(h, c).is_empty())
        .map(|c| canonical_colors(c.colors()))
        .collect()
}

/// Heterochromatic number by brute force; `None` for edgeless graphs.
pub fn hc_brute(h: &Hypergraph) -> Option<u32> {
    if h.edge_count() == 0 {
        return None;
    }
    (1..=h.n())
        .rev()
        .find(|&t| !rainbow_free_brute(h, t).is_empty())
        .map(|t| t + 1)
}

/// Forest test by brute force: every edge needs some surjective k-coloring
/// with rainbow set exactly that edge.
pub fn is_forest_brute(h: &Hypergraph) -> bool {
    h.edges().iter().all(|&e| !phi_brute(h, e).is_empty())
}

/// Saturation by the direct definition on top of the brute-force forest
/// test.
pub fn is_saturated_brute(h: &Hypergraph) -> bool {
    h.non_edges().into_iter().all(|f| !is_forest_brute(&h.with_edge(f).unwrap()))
}

/// All permutations of `1..=n`, generated by plain recursion.
pub fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: &mut Vec<u32>, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            prefix.push(v);
            go(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Canonical form of a hypergraph as the minimal sorted edge list over all
/// vertex relabelings; independent of the bitmask encoding used by the
/// search module.
pub fn canonical_edges_brute(h: &Hypergraph) -> Vec<VertexSet> {
    permutations(h.n())
        .iter()
        .map(|sigma| h.relabel(sigma).edges().to_vec())
        .min()
        .unwrap()
}

/// Every hypergraph on `n` vertices with `k`-uniform edges, by walking all
/// edge subsets.
pub fn all_hypergraphs_brute(n: u32, k: u32) -> Vec<Hypergraph> {
    let subsets: Vec<VertexSet> = k_subsets(n, k).collect();
    let total = 1u64 << subsets.len();
    (0..total)
        .map(|mask| {
            let edges = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            Hypergraph::new(n, k, edges).unwrap()
        })
        .collect()
}

/// Truth-table satisfiability for formulas small enough to enumerate.
pub fn sat_brute(num_vars: u32, clauses: &[Vec<i32>]) -> bool {
    assert!(num_vars <= 24, "truth table oracle limited to small formulas");
    (0u64..(1 << num_vars)).any(|assignment| {
        clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let bit = assignment >> (lit.unsigned_abs() - 1) & 1 == 1;
                if lit > 0 {
                    bit
                } else {
                    !bit
                }
            })
        })
    })
}

pub fn paper_h() -> Hypergraph {
    kforest::builtin::paper_h()
}

pub fn edge(vs: &[u32]) -> VertexSet {
    VertexSet::from_vertices(vs.iter().copied())
}
