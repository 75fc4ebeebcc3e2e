//! Exhaustive enumeration of small hypergraphs, isomorphism reduction and
//! the predicate searches built on top of them.
//!
//! Edge sets are encoded as bitmasks over the list of all `C(n, k)` possible
//! edges in ascending order, so the whole space of hypergraphs on `n`
//! vertices is the integer range `0..2^C(n,k)`. The canonical form of a
//! hypergraph is the minimum such mask over all `n!` vertex permutations,
//! computed directly; at `n <= 7` that is at most 5040 permutations.

use itertools::Itertools;
use thiserror::Error;

use crate::forest::{check_forest, first_addable_edge, lovasz_bound};
use crate::hypergraph::{k_subsets, Hypergraph, VertexSet};
use crate::report::VerificationReport;
use crate::tightness::is_tight;

/// Exhaustion is practical only for small instances.
pub const MAX_SEARCH_VERTICES: u32 = 7;

/// Upper bound on the number of edge-set masks a single `run_search` call
/// will walk; larger spaces must be sharded.
pub const MAX_MASKS_PER_RUN: u64 = 1 << 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search supports 2 <= k <= n <= {MAX_SEARCH_VERTICES}, got n={n}, k={k}")]
    SizeLimits { n: u32, k: u32 },
    #[error("shard index {index} not below shard count {count}")]
    BadShard { index: u64, count: u64 },
    #[error("shard walks {masks} edge-set masks, above the {MAX_MASKS_PER_RUN} limit; use more shards")]
    ShardTooLarge { masks: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    SaturatedNotTight,
    AllSaturatedForests,
    AllForests,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::SaturatedNotTight => "saturated-not-tight",
            SearchMode::AllSaturatedForests => "all-saturated-forests",
            SearchMode::AllForests => "all-forests",
        }
    }
}

impl std::str::FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "saturated-not-tight" => Ok(SearchMode::SaturatedNotTight),
            "all-saturated-forests" => Ok(SearchMode::AllSaturatedForests),
            "all-forests" => Ok(SearchMode::AllForests),
            other => Err(format!(
                "unknown mode {other:?}, expected saturated-not-tight, \
                 all-saturated-forests or all-forests"
            )),
        }
    }
}

/// One slice of the edge-set mask space: shard `index` of `count` covers a
/// contiguous range, so for power-of-two counts the partition is by the high
/// bits of the mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTask {
    pub n: u32,
    pub k: u32,
    pub mode: SearchMode,
    pub modulo_iso: bool,
    pub shard: Option<Shard>,
}

/// A hypergraph matching the search predicate, with its canonical form and a
/// full verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub hypergraph: Hypergraph,
    pub edge_mask: u64,
    pub canonical_mask: u64,
    pub report: VerificationReport,
}

/// The edge-set mask encoding for hypergraphs on fixed `(n, k)`, plus the
/// relabeling action of every vertex permutation on mask positions.
pub struct EdgeSpace {
    n: u32,
    k: u32,
    subsets: Vec<VertexSet>,
    // Position tables for the non-identity permutations: entry i is where
    // possible edge i lands under the permutation.
    perm_tables: Vec<Vec<u16>>,
}

impl EdgeSpace {
    pub fn new(n: u32, k: u32) -> Result<EdgeSpace, SearchError> {
        if k < 2 || k > n || n > MAX_SEARCH_VERTICES {
            return Err(SearchError::SizeLimits { n, k });
        }
        let subsets: Vec<VertexSet> = k_subsets(n, k).collect();
        let rank = |s: VertexSet| subsets.binary_search(&s).expect("subset of [n]") as u16;
        let perm_tables = (1..=n)
            .permutations(n as usize)
            .filter(|sigma| !sigma.iter().enumerate().all(|(i, &v)| v == i as u32 + 1))
            .map(|sigma| subsets.iter().map(|&s| rank(s.relabel(&sigma))).collect())
            .collect();
        Ok(EdgeSpace { n, k, subsets, perm_tables })
    }

    /// Number of possible edges, i.e. bits in a mask.
    pub fn positions(&self) -> usize {
        self.subsets.len()
    }

    pub fn total_masks(&self) -> u64 {
        1u64 << self.positions()
    }

    pub fn encode(&self, h: &Hypergraph) -> u64 {
        assert_eq!((h.n(), h.k()), (self.n, self.k));
        let mut mask = 0u64;
        for &e in h.edges() {
            let pos = self.subsets.binary_search(&e).expect("edge is a k-subset");
            mask |= 1 << pos;
        }
        mask
    }

    pub fn decode(&self, mask: u64) -> Hypergraph {
        let edges = self
            .subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &s)| s)
            .collect();
        Hypergraph::new(self.n, self.k, edges).expect("decoded edges are valid")
    }

    fn remap(mask: u64, table: &[u16]) -> u64 {
        let mut out = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1 << table[i];
        }
        out
    }

    /// Minimum mask over all vertex permutations.
    pub fn canonical(&self, mask: u64) -> u64 {
        let mut best = mask;
        for table in &self.perm_tables {
            best = best.min(Self::remap(mask, table));
        }
        best
    }

    /// Whether `mask` is the representative of its isomorphism class.
    /// Aborts early on the first permutation producing a smaller mask.
    pub fn is_canonical(&self, mask: u64) -> bool {
        self.perm_tables.iter().all(|table| Self::remap(mask, table) >= mask)
    }
}

/// Canonical edge-set mask of `h`; hypergraphs are isomorphic exactly when
/// their canonical masks agree.
pub fn canonical_edge_mask(h: &Hypergraph) -> Result<u64, SearchError> {
    let space = EdgeSpace::new(h.n(), h.k())?;
    Ok(space.canonical(space.encode(h)))
}

/// Whether some vertex permutation maps one edge set onto the other.
///
/// Mismatched sizes are simply non-isomorphic. The scan is over all vertex
/// permutations with a degree-sequence pre-filter, which is fine at search
/// scale (`n <= 7`) and merely slow beyond it.
pub fn are_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> bool {
    if h1.n() != h2.n() || h1.k() != h2.k() || h1.edge_count() != h2.edge_count() {
        return false;
    }
    let degrees = |h: &Hypergraph| {
        let mut d = vec![0u32; h.n() as usize];
        for e in h.edges() {
            for v in e.vertices() {
                d[(v - 1) as usize] += 1;
            }
        }
        d.sort_unstable();
        d
    };
    if degrees(h1) != degrees(h2) {
        return false;
    }
    let target = h2.edges();
    (1..=h1.n())
        .permutations(h1.n() as usize)
        .any(|sigma| h1.relabel(&sigma).edges() == target)
}

/// Streams all hypergraphs on `n` vertices with `k`-uniform edges in
/// ascending edge-set mask order; with `modulo_iso` only the canonical
/// representative of each isomorphism class is yielded.
pub fn enumerate_hypergraphs(
    n: u32,
    k: u32,
    modulo_iso: bool,
) -> Result<impl Iterator<Item = Hypergraph>, SearchError> {
    let space = EdgeSpace::new(n, k)?;
    let total = space.total_masks();
    Ok((0..total).filter_map(move |mask| {
        if modulo_iso && !space.is_canonical(mask) {
            return None;
        }
        Some(space.decode(mask))
    }))
}

fn shard_range(total: u64, shard: Option<Shard>) -> Result<(u64, u64), SearchError> {
    match shard {
        None => Ok((0, total)),
        Some(Shard { index, count }) => {
            if count == 0 || index >= count {
                return Err(SearchError::BadShard { index, count });
            }
            let lo = (total as u128 * index as u128 / count as u128) as u64;
            let hi = (total as u128 * (index as u128 + 1) / count as u128) as u64;
            Ok((lo, hi))
        }
    }
}

/// Runs the task over its shard of the mask space, sequentially and
/// deterministically. Hits come back sorted by canonical form (ties by raw
/// mask), each with a freshly computed report.
pub fn run_search(task: &SearchTask) -> Result<Vec<SearchHit>, SearchError> {
    let space = EdgeSpace::new(task.n, task.k)?;
    let (lo, hi) = shard_range(space.total_masks(), task.shard)?;
    if hi - lo > MAX_MASKS_PER_RUN {
        return Err(SearchError::ShardTooLarge { masks: hi - lo });
    }
    let bound = {
        let probe = space.decode(0);
        lovasz_bound(&probe)
    };
    let mut hits = Vec::new();
    for mask in lo..hi {
        // Cheapest rejectors first: the edge bound is pure arithmetic and
        // isomorphism reduction avoids re-verifying equivalent graphs.
        let edge_count = mask.count_ones() as u64;
        if edge_count == 0 || edge_count > bound {
            continue;
        }
        if task.modulo_iso && !space.is_canonical(mask) {
            continue;
        }
        let h = space.decode(mask);
        if !check_forest(&h).is_forest() {
            continue;
        }
        let matched = match task.mode {
            SearchMode::AllForests => true,
            SearchMode::AllSaturatedForests => first_addable_edge(&h).is_none(),
            // Non-tightness needs one witness coloring; saturation re-runs
            // the forest check per non-edge, so it goes last.
            SearchMode::SaturatedNotTight => !is_tight(&h) && first_addable_edge(&h).is_none(),
        };
        if !matched {
            continue;
        }
        let report = VerificationReport::compute(&h);
        hits.push(SearchHit {
            canonical_mask: space.canonical(mask),
            edge_mask: mask,
            hypergraph: h,
            report,
        });
    }
    hits.sort_by_key(|hit| (hit.canonical_mask, hit.edge_mask));
    Ok(hits)
}

/// Merges per-shard results into the order an unsharded run would produce.
pub fn merge_shard_results(shards: Vec<Vec<SearchHit>>) -> Vec<SearchHit> {
    let mut all: Vec<SearchHit> = shards.into_iter().flatten().collect();
    all.sort_by_key(|hit| (hit.canonical_mask, hit.edge_mask));
    all
}
