//! Uniform hypergraphs on small vertex counts, backed by single-word bitmasks.
//!
//! Vertices carry 1-based labels `1..=n` and a set of vertices is stored with
//! bit `v - 1` set for vertex `v`. Edges are kept in ascending bitmask order,
//! which is the canonical iteration order everywhere in this crate.

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};
use thiserror::Error;

/// Largest supported vertex count; keeps every vertex set in one `u64`.
pub const MAX_VERTICES: u32 = 62;

/// A set of 1-based vertex labels stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from vertex labels. Labels repeat harmlessly (set semantics).
    ///
    /// Panics if a label is outside `1..=MAX_VERTICES`; range checks against a
    /// concrete hypergraph happen in [`Hypergraph::new`].
    pub fn from_vertices<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn from_bits(bits: u64) -> Self {
        assert!(bits & !mask_up_to(MAX_VERTICES) == 0, "bit above MAX_VERTICES");
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: u32) {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex label {v} out of range");
        self.0 |= 1 << (v - 1);
    }

    pub fn contains(self, v: u32) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.0 & (1 << (v - 1)) != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertex labels in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    /// Applies a vertex relabeling; `sigma[v - 1]` is the new label of `v`.
    pub fn relabel(self, sigma: &[u32]) -> VertexSet {
        VertexSet::from_vertices(self.vertices().map(|v| sigma[(v - 1) as usize]))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// Debug matches Display; sets read better as {1,2,3} in test output.
impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for v in self.vertices() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

fn mask_up_to(n: u32) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// `C(n, k)` without overflow for the sizes this crate supports.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// All `k`-element subsets of `{1..n}` in ascending bitmask order.
pub fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = VertexSet> {
    assert!(n <= MAX_VERTICES);
    let limit = mask_up_to(n);
    let mut current = if k == 0 || k > n { None } else { Some(mask_up_to(k)) };
    std::iter::from_fn(move || {
        let cur = current?;
        // Gosper's hack for the next mask with the same popcount.
        let low = cur & cur.wrapping_neg();
        let ripple = cur + low;
        let next = (((ripple ^ cur) >> 2) / low) | ripple;
        current = if next <= limit { Some(next) } else { None };
        Some(VertexSet(cur))
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex count {n} out of range 1..={MAX_VERTICES}")]
    VertexCountOutOfRange { n: u64 },
    #[error("uniformity {k} out of range 2..={MAX_VERTICES}")]
    UniformityOutOfRange { k: u64 },
    #[error("edge {edge} contains a vertex outside 1..={n}")]
    VertexOutOfRange { edge: VertexSet, n: u32 },
    #[error("edge {edge} has {got} vertices, expected {k}")]
    WrongEdgeSize { edge: VertexSet, got: u32, k: u32 },
    #[error("duplicate edge {edge}")]
    DuplicateEdge { edge: VertexSet },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line \"n k\"")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}, expected \"n k\"")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed vertex index {token:?}")]
    MalformedVertex { line: usize, token: String },
    #[error("line {line}: vertex {v} out of range 1..={n}")]
    VertexOutOfRange { line: usize, v: u64, n: u32 },
    #[error("line {line}: repeated vertex {v} in edge")]
    RepeatedVertex { line: usize, v: u32 },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: HypergraphError,
    },
}

/// A `k`-uniform hypergraph on vertices `1..=n`.
///
/// Edges are deduplicated `k`-subsets held in ascending bitmask order. When
/// `k > n` no edge can exist, so such instances are necessarily edgeless;
/// they arise as degenerate cases of the connectivity cross-check.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: u32,
    k: u32,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: u32, k: u32, mut edges: Vec<VertexSet>) -> Result<Self, HypergraphError> {
        if n < 1 || n > MAX_VERTICES {
            return Err(HypergraphError::VertexCountOutOfRange { n: n as u64 });
        }
        if k < 2 || k > MAX_VERTICES {
            return Err(HypergraphError::UniformityOutOfRange { k: k as u64 });
        }
        let allowed = mask_up_to(n);
        for &e in &edges {
            if e.bits() & !allowed != 0 {
                return Err(HypergraphError::VertexOutOfRange { edge: e, n });
            }
            if e.len() != k {
                return Err(HypergraphError::WrongEdgeSize { edge: e, got: e.len(), k });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge { edge: w[0] });
        }
        Ok(Hypergraph { n, k, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Edges in ascending bitmask order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// All `k`-subsets of the vertex set that are not edges, in ascending
    /// bitmask order.
    pub fn non_edges(&self) -> Vec<VertexSet> {
        k_subsets(self.n, self.k).filter(|s| !self.has_edge(*s)).collect()
    }

    /// A copy with `e` added. Errors if `e` is malformed or already present.
    pub fn with_edge(&self, e: VertexSet) -> Result<Hypergraph, HypergraphError> {
        let mut edges = self.edges.clone();
        edges.push(e);
        Hypergraph::new(self.n, self.k, edges)
    }

    /// A copy with `e` removed; a no-op if `e` is not an edge.
    pub fn without_edge(&self, e: VertexSet) -> Hypergraph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Hypergraph { n: self.n, k: self.k, edges }
    }

    /// Applies a vertex permutation; `sigma[v - 1]` is the new label of `v`.
    pub fn relabel(&self, sigma: &[u32]) -> Hypergraph {
        debug_assert_eq!(sigma.len(), self.n as usize);
        debug_assert_eq!(
            VertexSet::from_vertices(sigma.iter().copied()).len(),
            self.n,
            "sigma is not a permutation of 1..=n"
        );
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.relabel(sigma)).collect();
        edges.sort_unstable();
        Hypergraph { n: self.n, k: self.k, edges }
    }

    /// Edges grouped by their largest vertex; index `v` holds the edges whose
    /// maximum vertex is `v`. Drives the incremental checks in the coloring
    /// backtrackers.
    pub fn edges_by_max_vertex(&self) -> Vec<Vec<VertexSet>> {
        let mut by_max = vec![Vec::new(); self.n as usize + 1];
        for &e in &self.edges {
            let max = 64 - e.bits().leading_zeros();
            by_max[max as usize].push(e);
        }
        by_max
    }

    /// Canonical text form: header `n k`, then one line per edge with
    /// ascending vertex labels, edges in ascending bitmask order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        for e in &self.edges {
            let labels: Vec<String> = e.vertices().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, k={}, edges=[", self.n, self.k)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Hypergraph", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

impl FromStr for Hypergraph {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(u32, u32)> = None;
        let mut edges = Vec::new();
        let mut seen_lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match header {
                None => {
                    let fields: Vec<&str> = line.split_whitespace().collect();
                    let parsed = if fields.len() == 2 {
                        fields[0].parse::<u32>().ok().zip(fields[1].parse::<u32>().ok())
                    } else {
                        None
                    };
                    match parsed {
                        Some((n, k)) => header = Some((n, k)),
                        None => {
                            return Err(ParseError::MalformedHeader {
                                line: line_no,
                                text: line.to_string(),
                            })
                        }
                    }
                }
                Some((n, _)) => {
                    let mut edge = VertexSet::EMPTY;
                    for token in line.split_whitespace() {
                        let v: u64 = token.parse().map_err(|_| ParseError::MalformedVertex {
                            line: line_no,
                            token: token.to_string(),
                        })?;
                        if v < 1 || v > n as u64 {
                            return Err(ParseError::VertexOutOfRange { line: line_no, v, n });
                        }
                        let v = v as u32;
                        if edge.contains(v) {
                            return Err(ParseError::RepeatedVertex { line: line_no, v });
                        }
                        edge.insert(v);
                    }
                    edges.push(edge);
                    seen_lines.push(line_no);
                }
            }
        }
        let (n, k) = header.ok_or(ParseError::MissingHeader)?;
        match Hypergraph::new(n, k, edges.clone()) {
            Ok(h) => Ok(h),
            Err(err) => {
                // Attribute the error to the offending edge line where possible.
                let line = match &err {
                    HypergraphError::WrongEdgeSize { edge, .. }
                    | HypergraphError::VertexOutOfRange { edge, .. } => edges
                        .iter()
                        .position(|e| e == edge)
                        .map(|i| seen_lines[i]),
                    HypergraphError::DuplicateEdge { edge } => edges
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| *e == edge)
                        .nth(1)
                        .map(|(i, _)| seen_lines[i]),
                    _ => None,
                };
                Err(ParseError::Invalid { line: line.unwrap_or(1), source: err })
            }
        }
    }
}

/// Parses a whitespace-separated vertex list such as `"1 2 3"`.
///
/// Rejects repeats; range checks against a hypergraph happen at the call
/// site. Used for CLI edge arguments.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet, String> {
    let mut set = VertexSet::EMPTY;
    let mut count = 0u32;
    for token in text.split_whitespace() {
        let v: u32 = token
            .parse()
            .ok()
            .filter(|v| (1..=MAX_VERTICES).contains(v))
            .ok_or_else(|| format!("bad vertex index {token:?}"))?;
        if set.contains(v) {
            return Err(format!("repeated vertex {v}"));
        }
        set.insert(v);
        count += 1;
    }
    if count == 0 {
        return Err("empty vertex list".to_string());
    }
    Ok(set)
}
