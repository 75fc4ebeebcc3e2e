//! Surjective vertex colorings, rainbow detection and enumeration of
//! colorings up to color relabeling.
//!
//! A coloring class is represented by its restricted-growth form: vertex 1
//! has color 1 and every later vertex uses a color at most one above the
//! maximum seen so far. Each class of surjective colorings has exactly one
//! such representative, so enumerating restricted-growth strings enumerates
//! classes without an explicit quotient step.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has no vertices")]
    Empty,
    #[error("number of colors {t} out of range 1..={n}")]
    ColorCountOutOfRange { t: u32, n: u32 },
    #[error("vertex {v} has color {color}, outside 1..={t}")]
    ColorOutOfRange { v: u32, color: u8, t: u32 },
    #[error("not surjective: color {color} is unused")]
    NotSurjective { color: u8 },
    #[error("not in restricted-growth form at vertex {v}")]
    NotRestrictedGrowth { v: u32 },
}

/// A surjective assignment of colors `1..=t` to vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u8>,
    num_colors: u8,
}

impl Coloring {
    /// Validates color range and surjectivity onto `1..=t`.
    pub fn new(colors: Vec<u8>, t: u32) -> Result<Self, ColoringError> {
        let n = colors.len() as u32;
        if n == 0 {
            return Err(ColoringError::Empty);
        }
        if t < 1 || t > n {
            return Err(ColoringError::ColorCountOutOfRange { t, n });
        }
        let mut used = 0u64;
        for (i, &c) in colors.iter().enumerate() {
            if c < 1 || c as u32 > t {
                return Err(ColoringError::ColorOutOfRange { v: i as u32 + 1, color: c, t });
            }
            used |= 1 << (c - 1);
        }
        for c in 1..=t as u8 {
            if used & (1 << (c - 1)) == 0 {
                return Err(ColoringError::NotSurjective { color: c });
            }
        }
        Ok(Coloring { colors, num_colors: t as u8 })
    }

    /// Infers the color count from the maximum entry.
    pub fn from_colors(colors: Vec<u8>) -> Result<Self, ColoringError> {
        let t = colors.iter().copied().max().unwrap_or(0) as u32;
        Coloring::new(colors, t)
    }

    pub fn color_of(&self, v: u32) -> u8 {
        self.colors[(v - 1) as usize]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// The number of colors `t`.
    pub fn num_colors(&self) -> u32 {
        self.num_colors as u32
    }

    /// Number of vertices colored.
    pub fn len(&self) -> u32 {
        self.colors.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Bitset of the colors appearing on `vs` (bit `c - 1` for color `c`).
    pub fn color_set(&self, vs: VertexSet) -> u64 {
        let mut bits = 0u64;
        for v in vs.vertices() {
            bits |= 1 << (self.color_of(v) - 1);
        }
        bits
    }

    /// An edge is rainbow when its vertices carry pairwise distinct colors.
    pub fn is_rainbow(&self, e: VertexSet) -> bool {
        self.color_set(e).count_ones() == e.len()
    }

    /// Applies a color bijection; `pi[c - 1]` is the new name of color `c`.
    pub fn relabel_colors(&self, pi: &[u8]) -> Coloring {
        debug_assert_eq!(pi.len(), self.num_colors as usize);
        let colors = self.colors.iter().map(|&c| pi[(c - 1) as usize]).collect();
        Coloring::new(colors, self.num_colors as u32).expect("bijection preserves surjectivity")
    }

    /// Replaces every occurrence of color `from` by `to`, renumbering so the
    /// result is a valid surjective coloring on one fewer color.
    pub fn merge_colors(&self, from: u8, to: u8) -> Coloring {
        assert!(from != to);
        assert!(from >= 1 && from as u32 <= self.num_colors());
        assert!(to >= 1 && to as u32 <= self.num_colors());
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let c = if c == from { to } else { c };
                if c > from {
                    c - 1
                } else {
                    c
                }
            })
            .collect();
        Coloring::new(colors, self.num_colors() - 1).expect("merge preserves surjectivity")
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.colors.len()))?;
        for c in &self.colors {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// A coloring class (colorings modulo bijective color renaming), represented
/// by its restricted-growth member.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoringClass {
    colors: Vec<u8>,
}

impl ColoringClass {
    /// The canonical representative of `c`'s class: colors renamed in order
    /// of first occurrence.
    pub fn of(c: &Coloring) -> ColoringClass {
        ColoringClass { colors: canonical_rgs(c.colors()) }
    }

    /// Accepts an already-canonical string; errors if it is not
    /// restricted-growth.
    pub fn from_rgs(colors: Vec<u8>) -> Result<ColoringClass, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::Empty);
        }
        let mut max = 0u8;
        for (i, &c) in colors.iter().enumerate() {
            if c < 1 || c > max + 1 {
                return Err(ColoringError::NotRestrictedGrowth { v: i as u32 + 1 });
            }
            max = max.max(c);
        }
        Ok(ColoringClass { colors })
    }

    pub(crate) fn from_rgs_unchecked(colors: Vec<u8>) -> ColoringClass {
        debug_assert!(ColoringClass::from_rgs(colors.clone()).is_ok());
        ColoringClass { colors }
    }

    /// The representative as a full coloring.
    pub fn coloring(&self) -> Coloring {
        Coloring::from_colors(self.colors.clone()).expect("restricted growth is surjective")
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn num_colors(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0) as u32
    }

    /// Rainbow status is invariant under color renaming, so the
    /// representative decides for the whole class.
    pub fn is_rainbow(&self, e: VertexSet) -> bool {
        self.coloring().is_rainbow(e)
    }

    /// Every member of the class: all `t!` color relabelings of the
    /// representative.
    pub fn expansions(&self) -> Vec<Coloring> {
        use itertools::Itertools;
        let t = self.num_colors() as u8;
        let repr = self.coloring();
        (1..=t).permutations(t as usize).map(|pi| repr.relabel_colors(&pi)).collect()
    }
}

impl fmt::Debug for ColoringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.coloring(), f)
    }
}

impl Serialize for ColoringClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.colors.len()))?;
        for c in &self.colors {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

fn canonical_rgs(colors: &[u8]) -> Vec<u8> {
    let mut rename = [0u8; 64];
    let mut next = 1u8;
    let mut out = Vec::with_capacity(colors.len());
    for &c in colors {
        let slot = &mut rename[c as usize];
        if *slot == 0 {
            *slot = next;
            next += 1;
        }
        out.push(*slot);
    }
    out
}

/// The edges of `h` that are rainbow under `c`, in edge order.
///
/// `c` must color all of `h`'s vertices.
pub fn rainbow_edges(h: &Hypergraph, c: &Coloring) -> Vec<VertexSet> {
    assert_eq!(c.len(), h.n(), "coloring length must match vertex count");
    h.edges().iter().copied().filter(|&e| c.is_rainbow(e)).collect()
}

/// Enumerates every class of surjective `t`-colorings of `n` vertices exactly
/// once, in lexicographic order of the restricted-growth representatives.
///
/// Out-of-range `t` (below 1 or above `n`) yields an empty stream; callers
/// that want to surface a warning check the range themselves.
pub fn enumerate_colorings(n: u32, t: u32) -> ColoringClasses {
    ColoringClasses::new(n, t)
}

/// Iterator over restricted-growth strings of length `n` with maximum `t`.
pub struct ColoringClasses {
    n: usize,
    t: u8,
    current: Vec<u8>,
    maxes: Vec<u8>,
    started: bool,
    exhausted: bool,
}

impl ColoringClasses {
    fn new(n: u32, t: u32) -> Self {
        let exhausted = t < 1 || t > n;
        ColoringClasses {
            n: n as usize,
            t: t.min(255) as u8,
            current: vec![0; n as usize],
            maxes: vec![0; n as usize],
            started: false,
            exhausted,
        }
    }

    /// Smallest color admissible at `pos`: 1 if the suffix can still reach
    /// `t` distinct colors, otherwise the forced ramp value `max + 1`.
    fn fill_minimal(&mut self, from: usize) {
        for pos in from..self.n {
            let max = if pos == 0 { 0 } else { self.maxes[pos - 1] };
            let remaining = (self.n - pos - 1) as u8;
            let c = if self.t - max <= remaining { 1 } else { max + 1 };
            self.current[pos] = c;
            self.maxes[pos] = max.max(c);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.fill_minimal(0);
            return true;
        }
        // Find the rightmost position (never 0: vertex 1 stays color 1) that
        // can take a larger color while the suffix can still reach t.
        for pos in (1..self.n).rev() {
            let prev_max = self.maxes[pos - 1];
            let cap = (prev_max + 1).min(self.t);
            let next = self.current[pos] + 1;
            if next <= cap {
                let remaining = (self.n - pos - 1) as u8;
                let new_max = prev_max.max(next);
                if self.t - new_max <= remaining {
                    self.current[pos] = next;
                    self.maxes[pos] = new_max;
                    self.fill_minimal(pos + 1);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for ColoringClasses {
    type Item = ColoringClass;

    fn next(&mut self) -> Option<ColoringClass> {
        if self.exhausted || !self.advance() {
            self.exhausted = true;
            return None;
        }
        Some(ColoringClass::from_rgs_unchecked(self.current.clone()))
    }
}
