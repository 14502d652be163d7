//! Fixed-width bitsets over the vertex indices of a graph.
//!
//! A [`VertexSet`] is the common currency of the crate: initially infected
//! sets, closures, percolation witnesses and graph layers are all vertex
//! sets. Every set carries the width (vertex count) of the graph it is
//! interpreted against; combining sets of different widths is a logic error
//! and panics.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    width: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set over `width` vertices.
    pub fn new(width: usize) -> Self {
        VertexSet {
            width,
            words: vec![0; width.div_ceil(WORD_BITS)],
        }
    }

    /// The full set `{0, 1, …, width-1}`.
    pub fn full(width: usize) -> Self {
        let mut s = Self::new(width);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, iter: I) -> Self {
        let mut s = Self::new(width);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.width && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`, returning whether it was newly added. Panics when `v`
    /// is outside the set's width.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.width, "vertex {v} out of range for width {}", self.width);
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.width, "vertex {v} out of range for width {}", self.width);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.width);
        s.difference_with(self);
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset_of(&self, other: &VertexSet) -> bool {
        other.is_subset_of(self)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.check_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    pub fn copy_from(&mut self, other: &VertexSet) {
        self.check_width(other);
        self.words.copy_from_slice(&other.words);
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word_idx: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn clear_tail(&mut self) {
        let rem = self.width % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn check_width(&self, other: &VertexSet) {
        assert_eq!(
            self.width, other.width,
            "vertex set width mismatch: {} vs {}",
            self.width, other.width
        );
    }
}

/// Order by membership viewed as a sequence of sorted indices: the set whose
/// lowest differing vertex is present compares smaller. For equal-cardinality
/// sets this is the lexicographic order on sorted index lists, which is how
/// solver witnesses are tie-broken.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.check_width(other);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                let diff = a ^ b;
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Serializes as the sorted array of member indices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
