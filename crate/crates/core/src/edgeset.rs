//! Fixed-capacity bitsets over the edge indices of a graph.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

/// A set of edge indices drawn from `0..universe`.
///
/// The universe is the edge count of the graph the set belongs to; operations
/// that combine a set with a graph or another set reject mismatched universes.
/// The cardinality is cached and kept equal to the popcount of the backing
/// words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
    len: usize,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            universe,
            words: vec![0; words_for(universe)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = EdgeSet::empty(universe);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.clear_tail();
        set.len = universe;
        set
    }

    /// Builds a set from explicit indices. Duplicates are rejected so that a
    /// certificate listing an edge twice is reported rather than repaired.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = EdgeSet::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::invalid(format!(
                    "edge index {i} out of range for {universe} edges"
                )));
            }
            if !set.insert(i) {
                return Err(Error::invalid(format!("edge index {i} listed twice")));
            }
        }
        Ok(set)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD_BITS] & (1u64 << (i % WORD_BITS)) != 0
    }

    /// Inserts `i`, returning whether it was newly added.
    ///
    /// # Panics
    /// Panics if `i` is outside the universe.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "edge index {i} out of range");
        let (w, b) = (i / WORD_BITS, 1u64 << (i % WORD_BITS));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.universe {
            return false;
        }
        let (w, b) = (i / WORD_BITS, 1u64 << (i % WORD_BITS));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        self.len -= present as usize;
        present
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        !self.intersects(other)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.recount();
    }

    pub fn intersect_with(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.recount();
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> EdgeSet {
        let mut out = EdgeSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
            len: 0,
        };
        out.clear_tail();
        out.recount();
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Re-establishes the cached cardinality after direct word edits.
    pub(crate) fn recount(&mut self) {
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    fn clear_tail(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Compares two sets as ascending index sequences, the order in which
    /// r-subsets are enumerated.
    pub fn cmp_lex(&self, other: &EdgeSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "e{i}")?;
            first = false;
        }
        Ok(())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
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
            self.current = *self.words.get(self.word_idx)?;
        }
    }
}

/// Smallest member of `words` strictly greater than `after`
/// (or the smallest member at all when `after` is `None`).
pub(crate) fn next_bit(words: &[u64], after: Option<usize>) -> Option<usize> {
    let start = after.map_or(0, |a| a + 1);
    let mut w = start / WORD_BITS;
    if w >= words.len() {
        return None;
    }
    let shift = start % WORD_BITS;
    let mut cur = words[w] & (u64::MAX << shift);
    loop {
        if cur != 0 {
            return Some(w * WORD_BITS + cur.trailing_zeros() as usize);
        }
        w += 1;
        cur = *words.get(w)?;
    }
}

/// Number of members of `words` strictly greater than `after`.
pub(crate) fn count_above(words: &[u64], after: usize) -> usize {
    let start = after + 1;
    let w = start / WORD_BITS;
    if w >= words.len() {
        return 0;
    }
    let head = (words[w] & (u64::MAX << (start % WORD_BITS))).count_ones() as usize;
    head + words[w + 1..]
        .iter()
        .map(|x| x.count_ones() as usize)
        .sum::<usize>()
}
