//! Fixed-capacity bit sets backed by `u64` words.
//!
//! A `BitSet` holds indices in `0..capacity`. Every operation maintains the
//! invariant that padding bits past `capacity` in the last word stay zero,
//! so popcounts, equality and word-level scans never need a trailing mask.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

/// A set of indices in `0..capacity`, one bit each.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    capacity: usize,
}

impl BitSet {
    /// Empty set able to hold indices in `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        BitSet {
            words: vec![0; word_count(capacity)],
            capacity,
        }
    }

    /// Set containing every index in `0..capacity`.
    pub fn full(capacity: usize) -> Self {
        let mut s = BitSet {
            words: vec![!0u64; word_count(capacity)],
            capacity,
        };
        s.mask_tail();
        s
    }

    /// Set containing exactly `indices`.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices(capacity: usize, indices: &[usize]) -> Self {
        let mut s = BitSet::new(capacity);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Zero out padding bits in the last word.
    fn mask_tail(&mut self) {
        let rem = self.capacity % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.capacity,
            "index {i} out of range {}",
            self.capacity
        );
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        assert!(
            i < self.capacity,
            "index {i} out of range {}",
            self.capacity
        );
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.capacity && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of set bits.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Lowest set index `>= from`, if any.
    #[inline]
    pub fn next_at(&self, from: usize) -> Option<usize> {
        if from >= self.capacity {
            return None;
        }
        let mut wi = from / WORD_BITS;
        let mut w = self.words[wi] & (!0u64 << (from % WORD_BITS));
        loop {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    /// Iterator over set indices in ascending order.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    /// Overwrite with `src`. Capacities must match.
    pub fn copy_from(&mut self, src: &BitSet) {
        debug_assert_eq!(self.capacity, src.capacity);
        self.words.copy_from_slice(&src.words);
    }

    /// `self = a & b`. Capacities must match.
    #[inline]
    pub fn assign_and(&mut self, a: &BitSet, b: &BitSet) {
        debug_assert_eq!(a.capacity, b.capacity);
        debug_assert_eq!(self.capacity, a.capacity);
        for (dst, (&x, &y)) in self.words.iter_mut().zip(a.words.iter().zip(&b.words)) {
            *dst = x & y;
        }
    }

    /// `self = a | b`. Capacities must match.
    #[inline]
    pub fn assign_or(&mut self, a: &BitSet, b: &BitSet) {
        debug_assert_eq!(a.capacity, b.capacity);
        debug_assert_eq!(self.capacity, a.capacity);
        for (dst, (&x, &y)) in self.words.iter_mut().zip(a.words.iter().zip(&b.words)) {
            *dst = x | y;
        }
    }

    /// `self &= other`.
    #[inline]
    pub fn and_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (dst, &w) in self.words.iter_mut().zip(&other.words) {
            *dst &= w;
        }
    }

    /// `self |= other`.
    #[inline]
    pub fn or_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (dst, &w) in self.words.iter_mut().zip(&other.words) {
            *dst |= w;
        }
    }

    /// `self &= !other`.
    #[inline]
    pub fn and_not_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (dst, &w) in self.words.iter_mut().zip(&other.words) {
            *dst &= !w;
        }
    }

    /// New set `self & other`.
    pub fn and(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    /// New set `self | other`.
    pub fn or(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.or_assign(other);
        out
    }

    /// New set `self & !other`.
    pub fn and_not(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.and_not_assign(other);
        out
    }

    /// `|self & other|` without materializing the intersection.
    #[inline]
    pub fn count_and(&self, other: &BitSet) -> usize {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&x, &y)| (x & y).count_ones() as usize)
            .sum()
    }

    /// True if `self & other` is empty.
    #[inline]
    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&x, &y)| x & y == 0)
    }

    /// True if every index of `self` is in `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&x, &y)| x & !y == 0)
    }

    /// Indices as a sorted vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.ones().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BitSet")?;
        f.debug_set().entries(self.ones()).finish()
    }
}

/// Ascending iterator over the set bits of a `BitSet`.
pub struct Ones<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}
