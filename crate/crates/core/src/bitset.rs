//! Fixed-width vertex sets for the search hot paths.
//!
//! The exact solvers run millions of membership / reachability operations,
//! so vertex sets are stored as `W` machine words and the word count is a
//! const generic: callers dispatch on graph order once (`W = 1` covers
//! n <= 64, which is everything the generators produce up to nanotube(4)).

/// A set over vertex ids `0..64*W`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VertexSet<const W: usize> {
    words: [u64; W],
}

impl<const W: usize> VertexSet<W> {
    pub const CAPACITY: usize = 64 * W;

    #[inline]
    pub fn empty() -> Self {
        Self { words: [0; W] }
    }

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub fn first_n(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        let mut words = [0u64; W];
        let mut left = n;
        for w in words.iter_mut() {
            if left >= 64 {
                *w = u64::MAX;
                left -= 64;
            } else {
                *w = (1u64 << left) - 1;
                break;
            }
        }
        Self { words }
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v >> 6] >> (v & 63) & 1 != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    #[inline]
    pub fn subtract(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }
}
