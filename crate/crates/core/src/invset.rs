use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};

use crate::error::{Error, Result};
use crate::lambda::{lambda_size, triple_rank, triple_unrank, validate_n};
use crate::triple::Triple;

const WORDS: usize = 4;

/// A subset of the triple set, stored as a fixed-width bit vector in
/// lexicographic rank order (a "pseudo-tiling").
///
/// Bit `r` of the vector is lexicographic rank `r`; the width is `C(n,3)`.
/// All set operations are pointwise and require equal `n` (they panic on a
/// mismatch; fallible entry points validate first).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct InversionSet {
    n: u8,
    words: [u64; WORDS],
}

impl InversionSet {
    pub fn empty(n: u8) -> Result<Self> {
        validate_n(n)?;
        Ok(InversionSet { n, words: [0; WORDS] })
    }

    /// The full set: every triple of `[n]`.
    pub fn full(n: u8) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for r in 0..s.size() {
            s.insert_rank(r);
        }
        Ok(s)
    }

    pub fn from_triples<I: IntoIterator<Item = Triple>>(n: u8, triples: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for t in triples {
            s.insert_rank(triple_rank(t, n)?);
        }
        Ok(s)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Width of the bit vector, `C(n,3)`.
    pub fn size(&self) -> usize {
        lambda_size(self.n)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains_rank(&self, rank: usize) -> bool {
        debug_assert!(rank < self.size());
        self.words[rank / 64] >> (rank % 64) & 1 == 1
    }

    pub fn contains(&self, t: Triple) -> bool {
        match triple_rank(t, self.n) {
            Ok(r) => self.contains_rank(r),
            Err(_) => false,
        }
    }

    pub fn insert_rank(&mut self, rank: usize) {
        debug_assert!(rank < self.size());
        self.words[rank / 64] |= 1 << (rank % 64);
    }

    pub fn remove_rank(&mut self, rank: usize) {
        debug_assert!(rank < self.size());
        self.words[rank / 64] &= !(1 << (rank % 64));
    }

    pub fn insert(&mut self, t: Triple) -> Result<()> {
        let r = triple_rank(t, self.n)?;
        self.insert_rank(r);
        Ok(())
    }

    /// Copy with one extra rank set.
    pub fn with_rank(&self, rank: usize) -> Self {
        let mut s = *self;
        s.insert_rank(rank);
        s
    }

    pub fn without_rank(&self, rank: usize) -> Self {
        let mut s = *self;
        s.remove_rank(rank);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = *self;
        let size = self.size();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if lo >= size {
                *word = 0;
            } else {
                let width = (size - lo).min(64);
                let mask = if width == 64 { !0 } else { (1u64 << width) - 1 };
                *word = !*word & mask;
            }
        }
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.assert_same_n(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.assert_same_n(other);
        let mut s = *self;
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.assert_same_n(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter_ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let base = w * 64;
            BitIter { word }.map(move |b| base + b)
        })
    }

    pub fn iter_triples(&self) -> impl Iterator<Item = Triple> + '_ {
        let n = self.n;
        self.iter_ranks()
            .map(move |r| triple_unrank(r, n).expect("set ranks are in range"))
    }

    /// Bitstring form: `C(n,3)` characters of `0`/`1`, leftmost = rank 0.
    pub fn to_bitstring(&self) -> String {
        (0..self.size())
            .map(|r| if self.contains_rank(r) { '1' } else { '0' })
            .collect()
    }

    fn assert_same_n(&self, other: &Self) {
        assert_eq!(
            self.n, other.n,
            "inversion sets use different color counts ({} vs {})",
            self.n, other.n
        );
    }

    pub(crate) fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::MixedN(self.n, other.n))
        }
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

impl BitAnd for &InversionSet {
    type Output = InversionSet;

    fn bitand(self, rhs: Self) -> InversionSet {
        self.assert_same_n(rhs);
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(&rhs.words) {
            *a &= b;
        }
        out
    }
}

impl BitOr for &InversionSet {
    type Output = InversionSet;

    fn bitor(self, rhs: Self) -> InversionSet {
        self.assert_same_n(rhs);
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(&rhs.words) {
            *a |= b;
        }
        out
    }
}

impl BitXor for &InversionSet {
    type Output = InversionSet;

    fn bitxor(self, rhs: Self) -> InversionSet {
        self.assert_same_n(rhs);
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        out
    }
}

/// Bitstring order: compare ranks from 0 upward, a set bit beats a clear one.
/// Equals the `str` order of `to_bitstring`.
impl Ord for InversionSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.assert_same_n(other);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                let r = (a ^ b).trailing_zeros();
                return if a >> r & 1 == 1 { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for InversionSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InversionSet(n={}, {})", self.n, self.to_bitstring())
    }
}
