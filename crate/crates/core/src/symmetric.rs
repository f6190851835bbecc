//! Recursive partition of the triple set into `n-2` tilings, driven by a
//! sequence on `[2..n-1]`, and the Boolean super-domain of all part unions.

use crate::csd::SuperDomain;
use crate::error::{Error, Result};
use crate::invset::InversionSet;
use crate::lambda::{validate_n, Lambda};
use crate::tiling::{is_tiling, Tiling};

/// A permutation of `[2..n-1]`, the split order for the partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSequence {
    n: u8,
    seq: Vec<u8>,
}

impl SplitSequence {
    pub fn new(n: u8, seq: Vec<u8>) -> Result<Self> {
        validate_n(n)?;
        let want: Vec<u8> = (2..n).collect();
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if sorted != want {
            return Err(Error::NotASplitSequence(n.saturating_sub(1)));
        }
        Ok(SplitSequence { n, seq })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn seq(&self) -> &[u8] {
        &self.seq
    }
}

/// The straddle tiling for `j` within `[p..q]`: all triples `a < b < c` with
/// `p <= a`, `c <= q`, and `a < j < c`.
pub fn straddle_part(j: u8, p: u8, q: u8, n: u8) -> Result<Tiling> {
    validate_n(n)?;
    if !(p < j && j < q) {
        return Err(Error::BadSplitPoint { j, p, q });
    }
    if p < 1 || q > n {
        return Err(Error::IntervalOutOfRange { a: p, b: q, n });
    }
    let lam = Lambda::get(n)?;
    let mut inv = InversionSet::empty(n)?;
    for (r, t) in lam.triples().iter().enumerate() {
        if p <= t.i() && t.k() <= q && t.i() < j && j < t.k() {
            inv.insert_rank(r);
        }
    }
    debug_assert!(is_tiling(&inv));
    Tiling::new(inv)
}

/// A partition of the triple set into tilings, keyed by the split point `j`
/// that produced each part (so equal partitions compare equal regardless of
/// the sequence that built them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPartition {
    n: u8,
    parts: Vec<(u8, Tiling)>,
}

impl LambdaPartition {
    /// Validates disjointness and that the union is the full triple set.
    pub fn new(n: u8, mut parts: Vec<(u8, Tiling)>) -> Result<Self> {
        validate_n(n)?;
        parts.sort_by_key(|&(j, _)| j);
        let mut union = InversionSet::empty(n)?;
        for (j, t) in &parts {
            if t.n() != n {
                return Err(Error::MixedN(n, t.n()));
            }
            if !union.is_disjoint(t.inv()) {
                return Err(Error::InvalidPartition(format!("part {j} overlaps another part")));
            }
            union = &union | t.inv();
        }
        if union != InversionSet::full(n)? {
            return Err(Error::InvalidPartition("parts do not cover the triple set".into()));
        }
        Ok(LambdaPartition { n, parts })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Parts sorted by their key `j`.
    pub fn parts(&self) -> &[(u8, Tiling)] {
        &self.parts
    }

    pub fn part_for(&self, j: u8) -> Option<&Tiling> {
        self.parts
            .binary_search_by_key(&j, |&(key, _)| key)
            .ok()
            .map(|idx| &self.parts[idx].1)
    }

    /// Union of the parts selected by `mask` (bit `b` = part `b` in key order).
    pub fn union_of(&self, mask: u64) -> Tiling {
        let mut inv = InversionSet::empty(self.n).expect("n validated");
        for (b, (_, t)) in self.parts.iter().enumerate() {
            if mask >> b & 1 == 1 {
                inv = &inv | t.inv();
            }
        }
        Tiling::new(inv).expect("every union of parts is a tiling")
    }
}

/// Recursive construction: keep a set of active intervals of `[2..n-1]`,
/// initially the whole of it. Each split point `j` consumes its active
/// interval `I` with extension `[p..q]` (`p = min I - 1`, `q = max I + 1`),
/// contributes the straddle part for `j` within `[p..q]`, and leaves the
/// sub-intervals on either side of `j` active.
pub fn symmetric_partition(s: &SplitSequence) -> LambdaPartition {
    let n = s.n();
    let mut active: Vec<(u8, u8)> = if n >= 3 { vec![(2, n - 1)] } else { vec![] };
    let mut parts = Vec::with_capacity(s.seq().len());
    for &j in s.seq() {
        let idx = active
            .iter()
            .position(|&(lo, hi)| lo <= j && j <= hi)
            .expect("a split sequence keeps every j inside one active interval");
        let (lo, hi) = active.swap_remove(idx);
        let part = straddle_part(j, lo - 1, hi + 1, n)
            .expect("active-interval extension stays inside [1..n]");
        parts.push((j, part));
        if lo < j {
            active.push((lo, j - 1));
        }
        if j < hi {
            active.push((j + 1, hi));
        }
    }
    LambdaPartition::new(n, parts).expect("straddle parts partition the triple set")
}

/// The Boolean super-domain `{ union of the parts of S : S subset of parts }`;
/// size `2^(n-2)` when all parts are nonempty. Each member is a tiling, the
/// domain is symmetric (complements pair up), normal, and closed under
/// intersection and union.
pub fn boolean_csd(p: &LambdaPartition) -> SuperDomain {
    let m = p.parts().len();
    let members: Vec<Tiling> = (0..1u64 << m).map(|mask| p.union_of(mask)).collect();
    SuperDomain::new(p.n(), members).expect("members share n")
}
