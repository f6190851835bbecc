//! Profiles of voter tilings, the simple majority rule, and generalized
//! majority systems given by explicit families of big coalitions.

use std::fmt;

use crate::error::{Error, Result};
use crate::invset::InversionSet;
use crate::tiling::Tiling;

/// Majority systems are stored extensionally, so the voter count is capped.
pub const MAX_VOTERS: usize = 16;

/// One tiling per voter, all over the same `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    votes: Vec<Tiling>,
}

impl Profile {
    pub fn new(votes: Vec<Tiling>) -> Result<Self> {
        let first = votes.first().ok_or(Error::EmptyProfile)?;
        let n = first.n();
        for v in &votes {
            if v.n() != n {
                return Err(Error::MixedN(n, v.n()));
            }
        }
        Ok(Profile { votes })
    }

    pub fn n(&self) -> u8 {
        self.votes[0].n()
    }

    pub fn votes(&self) -> &[Tiling] {
        &self.votes
    }

    pub fn len(&self) -> usize {
        self.votes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every vote replaced by its opposite tiling.
    pub fn opposite(&self) -> Self {
        Profile { votes: self.votes.iter().map(Tiling::opposite).collect() }
    }
}

/// Simple majority: a triple is in the aggregate iff strictly more than half
/// the voters carry it. The result is a pseudo-tiling, not necessarily a
/// tiling. Requires an odd number of voters.
pub fn simple_majority(p: &Profile) -> Result<InversionSet> {
    if p.len().is_multiple_of(2) {
        return Err(Error::EvenVoters(p.len()));
    }
    let mut out = InversionSet::empty(p.n())?;
    let half = p.len() / 2;
    for r in 0..out.size() {
        let support = p.votes().iter().filter(|v| v.inv().contains_rank(r)).count();
        if support > half {
            out.insert_rank(r);
        }
    }
    Ok(out)
}

/// A family of "big coalitions" over a voter set, stored extensionally.
/// Coalitions are bitmasks with bit `v` = voter `v` (0-based).
#[derive(Clone, PartialEq, Eq)]
pub struct MajoritySystem {
    voters: usize,
    big: Vec<bool>,
}

impl MajoritySystem {
    pub fn from_coalitions(voters: usize, coalitions: &[u32]) -> Result<Self> {
        if voters > MAX_VOTERS {
            return Err(Error::TooManyVoters(voters));
        }
        let mut big = vec![false; 1 << voters];
        for &c in coalitions {
            if c as usize >= big.len() {
                return Err(Error::Parse(format!(
                    "coalition mask {c:#b} does not fit {voters} voters"
                )));
            }
            big[c as usize] = true;
        }
        Ok(MajoritySystem { voters, big })
    }

    /// The usual simple majority system: big iff more than half the voters.
    pub fn simple(voters: usize) -> Result<Self> {
        Self::weighted(&vec![1; voters])
    }

    /// Big iff the coalition contains the dictator.
    pub fn dictatorship(voters: usize, dictator: usize) -> Result<Self> {
        if voters > MAX_VOTERS {
            return Err(Error::TooManyVoters(voters));
        }
        assert!(dictator < voters, "dictator index out of range");
        let big = (0..1u32 << voters).map(|c| c >> dictator & 1 == 1).collect();
        Ok(MajoritySystem { voters, big })
    }

    /// Materializes the weighted system: big iff the coalition holds more
    /// than half the total weight. Deciding only when no coalition weighs
    /// exactly half.
    pub fn weighted(weights: &[u64]) -> Result<Self> {
        let voters = weights.len();
        if voters > MAX_VOTERS {
            return Err(Error::TooManyVoters(voters));
        }
        let total: u64 = weights.iter().sum();
        let big = (0..1u64 << voters)
            .map(|c| {
                let w: u64 = weights
                    .iter()
                    .enumerate()
                    .filter(|&(v, _)| c >> v & 1 == 1)
                    .map(|(_, &w)| w)
                    .sum();
                2 * w > total
            })
            .collect();
        Ok(MajoritySystem { voters, big })
    }

    pub fn voter_count(&self) -> usize {
        self.voters
    }

    pub fn is_big(&self, coalition: u32) -> bool {
        self.big[coalition as usize]
    }

    pub fn big_coalitions(&self) -> impl Iterator<Item = u32> + '_ {
        (0..1u32 << self.voters).filter(|&c| self.big[c as usize])
    }

    pub(crate) fn coalition_string(&self, coalition: u32) -> String {
        (0..self.voters)
            .map(|v| if coalition >> v & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for MajoritySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MajoritySystem(voters={}, big={})",
            self.voters,
            self.big_coalitions().count()
        )
    }
}

/// Checks monotonicity (supersets of big coalitions are big) and the
/// deciding axiom (a coalition is big iff its complement is not). On
/// failure, returns the witness coalition.
pub fn validate_majority_system(f: &MajoritySystem) -> Result<()> {
    let full = (1u32 << f.voters) - 1;
    for c in 0..=full {
        if f.is_big(c) {
            // flipping any absent voter in must keep the coalition big
            for v in 0..f.voters {
                let sup = c | 1 << v;
                if !f.is_big(sup) {
                    return Err(Error::InvalidMajoritySystem {
                        axiom: "monotonicity",
                        witness: f.coalition_string(sup),
                    });
                }
            }
        }
        if f.is_big(c) == f.is_big(full ^ c) {
            return Err(Error::InvalidMajoritySystem {
                axiom: "the deciding axiom",
                witness: f.coalition_string(c),
            });
        }
    }
    Ok(())
}

/// Aggregates the profile under a majority system: a triple is in the result
/// iff its supporter coalition is big. The result need not be a tiling.
pub fn aggregate_with_system(p: &Profile, f: &MajoritySystem) -> Result<InversionSet> {
    validate_majority_system(f)?;
    if p.len() != f.voter_count() {
        return Err(Error::VoterCountMismatch { profile: p.len(), system: f.voter_count() });
    }
    let mut out = InversionSet::empty(p.n())?;
    for r in 0..out.size() {
        let mut supporters = 0u32;
        for (v, t) in p.votes().iter().enumerate() {
            if t.inv().contains_rank(r) {
                supporters |= 1 << v;
            }
        }
        if f.is_big(supporters) {
            out.insert_rank(r);
        }
    }
    Ok(out)
}
