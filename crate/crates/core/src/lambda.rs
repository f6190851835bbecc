//! Canonical indexing of the triple set `Λ³[n]`: ranks, sticks, and
//! color-subset restriction maps. Everything else in the crate addresses
//! triples through this module.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::triple::Triple;

/// Hard cap on the color count; fixes the bit width of `InversionSet`
/// (C(12,3) = 220 bits).
pub const HARD_MAX_N: u8 = 12;

const MAX_N_ENV: &str = "ZONOTIL_MAX_N";

/// The configured color-count cap: `ZONOTIL_MAX_N` if set (clamped to the
/// hard cap), 12 otherwise. Read once per process.
pub fn max_n() -> u8 {
    static CAP: OnceLock<u8> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.parse::<u8>().ok())
            .map(|v| v.clamp(1, HARD_MAX_N))
            .unwrap_or(HARD_MAX_N)
    })
}

pub(crate) fn validate_n(n: u8) -> Result<()> {
    if n == 0 || n > max_n() {
        Err(Error::NOverCap { n, cap: max_n() })
    } else {
        Ok(())
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n,3)`, the number of triples of `[n]`.
pub fn lambda_size(n: u8) -> usize {
    binom(n as usize, 3)
}

/// Lexicographic rank of `t` within the triple set of `[n]`.
pub fn triple_rank(t: Triple, n: u8) -> Result<usize> {
    validate_n(n)?;
    t.check_colors(n)?;
    let (i, j, k) = (t.i() as usize, t.j() as usize, t.k() as usize);
    let n = n as usize;
    let mut rank = 0;
    for a in 1..i {
        rank += binom(n - a, 2);
    }
    for b in i + 1..j {
        rank += n - b;
    }
    Ok(rank + k - j - 1)
}

/// Inverse of [`triple_rank`].
pub fn triple_unrank(rank: usize, n: u8) -> Result<Triple> {
    validate_n(n)?;
    let size = lambda_size(n);
    if rank >= size {
        return Err(Error::RankOutOfRange { rank, n, size });
    }
    let n = n as usize;
    let mut r = rank;
    let mut i = 1;
    while r >= binom(n - i, 2) {
        r -= binom(n - i, 2);
        i += 1;
    }
    let mut j = i + 1;
    while r >= n - j {
        r -= n - j;
        j += 1;
    }
    let k = j + 1 + r;
    Triple::new(i as u8, j as u8, k as u8)
}

/// The four triples of a quadruple `i<j<k<l`, in lexicographic member order:
/// `ijk, ijl, ikl, jkl`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stick {
    quad: [u8; 4],
    members: [Triple; 4],
}

impl Stick {
    pub fn new(i: u8, j: u8, k: u8, l: u8) -> Result<Self> {
        if !(i >= 1 && i < j && j < k && k < l) {
            return Err(Error::InvalidSubset(l));
        }
        Ok(Stick {
            quad: [i, j, k, l],
            members: [
                Triple::new(i, j, k)?,
                Triple::new(i, j, l)?,
                Triple::new(i, k, l)?,
                Triple::new(j, k, l)?,
            ],
        })
    }

    pub fn quad(&self) -> [u8; 4] {
        self.quad
    }

    pub fn members(&self) -> [Triple; 4] {
        self.members
    }

    pub fn position_of(&self, t: Triple) -> Option<usize> {
        self.members.iter().position(|&m| m == t)
    }
}

impl fmt::Display for Stick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.quad[3] <= 9 {
            write!(f, "{}{}{}{}", self.quad[0], self.quad[1], self.quad[2], self.quad[3])
        } else {
            write!(f, "{}-{}-{}-{}", self.quad[0], self.quad[1], self.quad[2], self.quad[3])
        }
    }
}

impl fmt::Debug for Stick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All sticks of `[n]` in lexicographic quadruple order; empty for `n < 4`.
pub fn sticks(n: u8) -> Result<Vec<Stick>> {
    validate_n(n)?;
    let mut out = Vec::with_capacity(binom(n as usize, 4));
    for q in (1..=n).combinations(4) {
        out.push(Stick::new(q[0], q[1], q[2], q[3])?);
    }
    Ok(out)
}

/// The triple set of `[n]` with its addressing tables: the lexicographic
/// ordering, rank lookup, and the stick incidence used by the tiling
/// criterion.
pub struct Lambda {
    n: u8,
    triples: Vec<Triple>,
    sticks: Vec<Stick>,
    /// Per stick, the four member ranks in member order.
    stick_ranks: Vec<[u16; 4]>,
    /// Per triple rank, the sticks containing it as `(stick index, member position)`.
    sticks_of: Vec<Vec<(u16, u8)>>,
}

impl Lambda {
    pub fn new(n: u8) -> Result<Self> {
        validate_n(n)?;
        let triples: Vec<Triple> = (1..=n)
            .combinations(3)
            .map(|c| Triple::new(c[0], c[1], c[2]))
            .collect::<Result<_>>()?;
        let sticks = sticks(n)?;
        let rank_of: HashMap<Triple, u16> =
            triples.iter().enumerate().map(|(r, &t)| (t, r as u16)).collect();
        let mut stick_ranks = Vec::with_capacity(sticks.len());
        let mut sticks_of = vec![Vec::with_capacity(n.saturating_sub(3) as usize); triples.len()];
        for (s, stick) in sticks.iter().enumerate() {
            let mut ranks = [0u16; 4];
            for (pos, m) in stick.members().iter().enumerate() {
                let r = rank_of[m];
                ranks[pos] = r;
                sticks_of[r as usize].push((s as u16, pos as u8));
            }
            stick_ranks.push(ranks);
        }
        Ok(Lambda { n, triples, sticks, stick_ranks, sticks_of })
    }

    /// Cached shared tables for `n`; built once per process.
    pub fn get(n: u8) -> Result<Arc<Lambda>> {
        static CACHE: OnceLock<Mutex<HashMap<u8, Arc<Lambda>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("lambda cache poisoned");
        if let Some(arc) = guard.get(&n) {
            return Ok(arc.clone());
        }
        let arc = Arc::new(Lambda::new(n)?);
        guard.insert(n, arc.clone());
        Ok(arc)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.triples.len()
    }

    /// The lexicographic ordering of all triples.
    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    /// Rank via binary search on the ordering (the closed-form
    /// [`triple_rank`] is the second, independent route).
    pub fn rank(&self, t: Triple) -> Result<usize> {
        t.check_colors(self.n)?;
        self.triples
            .binary_search(&t)
            .map_err(|_| Error::ColorOutOfRange { color: t.k(), n: self.n })
    }

    pub fn unrank(&self, rank: usize) -> Result<Triple> {
        self.triples
            .get(rank)
            .copied()
            .ok_or(Error::RankOutOfRange { rank, n: self.n, size: self.size() })
    }

    pub fn sticks(&self) -> &[Stick] {
        &self.sticks
    }

    pub(crate) fn stick_ranks(&self) -> &[[u16; 4]] {
        &self.stick_ranks
    }

    pub(crate) fn sticks_of(&self, rank: usize) -> &[(u16, u8)] {
        &self.sticks_of[rank]
    }
}

/// Index map realizing restriction to an ordered color subset `K`:
/// entry `r` is the rank in `Λ³[n]` of the triple whose relabeled form has
/// rank `r` in `Λ³[|K|]`. Restricting an inversion set is a gather through it.
pub fn restriction_map(subset: &[u8], n: u8) -> Result<Vec<usize>> {
    validate_n(n)?;
    if subset.len() < 3 {
        return Err(Error::SubsetTooSmall(subset.len()));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != subset.len() || sorted[0] < 1 || *sorted.last().unwrap() > n {
        return Err(Error::InvalidSubset(n));
    }
    let m = sorted.len() as u8;
    let mut map = Vec::with_capacity(lambda_size(m));
    for r in 0..lambda_size(m) {
        let small = triple_unrank(r, m)?;
        let big = Triple::new(
            sorted[small.i() as usize - 1],
            sorted[small.j() as usize - 1],
            sorted[small.k() as usize - 1],
        )?;
        map.push(triple_rank(big, n)?);
    }
    Ok(map)
}
