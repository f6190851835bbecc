//! Linear orders on `[n]`, the combinatorial membership test for a tiling's
//! Condorcet domain Σ(T), and the acyclic-majority check for sets of orders.
//!
//! The membership convention: for a triple `i<j<k`, the pair inversions of a
//! compatible order meet the lexicographic pair triple `(ij, ik, jk)` in a
//! terminal segment when `ijk` lies in the tiling's inversion set, and in an
//! initial segment when it does not (the empty and full segments qualify as
//! both).

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lambda::Lambda;
use crate::tiling::Tiling;

/// Cap for exhaustive enumeration over all `n!` orders.
pub const SIGMA_CAP: u8 = 9;

/// A permutation of `[n]`, first element least, together with its pair
/// inversion set `{(i,j) : i < j, j precedes i}` as a bitmask in
/// lexicographic pair-rank order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    seq: Vec<u8>,
    pair_inv: u128,
}

/// Lexicographic rank of the pair `i < j` among pairs of `[n]`.
pub fn pair_rank(i: u8, j: u8, n: u8) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let (i, j, n) = (i as usize, j as usize, n as usize);
    (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

/// The pair inversions of a permutation of `[n]`, sorted lexicographically.
pub fn order_inversions(seq: &[u8]) -> Result<Vec<(u8, u8)>> {
    let order = LinearOrder::new(seq.to_vec())?;
    Ok(order.pair_inversions())
}

impl LinearOrder {
    pub fn new(seq: Vec<u8>) -> Result<Self> {
        let n = seq.len() as u8;
        let mut seen = vec![false; seq.len() + 1];
        for &c in &seq {
            if c == 0 || c > n || seen[c as usize] {
                return Err(Error::NotAPermutation(n));
            }
            seen[c as usize] = true;
        }
        let mut pair_inv = 0u128;
        for (a, &x) in seq.iter().enumerate() {
            for &y in &seq[a + 1..] {
                if y < x {
                    pair_inv |= 1 << pair_rank(y, x, n);
                }
            }
        }
        Ok(LinearOrder { seq, pair_inv })
    }

    /// The standard order `1 < 2 < ... < n`.
    pub fn identity(n: u8) -> Self {
        LinearOrder::new((1..=n).collect()).expect("identity is a permutation")
    }

    /// The anti-natural order `n < ... < 2 < 1`.
    pub fn reversal(n: u8) -> Self {
        LinearOrder::new((1..=n).rev().collect()).expect("reversal is a permutation")
    }

    pub fn n(&self) -> u8 {
        self.seq.len() as u8
    }

    pub fn seq(&self) -> &[u8] {
        &self.seq
    }

    pub fn reversed(&self) -> Self {
        LinearOrder::new(self.seq.iter().rev().copied().collect())
            .expect("reverse of a permutation is a permutation")
    }

    pub fn contains_inversion(&self, i: u8, j: u8) -> bool {
        self.pair_inv >> pair_rank(i, j, self.n()) & 1 == 1
    }

    pub fn pair_inversions(&self) -> Vec<(u8, u8)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                if self.contains_inversion(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The induced order on a color subset, relabeled order-preservingly.
    pub fn restrict(&self, subset: &[u8]) -> Result<LinearOrder> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() || sorted.is_empty() || *sorted.last().unwrap() > self.n() {
            return Err(Error::InvalidSubset(self.n()));
        }
        let relabel = |c: u8| (sorted.binary_search(&c).unwrap() + 1) as u8;
        let seq = self
            .seq
            .iter()
            .filter(|c| sorted.binary_search(c).is_ok())
            .map(|&c| relabel(c))
            .collect();
        LinearOrder::new(seq)
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.seq.iter().map(|c| c.to_string()).join(","))
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder({})", self)
    }
}

/// Membership of an order in Σ(T), checked triple by triple.
pub fn is_compatible_order(order: &LinearOrder, t: &Tiling) -> bool {
    assert_eq!(order.n(), t.n(), "order and tiling use different color counts");
    let n = t.n();
    let lam = Lambda::get(n).expect("n validated");
    for (r, tr) in lam.triples().iter().enumerate() {
        let (i, j, k) = (tr.i(), tr.j(), tr.k());
        let pattern = order.contains_inversion(i, j) as u8
            | (order.contains_inversion(i, k) as u8) << 1
            | (order.contains_inversion(j, k) as u8) << 2;
        // segments of (ij, ik, jk): initial {000,001,011,111}, terminal {000,100,110,111}
        let ok = if t.inv().contains_rank(r) {
            matches!(pattern, 0b000 | 0b100 | 0b110 | 0b111)
        } else {
            matches!(pattern, 0b000 | 0b001 | 0b011 | 0b111)
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Σ(T): all compatible orders, in lexicographic sequence order. Exhausts
/// the `n!` permutations, so `n` is capped at [`SIGMA_CAP`].
pub fn sigma(t: &Tiling) -> Result<Vec<LinearOrder>> {
    let n = t.n();
    if n > SIGMA_CAP {
        return Err(Error::SigmaCapExceeded { n, cap: SIGMA_CAP });
    }
    let mut out = Vec::new();
    for seq in (1..=n).permutations(n as usize) {
        let order = LinearOrder::new(seq).expect("generated permutation");
        if is_compatible_order(&order, t) {
            out.push(order);
        }
    }
    Ok(out)
}

/// Three orders and three candidates on which the pairwise majority cycles.
#[derive(Clone, Debug)]
pub struct CycleWitness {
    pub orders: [LinearOrder; 3],
    pub candidates: [u8; 3],
}

/// The first (in input order) majority cycle among distinct order triples,
/// if any. With three voters the majority relation is total, so a cycle is
/// exactly a non-transitive candidate triple.
pub fn condorcet_cycle_witness(domain: &[LinearOrder]) -> Option<CycleWitness> {
    if domain.len() < 3 {
        return None;
    }
    let n = domain[0].n();
    assert!(
        domain.iter().all(|o| o.n() == n),
        "orders use different color counts"
    );
    let positions: Vec<Vec<u8>> = domain
        .iter()
        .map(|o| {
            let mut pos = vec![0u8; n as usize + 1];
            for (p, &c) in o.seq().iter().enumerate() {
                pos[c as usize] = p as u8;
            }
            pos
        })
        .collect();
    let prefers =
        |v: usize, x: u8, y: u8| positions[v][x as usize] < positions[v][y as usize];
    let majority = |a: usize, b: usize, c: usize, x: u8, y: u8| {
        (prefers(a, x, y) as u8 + prefers(b, x, y) as u8 + prefers(c, x, y) as u8) >= 2
    };
    for combo in (0..domain.len()).combinations(3) {
        let (a, b, c) = (combo[0], combo[1], combo[2]);
        for trip in (1..=n).combinations(3) {
            let (x, y, z) = (trip[0], trip[1], trip[2]);
            let xy = majority(a, b, c, x, y);
            let yz = majority(a, b, c, y, z);
            let zx = majority(a, b, c, z, x);
            if xy == yz && yz == zx {
                return Some(CycleWitness {
                    orders: [domain[a].clone(), domain[b].clone(), domain[c].clone()],
                    candidates: [x, y, z],
                });
            }
        }
    }
    None
}

/// True iff no three distinct orders of `domain` induce a majority cycle on
/// any triple of candidates.
pub fn is_condorcet_domain(domain: &[LinearOrder]) -> bool {
    condorcet_cycle_witness(domain).is_none()
}
