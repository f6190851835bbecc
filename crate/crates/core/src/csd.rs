//! Super-domains of tilings: the Condorcet super-domain check by medians and
//! by quadruple restrictions, compatibility and cliques, normality,
//! closedness, and maximality testing.

use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::invset::InversionSet;
use crate::lambda::Stick;
use crate::tiling::{enumerate_all, median3, ziegler_witness, Tiling};

/// A deduplicated set of tilings over one `[n]`, kept in canonical order
/// (rank, then bitstring).
#[derive(Clone, PartialEq, Eq)]
pub struct SuperDomain {
    n: u8,
    members: Vec<Tiling>,
}

impl SuperDomain {
    pub fn new(n: u8, members: Vec<Tiling>) -> Result<Self> {
        crate::lambda::validate_n(n)?;
        for t in &members {
            if t.n() != n {
                return Err(Error::MixedN(n, t.n()));
            }
        }
        let mut members = members;
        members.sort_by_key(|t| (t.rank(), *t.inv()));
        members.dedup();
        Ok(SuperDomain { n, members })
    }

    /// Infers `n` from the first member.
    pub fn from_members(members: Vec<Tiling>) -> Result<Self> {
        let n = members.first().ok_or(Error::EmptyProfile)?.n();
        Self::new(n, members)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn members(&self) -> &[Tiling] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Tiling) -> bool {
        self.members
            .binary_search_by_key(&(t.rank(), *t.inv()), |m| (m.rank(), *m.inv()))
            .is_ok()
    }

    pub fn with(&self, t: Tiling) -> Result<Self> {
        let mut members = self.members.clone();
        members.push(t);
        Self::new(self.n, members)
    }
}

impl fmt::Debug for SuperDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperDomain(n={}, [", self.n)?;
        for (i, t) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "])")
    }
}

/// Two tilings are compatible when both the intersection and the union of
/// their inversion sets are tilings.
pub fn compatible(a: &Tiling, b: &Tiling) -> bool {
    assert_eq!(a.n(), b.n(), "tilings use different color counts");
    ziegler_witness(&(a.inv() & b.inv())).is_none()
        && ziegler_witness(&(a.inv() | b.inv())).is_none()
}

/// All members pairwise compatible.
pub fn is_clique(d: &SuperDomain) -> bool {
    d.members()
        .iter()
        .tuple_combinations()
        .all(|(a, b)| compatible(a, b))
}

/// Contains both the standard and the anti-standard tiling.
pub fn is_normal(d: &SuperDomain) -> bool {
    let std = Tiling::standard(d.n()).expect("n validated");
    d.contains(&std) && d.contains(&std.opposite())
}

/// The lexicographically first member triple whose median fails the stick
/// criterion.
#[derive(Clone, Debug)]
pub struct CsdWitness {
    pub members: [Tiling; 3],
    pub median: InversionSet,
    pub stick: Stick,
}

/// First failing triple for the Condorcet super-domain property, if any.
/// Repeated members reduce to pair or singleton medians, which are always
/// tilings, so distinct triples are what is checked.
pub fn csd_witness(d: &SuperDomain) -> Option<CsdWitness> {
    for combo in d.members().iter().combinations(3) {
        let (a, b, c) = (combo[0], combo[1], combo[2]);
        let m = median3(a.inv(), b.inv(), c.inv()).expect("uniform n");
        if let Some(stick) = ziegler_witness(&m) {
            return Some(CsdWitness { members: [*a, *b, *c], median: m, stick });
        }
    }
    None
}

/// Condorcet super-domain: the median of every member triple is a tiling.
pub fn is_csd(d: &SuperDomain) -> bool {
    csd_witness(d).is_none()
}

/// The same property checked through quadruple restrictions: the domain is a
/// CSD iff its restriction to every quadruple of colors is one. Agrees with
/// [`is_csd`] on every input.
pub fn is_csd_via_quadruples(d: &SuperDomain) -> bool {
    if d.n() < 4 {
        return true;
    }
    for quad in (1..=d.n()).combinations(4) {
        let restricted: Vec<Tiling> = d
            .members()
            .iter()
            .map(|t| t.restrict(&quad).expect("quadruple is a valid subset"))
            .collect();
        let rd = SuperDomain::new(4, restricted).expect("restrictions share n = 4");
        if !is_csd(&rd) {
            return false;
        }
    }
    true
}

/// A member triple whose median is not itself a member.
#[derive(Clone, Debug)]
pub struct ClosednessWitness {
    pub members: [Tiling; 3],
    pub median: InversionSet,
}

pub fn closedness_witness(d: &SuperDomain) -> Option<ClosednessWitness> {
    for combo in d.members().iter().combinations(3) {
        let (a, b, c) = (combo[0], combo[1], combo[2]);
        let m = median3(a.inv(), b.inv(), c.inv()).expect("uniform n");
        let inside = match Tiling::new(m) {
            Ok(t) => d.contains(&t),
            Err(_) => false,
        };
        if !inside {
            return Some(ClosednessWitness { members: [*a, *b, *c], median: m });
        }
    }
    None
}

/// Median super-domain: the median of every member triple is a member.
pub fn is_closed(d: &SuperDomain) -> bool {
    closedness_witness(d).is_none()
}

/// Outcome of the maximality test.
#[derive(Clone, Debug)]
pub enum Maximality {
    Maximal,
    /// The domain stays a CSD after adding this tiling.
    Extendable(Tiling),
    /// The domain is not a CSD in the first place.
    NotCsd(CsdWitness),
    /// The time budget ran out before the scan finished.
    Unknown,
}

impl Maximality {
    pub fn is_maximal(&self) -> bool {
        matches!(self, Maximality::Maximal)
    }
}

/// Exhaustive maximality test: a CSD is maximal iff no tiling outside it can
/// be added while keeping the CSD property. Candidates stream in canonical
/// enumeration order, so the extension witness is the first addable tiling.
pub fn maximality(d: &SuperDomain, budget: Option<Duration>) -> Result<Maximality> {
    if let Some(w) = csd_witness(d) {
        return Ok(Maximality::NotCsd(w));
    }
    let start = Instant::now();
    let all = enumerate_all(d.n())?;
    for cand in all.iter() {
        if let Some(limit) = budget {
            if start.elapsed() > limit {
                return Ok(Maximality::Unknown);
            }
        }
        if d.contains(cand) {
            continue;
        }
        // the domain is already a CSD, so only triples involving the
        // candidate need checking
        let mut addable = true;
        'outer: for (a, b) in d.members().iter().tuple_combinations() {
            let m = median3(a.inv(), b.inv(), cand.inv()).expect("uniform n");
            if ziegler_witness(&m).is_some() {
                addable = false;
                break 'outer;
            }
        }
        if addable {
            return Ok(Maximality::Extendable(*cand));
        }
    }
    Ok(Maximality::Maximal)
}

pub fn is_maximal_csd(d: &SuperDomain) -> Result<bool> {
    Ok(maximality(d, None)?.is_maximal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_invset;

    fn tiling(s: &str, n: u8) -> Tiling {
        Tiling::new(parse_invset(s, n).unwrap()).unwrap()
    }

    fn domain(strings: &[&str], n: u8) -> SuperDomain {
        SuperDomain::new(n, strings.iter().map(|s| tiling(s, n)).collect()).unwrap()
    }

    #[test]
    fn compatibility_examples() {
        for t in enumerate_all(5).unwrap().iter() {
            assert!(compatible(t, &t.opposite()));
        }
        assert!(!compatible(&tiling("1000", 4), &tiling("0001", 4)));
        // comparable tilings are compatible
        let all = enumerate_all(5).unwrap();
        for a in all.iter() {
            for b in all.iter() {
                if a.inv().is_subset(b.inv()) {
                    assert!(compatible(a, b));
                }
            }
        }
    }

    #[test]
    fn clique_and_normal_examples() {
        let branch = domain(&["0000", "1000", "1100", "1110", "1111"], 4);
        assert!(is_clique(&branch));
        assert!(is_normal(&branch));

        let pair = domain(&["0000", "1111"], 4);
        assert!(is_clique(&pair) && is_normal(&pair));

        let bad = domain(&["1000", "0001"], 4);
        assert!(!is_clique(&bad));
        assert!(!is_normal(&bad));
    }

    #[test]
    fn csd_examples() {
        assert!(is_csd(&domain(&["0000", "1000", "1100", "1110", "1111"], 4)));

        let d = domain(&["1100", "0111", "0001"], 4);
        let w = csd_witness(&d).unwrap();
        assert!(!is_csd(&d));
        assert_eq!(w.median.to_bitstring(), "0101");
        assert!(!crate::tiling::is_tiling(&w.median));

        assert!(is_csd(&domain(&["1000", "0001"], 4)));
        assert!(is_csd(&domain(&["1000"], 4)));
        assert!(is_csd(&SuperDomain::new(4, vec![]).unwrap()));
    }

    #[test]
    fn quadruple_route_agrees_on_octagon_subsets() {
        let all = enumerate_all(4).unwrap();
        for size in 0..=5usize {
            for combo in all.iter().combinations(size) {
                let d = SuperDomain::new(4, combo.into_iter().copied().collect()).unwrap();
                assert_eq!(is_csd(&d), is_csd_via_quadruples(&d));
            }
        }
    }

    #[test]
    fn closedness_examples() {
        let class_i = domain(&["0000", "1000", "1100", "1110", "1111"], 4);
        assert!(is_closed(&class_i));

        // any chain is closed: the median of a chain triple is its middle
        let chain = domain(&["0000", "1000", "1100"], 4);
        assert!(is_closed(&chain));

        // a CSD need not be closed: here the median is a tiling outside the domain
        let open = domain(&["234,235,245", "234,134,124", "234,235,134,135"], 5);
        assert!(is_csd(&open));
        let w = closedness_witness(&open).unwrap();
        assert_eq!(
            w.median,
            parse_invset("234,134,235", 5).unwrap()
        );
    }

    #[test]
    fn maximality_examples() {
        let chain4 = domain(&["0000", "1000", "1100", "1110"], 4);
        match maximality(&chain4, None).unwrap() {
            // the witness is the first addable tiling in canonical order;
            // "1111" extends the chain too
            Maximality::Extendable(t) => assert_eq!(t.to_string(), "0001"),
            other => panic!("expected extendable, got {other:?}"),
        }
        assert!(is_csd(&chain4.with(tiling("1111", 4)).unwrap()));

        let incomplete = SuperDomain::new(
            5,
            vec![Tiling::standard(5).unwrap(), Tiling::anti_standard(5).unwrap()],
        )
        .unwrap();
        assert!(!is_maximal_csd(&incomplete).unwrap());

        let class_i = domain(&["0000", "1000", "1100", "1110", "1111"], 4);
        assert!(is_maximal_csd(&class_i).unwrap());

        let not_csd = domain(&["1100", "0111", "0001"], 4);
        assert!(matches!(maximality(&not_csd, None).unwrap(), Maximality::NotCsd(_)));
    }

    #[test]
    fn super_domain_dedupes_and_orders() {
        let d = domain(&["1111", "0000", "1111", "1000"], 4);
        let strings: Vec<String> = d.members().iter().map(|t| t.to_string()).collect();
        assert_eq!(strings, ["0000", "1000", "1111"]);
        assert_eq!(d.len(), 3);
        assert!(d.contains(&tiling("1000", 4)));
        assert!(!d.contains(&tiling("1100", 4)));
    }
}
