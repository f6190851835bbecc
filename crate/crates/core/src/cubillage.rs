//! Admissible orders on the triple set via stick orientations, and the
//! super-domain of all tilings whose stick intersections are initial
//! segments under an acyclic orientation assignment.

use std::fmt;

use crate::csd::SuperDomain;
use crate::error::{Error, Result};
use crate::invset::InversionSet;
use crate::lambda::{lambda_size, validate_n, Lambda};
use crate::tiling::{enumerate_all, Tiling};
use crate::triple::Triple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Lexicographic member order `ijk < ijl < ikl < jkl`.
    Direct,
    /// Anti-lexicographic member order.
    Reverse,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Direct => "D",
            Orientation::Reverse => "R",
        })
    }
}

/// One orientation per stick of `[n]`, in lexicographic quadruple order.
#[derive(Clone, PartialEq, Eq)]
pub struct StickOrientations {
    n: u8,
    orient: Vec<Orientation>,
}

impl StickOrientations {
    pub fn new(n: u8, orient: Vec<Orientation>) -> Result<Self> {
        validate_n(n)?;
        let want = Lambda::get(n)?.sticks().len();
        if orient.len() != want {
            return Err(Error::OrientationCountMismatch { n, got: orient.len(), want });
        }
        Ok(StickOrientations { n, orient })
    }

    pub fn all_direct(n: u8) -> Result<Self> {
        let count = Lambda::get(n)?.sticks().len();
        Self::new(n, vec![Orientation::Direct; count])
    }

    pub fn all_reverse(n: u8) -> Result<Self> {
        let count = Lambda::get(n)?.sticks().len();
        Self::new(n, vec![Orientation::Reverse; count])
    }

    /// Bit `b` set means stick `b` is reversed.
    pub fn from_bitmask(n: u8, mask: u64) -> Result<Self> {
        let count = Lambda::get(n)?.sticks().len();
        let orient = (0..count)
            .map(|b| if mask >> b & 1 == 1 { Orientation::Reverse } else { Orientation::Direct })
            .collect();
        Self::new(n, orient)
    }

    pub fn bitmask(&self) -> u64 {
        self.orient
            .iter()
            .enumerate()
            .filter(|(_, o)| **o == Orientation::Reverse)
            .fold(0, |acc, (b, _)| acc | 1 << b)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orient
    }

    fn chain_edges(&self) -> Vec<(usize, usize)> {
        let lam = Lambda::get(self.n).expect("n validated");
        let mut edges = Vec::with_capacity(3 * self.orient.len());
        for (s, ranks) in lam.stick_ranks().iter().enumerate() {
            for w in ranks.windows(2) {
                let (a, b) = (w[0] as usize, w[1] as usize);
                match self.orient[s] {
                    Orientation::Direct => edges.push((a, b)),
                    Orientation::Reverse => edges.push((b, a)),
                }
            }
        }
        edges
    }
}

impl fmt::Debug for StickOrientations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StickOrientations(n={}, ", self.n)?;
        for o in &self.orient {
            write!(f, "{o}")?;
        }
        write!(f, ")")
    }
}

/// A linear order on the triple set whose restriction to every stick is
/// lexicographic or anti-lexicographic.
#[derive(Clone, Debug)]
pub struct AdmissibleLinearOrder {
    seq: Vec<Triple>,
    orientations: StickOrientations,
}

impl AdmissibleLinearOrder {
    pub fn seq(&self) -> &[Triple] {
        &self.seq
    }

    pub fn n(&self) -> u8 {
        self.orientations.n()
    }

    /// The orientation each stick exhibits in this order.
    pub fn orientations(&self) -> &StickOrientations {
        &self.orientations
    }
}

/// Checks that `seq` is a permutation of the triple set of `[n]` ordered
/// lexicographically or anti-lexicographically on every stick; returns the
/// exhibited orientations, or the first stick ordered neither way.
pub fn validate_admissible(seq: &[Triple], n: u8) -> Result<AdmissibleLinearOrder> {
    let lam = Lambda::get(n)?;
    if seq.len() != lam.size() {
        return Err(Error::NotALambdaPermutation(n));
    }
    let mut position = vec![usize::MAX; lam.size()];
    for (p, &t) in seq.iter().enumerate() {
        let r = lam.rank(t).map_err(|_| Error::NotALambdaPermutation(n))?;
        if position[r] != usize::MAX {
            return Err(Error::NotALambdaPermutation(n));
        }
        position[r] = p;
    }
    let mut orient = Vec::with_capacity(lam.sticks().len());
    for (s, ranks) in lam.stick_ranks().iter().enumerate() {
        let pos = [
            position[ranks[0] as usize],
            position[ranks[1] as usize],
            position[ranks[2] as usize],
            position[ranks[3] as usize],
        ];
        if pos.windows(2).all(|w| w[0] < w[1]) {
            orient.push(Orientation::Direct);
        } else if pos.windows(2).all(|w| w[0] > w[1]) {
            orient.push(Orientation::Reverse);
        } else {
            return Err(Error::Inadmissible(lam.sticks()[s]));
        }
    }
    Ok(AdmissibleLinearOrder {
        seq: seq.to_vec(),
        orientations: StickOrientations { n, orient },
    })
}

/// The partial order on the triple set induced by chaining consecutive stick
/// members along their orientations, stored with its transitive closure.
#[derive(Debug)]
pub struct PrecedenceDigraph {
    n: u8,
    edges: Vec<(Triple, Triple)>,
    /// `successors[r]` = every triple strictly above rank `r`.
    successors: Vec<InversionSet>,
}

impl PrecedenceDigraph {
    pub fn n(&self) -> u8 {
        self.n
    }

    /// The generating (chain) edges, one per consecutive stick pair.
    pub fn edges(&self) -> &[(Triple, Triple)] {
        &self.edges
    }

    /// Strict precedence in the transitive closure.
    pub fn precedes(&self, a: Triple, b: Triple) -> Result<bool> {
        let lam = Lambda::get(self.n)?;
        let (ra, rb) = (lam.rank(a)?, lam.rank(b)?);
        Ok(self.successors[ra].contains_rank(rb))
    }

    /// DOT form: vertices labeled by triple, one arrow per chain edge.
    pub fn to_dot(&self) -> String {
        let lam = Lambda::get(self.n).expect("n validated");
        let mut out = String::from("digraph precedence {\n");
        for t in lam.triples() {
            out.push_str(&format!("  \"{t}\";\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn topological_order(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; adj.len()];
    for next in adj {
        for &b in next {
            indeg[b] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..adj.len()).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(adj.len());
    while let Some(v) = stack.pop() {
        order.push(v);
        for &b in &adj[v] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                stack.push(b);
            }
        }
    }
    (order.len() == adj.len()).then_some(order)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // iterative DFS; returns the vertices of one directed cycle
    let mut state = vec![0u8; adj.len()]; // 0 new, 1 on stack, 2 done
    let mut parent = vec![usize::MAX; adj.len()];
    for start in 0..adj.len() {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    1 => {
                        // back edge v -> w closes a cycle
                        let mut cycle = vec![v];
                        let mut cur = v;
                        while cur != w {
                            cur = parent[cur];
                            cycle.push(cur);
                        }
                        cycle.reverse();
                        return cycle;
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    unreachable!("find_cycle called on an acyclic graph")
}

/// Builds the precedence digraph of an orientation assignment and its
/// transitive closure; errors with a directed cycle when the assignment is
/// not acyclic.
pub fn precedence_digraph(o: &StickOrientations) -> Result<PrecedenceDigraph> {
    let lam = Lambda::get(o.n())?;
    let size = lambda_size(o.n());
    let mut adj = vec![Vec::new(); size];
    let mut edge_set = std::collections::BTreeSet::new();
    for (a, b) in o.chain_edges() {
        if edge_set.insert((a, b)) {
            adj[a].push(b);
        }
    }
    let Some(topo) = topological_order(&adj) else {
        let cycle = find_cycle(&adj)
            .into_iter()
            .map(|r| lam.unrank(r).expect("rank in range"))
            .collect();
        return Err(Error::CyclicOrientations(cycle));
    };
    let mut successors = vec![InversionSet::empty(o.n())?; size];
    for &v in topo.iter().rev() {
        let mut succ = InversionSet::empty(o.n())?;
        for &w in &adj[v] {
            succ.insert_rank(w);
            succ = &succ | &successors[w];
        }
        successors[v] = succ;
    }
    let edges = edge_set
        .into_iter()
        .map(|(a, b)| {
            (
                lam.unrank(a).expect("rank in range"),
                lam.unrank(b).expect("rank in range"),
            )
        })
        .collect();
    Ok(PrecedenceDigraph { n: o.n(), edges, successors })
}

/// Whether the orientation assignment induces an acyclic precedence digraph.
pub fn is_acyclic(o: &StickOrientations) -> bool {
    let size = lambda_size(o.n());
    let mut adj = vec![Vec::new(); size];
    for (a, b) in o.chain_edges() {
        adj[a].push(b);
    }
    topological_order(&adj).is_some()
}

/// The super-domain of all tilings whose intersection with every stick is an
/// initial segment of the stick read in its assigned orientation. Requires
/// an acyclic assignment.
pub fn cubillage_csd(o: &StickOrientations) -> Result<SuperDomain> {
    // surface the cycle witness early
    precedence_digraph(o)?;
    let lam = Lambda::get(o.n())?;
    let members: Vec<Tiling> = enumerate_all(o.n())?
        .iter()
        .filter(|t| {
            lam.stick_ranks().iter().enumerate().all(|(s, ranks)| {
                let mut pat = 0u8;
                for (b, &r) in ranks.iter().enumerate() {
                    if t.inv().contains_rank(r as usize) {
                        pat |= 1 << b;
                    }
                }
                match o.orientations()[s] {
                    Orientation::Direct => matches!(pat, 0b0000 | 0b0001 | 0b0011 | 0b0111 | 0b1111),
                    Orientation::Reverse => matches!(pat, 0b0000 | 0b1000 | 0b1100 | 0b1110 | 0b1111),
                }
            })
        })
        .copied()
        .collect();
    SuperDomain::new(o.n(), members)
}

/// The maximal chain of `C(n,3)+1` tilings formed by the prefixes of an
/// admissible linear order.
pub fn chain_from_linear(order: &AdmissibleLinearOrder) -> Vec<Tiling> {
    let n = order.n();
    let mut chain = Vec::with_capacity(order.seq().len() + 1);
    let mut inv = InversionSet::empty(n).expect("n validated");
    chain.push(Tiling::new(inv).expect("empty set is a tiling"));
    for &t in order.seq() {
        inv.insert(t).expect("triple valid for n");
        chain.push(Tiling::new(inv).expect("prefix of an admissible order is a tiling"));
    }
    chain
}
