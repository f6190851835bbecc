//! Tilings as certified inversion sets: the per-stick validity criterion,
//! constructors, restriction, flips, exhaustive enumeration, medians,
//! intervals, and the dense-triple basis.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::invset::InversionSet;
use crate::lambda::{restriction_map, validate_n, Lambda, Stick};
use crate::triple::Triple;

/// The 4-bit stick patterns a tiling may cut out: a prefix of 1s or a
/// suffix of 1s in member order (bit 0 = first member). These are exactly
/// the eight bi-intervals.
const VALID_PATTERNS: u16 = {
    let prefixes = 1 << 0b0000 | 1 << 0b0001 | 1 << 0b0011 | 1 << 0b0111 | 1 << 0b1111;
    let suffixes = 1 << 0b1000 | 1 << 0b1100 | 1 << 0b1110;
    prefixes | suffixes
};

#[inline]
fn pattern_ok(pattern: u8) -> bool {
    VALID_PATTERNS >> pattern & 1 == 1
}

#[inline]
fn stick_pattern(p: &InversionSet, ranks: &[u16; 4]) -> u8 {
    let mut pat = 0u8;
    for (b, &r) in ranks.iter().enumerate() {
        if p.contains_rank(r as usize) {
            pat |= 1 << b;
        }
    }
    pat
}

/// First stick (in lexicographic quadruple order) on which `p` is neither a
/// 1-prefix nor a 1-suffix, or `None` when `p` is a tiling.
pub fn ziegler_witness(p: &InversionSet) -> Option<Stick> {
    let lam = Lambda::get(p.n()).expect("n validated at construction");
    for (s, ranks) in lam.stick_ranks().iter().enumerate() {
        if !pattern_ok(stick_pattern(p, ranks)) {
            return Some(lam.sticks()[s]);
        }
    }
    None
}

pub fn is_tiling(p: &InversionSet) -> bool {
    ziegler_witness(p).is_none()
}

/// An inversion set certified by the per-stick criterion.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling {
    inv: InversionSet,
}

impl Tiling {
    pub fn new(inv: InversionSet) -> Result<Self> {
        match ziegler_witness(&inv) {
            None => Ok(Tiling { inv }),
            Some(stick) => Err(Error::NotATiling(stick)),
        }
    }

    /// The tiling with empty inversion set.
    pub fn standard(n: u8) -> Result<Self> {
        Ok(Tiling { inv: InversionSet::empty(n)? })
    }

    /// The tiling whose inversion set is the whole triple set.
    pub fn anti_standard(n: u8) -> Result<Self> {
        Ok(Tiling { inv: InversionSet::full(n)? })
    }

    pub fn inv(&self) -> &InversionSet {
        &self.inv
    }

    pub fn into_inv(self) -> InversionSet {
        self.inv
    }

    pub fn n(&self) -> u8 {
        self.inv.n()
    }

    /// `|Inv(T)|`.
    pub fn rank(&self) -> usize {
        self.inv.count()
    }

    /// The antipodal tiling: complement of the inversion set. Complementing
    /// turns 1-prefixes into 1-suffixes per stick, so no re-check is needed.
    pub fn opposite(&self) -> Self {
        let inv = self.inv.complement();
        debug_assert!(is_tiling(&inv));
        Tiling { inv }
    }

    /// Reduction to the colors of `K`, relabeled order-preservingly.
    pub fn restrict(&self, subset: &[u8]) -> Result<Tiling> {
        let map = restriction_map(subset, self.n())?;
        let mut inv = InversionSet::empty(subset.len() as u8)?;
        for (small, &big) in map.iter().enumerate() {
            if self.inv.contains_rank(big) {
                inv.insert_rank(small);
            }
        }
        debug_assert!(is_tiling(&inv), "restriction of a tiling is a tiling");
        Ok(Tiling { inv })
    }

    /// Dense triples of the inversion set; empty exactly for the standard tiling.
    pub fn basis(&self) -> Vec<Triple> {
        (2..self.n())
            .filter_map(|j| {
                let t = Triple::ext(j).expect("j >= 2");
                self.inv.contains(t).then_some(t)
            })
            .collect()
    }

    /// Triples whose addition keeps the stick criterion, in lexicographic order.
    pub fn raising_flips(&self) -> Vec<Triple> {
        let lam = Lambda::get(self.n()).expect("n validated");
        let mut out = Vec::new();
        'next: for r in 0..lam.size() {
            if self.inv.contains_rank(r) {
                continue;
            }
            for &(s, pos) in lam.sticks_of(r) {
                let pat = stick_pattern(&self.inv, &lam.stick_ranks()[s as usize]);
                if !pattern_ok(pat | 1 << pos) {
                    continue 'next;
                }
            }
            out.push(lam.unrank(r).expect("rank in range"));
        }
        out
    }

    /// Add one triple; errors unless `t` is a raising flip of `self`.
    pub fn flip_up(&self, t: Triple) -> Result<Tiling> {
        let lam = Lambda::get(self.n())?;
        let r = lam.rank(t)?;
        if self.inv.contains_rank(r) {
            return Err(Error::NotAFlip(t));
        }
        let inv = self.inv.with_rank(r);
        match ziegler_witness(&inv) {
            None => Ok(Tiling { inv }),
            Some(_) => Err(Error::NotAFlip(t)),
        }
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.inv, f)
    }
}

impl fmt::Debug for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tiling(n={}, {})", self.n(), self.inv.to_bitstring())
    }
}

/// The tiling `T(I)` of all triples lying inside the color interval `[a..b]`;
/// the standard tiling when the interval is degenerate.
pub fn interval_tiling(a: u8, b: u8, n: u8) -> Result<Tiling> {
    validate_n(n)?;
    if a < 1 || b > n || a > b {
        return Err(Error::IntervalOutOfRange { a, b, n });
    }
    let lam = Lambda::get(n)?;
    let mut inv = InversionSet::empty(n)?;
    for (r, t) in lam.triples().iter().enumerate() {
        if a <= t.i() && t.k() <= b {
            inv.insert_rank(r);
        }
    }
    debug_assert!(is_tiling(&inv));
    Ok(Tiling { inv })
}

/// Pointwise majority of three pseudo-tilings; lies between each pair.
pub fn median3(p1: &InversionSet, p2: &InversionSet, p3: &InversionSet) -> Result<InversionSet> {
    p1.check_same_n(p2)?;
    p1.check_same_n(p3)?;
    Ok(&(&(p1 & p2) | &(p2 & p3)) | &(p3 & p1))
}

/// All tilings of `Z(n;2)` in canonical order (rank, then bitstring),
/// computed by breadth-first closure from the standard tiling under raising
/// flips and memoized per `n` for the whole process.
pub fn enumerate_all(n: u8) -> Result<Arc<Vec<Tiling>>> {
    validate_n(n)?;
    static CACHE: OnceLock<Mutex<HashMap<u8, Arc<Vec<Tiling>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(all) = cache.lock().expect("enumeration cache poisoned").get(&n) {
        return Ok(all.clone());
    }

    let mut seen: HashSet<InversionSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let start = Tiling::standard(n)?;
    seen.insert(*start.inv());
    queue.push_back(start);
    let mut all = vec![start];
    while let Some(t) = queue.pop_front() {
        for tr in t.raising_flips() {
            let next = t.flip_up(tr).expect("raising flip stays a tiling");
            if seen.insert(*next.inv()) {
                queue.push_back(next);
                all.push(next);
            }
        }
    }
    all.sort_by_key(|t| (t.rank(), *t.inv()));
    let all = Arc::new(all);
    cache
        .lock()
        .expect("enumeration cache poisoned")
        .insert(n, all.clone());
    Ok(all)
}

/// One raising flip: adds `triple` to vertex `from`, yielding vertex `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipEdge {
    pub from: usize,
    pub to: usize,
    pub triple: Triple,
}

/// The flip graph on all tilings of `Z(n;2)`: vertices in canonical order,
/// edges directed from the smaller inversion set to the larger.
pub struct FlipGraph {
    n: u8,
    vertices: Arc<Vec<Tiling>>,
    edges: Vec<FlipEdge>,
    index: HashMap<InversionSet, usize>,
}

impl FlipGraph {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn vertices(&self) -> &[Tiling] {
        &self.vertices
    }

    pub fn edges(&self) -> &[FlipEdge] {
        &self.edges
    }

    pub fn index_of(&self, t: &Tiling) -> Option<usize> {
        self.index.get(t.inv()).copied()
    }

    /// Undirected adjacency lists, vertex index to vertex indices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        adj
    }

    /// DOT form: vertices labeled by bitstring, edges labeled by the flipped triple.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph flips {\n");
        for v in self.vertices.iter() {
            out.push_str(&format!("  \"{}\";\n", v));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[e.from], self.vertices[e.to], e.triple
            ));
        }
        out.push_str("}\n");
        out
    }
}

pub fn flip_graph(n: u8) -> Result<FlipGraph> {
    let vertices = enumerate_all(n)?;
    let index: HashMap<InversionSet, usize> =
        vertices.iter().enumerate().map(|(i, t)| (*t.inv(), i)).collect();
    let mut edges = Vec::new();
    for (from, t) in vertices.iter().enumerate() {
        for tr in t.raising_flips() {
            let next = t.flip_up(tr).expect("raising flip stays a tiling");
            let to = index[next.inv()];
            edges.push(FlipEdge { from, to, triple: tr });
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    Ok(FlipGraph { n, vertices, edges, index })
}

/// All tilings `R` with `T∩T' ⊆ R ⊆ T∪T'`, in canonical order.
pub fn lattice_interval(t: &Tiling, t2: &Tiling) -> Result<Vec<Tiling>> {
    t.inv().check_same_n(t2.inv())?;
    let lo = t.inv() & t2.inv();
    let hi = t.inv() | t2.inv();
    Ok(enumerate_all(t.n())?
        .iter()
        .filter(|r| lo.is_subset(r.inv()) && r.inv().is_subset(&hi))
        .copied()
        .collect())
}

/// All tilings on some shortest path between `t` and `t2` in the undirected
/// flip graph, in canonical order.
pub fn geodesic_interval(t: &Tiling, t2: &Tiling) -> Result<Vec<Tiling>> {
    t.inv().check_same_n(t2.inv())?;
    let graph = flip_graph(t.n())?;
    let adj = graph.adjacency();
    let s = graph.index_of(t).expect("tiling is enumerated");
    let g = graph.index_of(t2).expect("tiling is enumerated");
    let ds = bfs_distances(&adj, s);
    let dg = bfs_distances(&adj, g);
    let total = ds[g];
    Ok(graph
        .vertices()
        .iter()
        .enumerate()
        .filter(|(v, _)| ds[*v] + dg[*v] == total)
        .map(|(_, t)| *t)
        .collect())
}

fn bfs_distances(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Scans every pair of tilings for the interval question: pairs whose
/// lattice interval is exactly the pair itself although they differ in more
/// than one triple. An empty result means two-element intervals only happen
/// for flip-adjacent tilings at this `n` (true for n <= 5; sixteen
/// incomparable pairs exist at n = 6).
pub fn non_flip_minimal_intervals(n: u8) -> Result<Vec<(Tiling, Tiling)>> {
    let all = enumerate_all(n)?;
    let mut out = Vec::new();
    for (a, t) in all.iter().enumerate() {
        for t2 in &all[a + 1..] {
            if (t.inv() ^ t2.inv()).count() == 1 {
                continue;
            }
            let lo = t.inv() & t2.inv();
            let hi = t.inv() | t2.inv();
            let mut between = 0;
            for r in all.iter() {
                if lo.is_subset(r.inv()) && r.inv().is_subset(&hi) {
                    between += 1;
                    if between > 2 {
                        break;
                    }
                }
            }
            if between == 2 {
                out.push((*t, *t2));
            }
        }
    }
    Ok(out)
}
