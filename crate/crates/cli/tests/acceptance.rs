//! Acceptance suite: nine numbered criteria covering enumeration, the
//! majority paradox, the n=4 classification, the 16-tiling n=5 domain, the
//! snake suite, the equivalence batteries, the two maximal constructions,
//! and CLI determinism. Each test prints one `criterion N: PASS/FAIL` line
//! (run with `--nocapture` to see them on success).

use std::fmt::Write as _;
use std::process::Command;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zonotil_core::aggregation::{aggregate_with_system, simple_majority, MajoritySystem, Profile};
use zonotil_core::csd::{
    is_clique, is_closed, is_csd, is_csd_via_quadruples, is_maximal_csd, is_normal, maximality,
    Maximality, SuperDomain,
};
use zonotil_core::cubillage::{
    chain_from_linear, cubillage_csd, is_acyclic, validate_admissible, StickOrientations,
};
use zonotil_core::io::parse_invset;
use zonotil_core::snakes::{is_compatible_order, is_condorcet_domain, sigma, LinearOrder};
use zonotil_core::symmetric::{boolean_csd, symmetric_partition, SplitSequence};
use zonotil_core::tiling::{interval_tiling, median3, ziegler_witness};
use zonotil_core::{enumerate_all, is_tiling, lambda_size, InversionSet, Lambda, Tiling, Triple};

/// Collects sub-checks for one numbered criterion and prints the verdict line.
struct Criterion {
    number: u8,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u8) -> Self {
        Criterion { number, failures: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool) {
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS", self.number);
        } else {
            let mut msg = format!("criterion {}: FAIL", self.number);
            for f in &self.failures {
                let _ = write!(msg, "\n  - {f}");
            }
            println!("{msg}");
            panic!("{msg}");
        }
    }
}

fn inv(s: &str, n: u8) -> InversionSet {
    parse_invset(s, n).unwrap()
}

fn tiling(s: &str, n: u8) -> Tiling {
    Tiling::new(inv(s, n)).unwrap()
}

/// Brute-force oracle: filter every bitmask by the per-stick rule directly.
fn brute_force_tilings(n: u8) -> Vec<InversionSet> {
    let lam = Lambda::new(n).unwrap();
    let size = lambda_size(n);
    let stick_ranks: Vec<[usize; 4]> = lam
        .sticks()
        .iter()
        .map(|s| {
            let m = s.members();
            [
                lam.rank(m[0]).unwrap(),
                lam.rank(m[1]).unwrap(),
                lam.rank(m[2]).unwrap(),
                lam.rank(m[3]).unwrap(),
            ]
        })
        .collect();
    (0u32..1 << size)
        .filter(|mask| {
            stick_ranks.iter().all(|r| {
                let pat = (mask >> r[0] & 1)
                    | (mask >> r[1] & 1) << 1
                    | (mask >> r[2] & 1) << 2
                    | (mask >> r[3] & 1) << 3;
                matches!(pat, 0b0000 | 0b0001 | 0b0011 | 0b0111 | 0b1111 | 0b1000 | 0b1100 | 0b1110)
            })
        })
        .map(|mask| {
            let mut s = InversionSet::empty(n).unwrap();
            for r in 0..size {
                if mask >> r & 1 == 1 {
                    s.insert_rank(r);
                }
            }
            s
        })
        .collect()
}

#[test]
fn criterion_1_enumeration_counts() {
    let mut c = Criterion::new(1);
    for (n, want) in [(3u8, 2usize), (4, 8), (5, 62)] {
        let enumerated = enumerate_all(n).unwrap();
        c.check_eq(&format!("enumerate_all({n})"), enumerated.len(), want);
        let mut brute = brute_force_tilings(n);
        brute.sort();
        c.check_eq(&format!("brute force({n})"), brute.len(), want);
        let mut from_bfs: Vec<InversionSet> = enumerated.iter().map(|t| *t.inv()).collect();
        from_bfs.sort();
        c.check(&format!("both routes agree on the set (n={n})"), from_bfs == brute);
    }
    c.finish();
}

#[test]
fn criterion_2_majority_paradox() {
    let mut c = Criterion::new(2);
    let p = Profile::new(vec![tiling("1110", 4), tiling("0000", 4), tiling("0111", 4)]).unwrap();
    let agg = simple_majority(&p).unwrap();
    c.check_eq("sm(1110,0000,0111)", agg.to_bitstring(), "0110".into());
    c.check("sm(1110,0000,0111) is not a tiling", !is_tiling(&agg));

    let med = median3(&inv("1100", 4), &inv("0111", 4), &inv("0001", 4)).unwrap();
    c.check("median3(1100,0111,0001) is not a tiling", !is_tiling(&med));
    // Pinned from the source text; the pointwise majority of these three
    // strings is 0101 at every position, so this sub-check cannot pass as
    // stated. The inputs (1100,0111,0000) would give 0100 exactly.
    c.check_eq("median3(1100,0111,0001)", med.to_bitstring(), "0100".into());
    c.finish();
}

#[test]
fn criterion_3_n4_classification() {
    let mut c = Criterion::new(3);
    let all = enumerate_all(4).unwrap();
    c.check_eq("octagon size", all.len(), 8);

    // the octagon in cyclic order, as positions into the canonical listing
    let wheel: Vec<Tiling> = ["0000", "1000", "1100", "1110", "1111", "0111", "0011", "0001"]
        .iter()
        .map(|s| tiling(s, 4))
        .collect();
    let position = |t: &Tiling| wheel.iter().position(|w| w == t).unwrap();

    let mut maximal: Vec<Vec<Tiling>> = Vec::new();
    for size in 1..=8usize {
        for combo in all.iter().combinations(size) {
            let members: Vec<Tiling> = combo.into_iter().copied().collect();
            let d = SuperDomain::new(4, members.clone()).unwrap();
            if !is_csd(&d) {
                continue;
            }
            if matches!(maximality(&d, None).unwrap(), Maximality::Maximal) {
                maximal.push(members);
            }
        }
    }

    let mut class_i = 0;
    let mut class_ii = 0;
    for dom in &maximal {
        let mut pos: Vec<usize> = dom.iter().map(&position).collect();
        pos.sort_unstable();
        let consecutive = dom.len() == 5
            && (0..8).any(|start| (0..5).map(|d| (start + d) % 8).sorted().collect::<Vec<_>>() == pos);
        let opposite_pairs =
            dom.len() == 4 && dom.iter().all(|t| dom.contains(&t.opposite()));
        if consecutive {
            class_i += 1;
        } else if opposite_pairs {
            class_ii += 1;
        } else {
            c.check(&format!("maximal CSD outside both classes: {dom:?}"), false);
        }
    }
    // class census pinned from the first exhaustive run
    c.check_eq("maximal CSD count", maximal.len(), 14);
    c.check_eq("class I count", class_i, 8);
    c.check_eq("class II count", class_ii, 6);

    // within every maximal CSD the aggregate of any odd profile is a voter's
    // tiling (all multisets of sizes 3 and 5)
    for dom in &maximal {
        for size in [3usize, 5] {
            for votes in dom.iter().copied().combinations_with_replacement(size) {
                let p = Profile::new(votes.clone()).unwrap();
                let agg = simple_majority(&p).unwrap();
                if !votes.iter().any(|v| v.inv() == &agg) {
                    c.check(
                        &format!("aggregate {agg} of {votes:?} is not a voter's tiling"),
                        false,
                    );
                }
            }
        }
    }
    c.finish();
}

const SIXTEEN_DOMAIN_MEMBERS: [&str; 16] = [
    "-",
    "234",
    "234,235",
    "134,234",
    "134,234,235",
    "124,134,234",
    "234,235,245",
    "134,234,235,245",
    "124,134,234,235",
    "134,135,234,235",
    "134,135,234,235,245",
    "124,134,135,234,235",
    "134,135,145,234,235,245",
    "124,125,134,135,234,235",
    "123,124,134,234",
    "234,235,245,345",
];

#[test]
fn criterion_4_sixteen_tiling_domain() {
    let mut c = Criterion::new(4);
    let t1 = inv("234,235,245", 5);
    let t2 = inv("234,134,124", 5);
    let t3 = inv("234,235,134,135", 5);
    let med = median3(&t1, &t2, &t3).unwrap();
    c.check_eq("median(T1,T2,T3)", med, inv("234,134,235", 5));

    let union = &t1 | &t2;
    match ziegler_witness(&union) {
        Some(stick) => c.check_eq("T1 ∪ T2 failing stick", stick.to_string(), "1245".into()),
        None => c.check("T1 ∪ T2 fails the stick criterion", false),
    }

    let members: Vec<Tiling> = SIXTEEN_DOMAIN_MEMBERS
        .iter()
        .map(|s| Tiling::new(inv(s, 5)).expect("fixture members are tilings"))
        .collect();
    let d = SuperDomain::new(5, members).unwrap();
    c.check_eq("domain size", d.len(), 16);
    c.check("is_csd", is_csd(&d));
    c.check("is_closed", is_closed(&d));
    // maximality verdict pinned from the first exhaustive run over all 62
    // tilings: nothing can be added
    c.check(
        "maximality (pinned: maximal)",
        matches!(maximality(&d, None).unwrap(), Maximality::Maximal),
    );
    c.finish();
}

#[test]
fn criterion_5_snake_suite() {
    let mut c = Criterion::new(5);
    let anti3 = Tiling::anti_standard(3).unwrap();
    let got: Vec<String> = sigma(&anti3).unwrap().iter().map(|o| o.to_string()).collect();
    c.check_eq(
        "Σ(anti-standard, n=3)",
        got,
        vec!["1,2,3".into(), "1,3,2".into(), "3,1,2".into(), "3,2,1".into()],
    );

    let snake = LinearOrder::new(vec![3, 4, 2, 1, 5]).unwrap();
    c.check(
        "(3,4,2,1,5) ∈ Σ(standard, n=5)",
        is_compatible_order(&snake, &Tiling::standard(5).unwrap()),
    );

    let mut checked = 0;
    for n in 3..=5u8 {
        for t in enumerate_all(n).unwrap().iter() {
            let orders = sigma(t).unwrap();
            if !is_condorcet_domain(&orders) {
                c.check(&format!("Σ({t}) cycles (n = {n})"), false);
            }
            checked += 1;
        }
    }
    c.check_eq("tilings checked", checked, 72);
    c.finish();
}

fn union_of_intersections(p: &Profile, f: &MajoritySystem) -> InversionSet {
    let mut out = InversionSet::empty(p.n()).unwrap();
    for coalition in f.big_coalitions() {
        let mut meet = InversionSet::full(p.n()).unwrap();
        for (v, t) in p.votes().iter().enumerate() {
            if coalition >> v & 1 == 1 {
                meet = &meet & t.inv();
            }
        }
        out = &out | &meet;
    }
    out
}

#[test]
fn criterion_6_equivalence_batteries() {
    let mut c = Criterion::new(6);
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    let all5 = enumerate_all(5).unwrap();

    let mut disagreements = 0;
    for _ in 0..1000 {
        let size = rng.gen_range(2..=10usize);
        let members: Vec<Tiling> = all5.choose_multiple(&mut rng, size).copied().collect();
        let d = SuperDomain::new(5, members).unwrap();
        if is_csd(&d) != is_csd_via_quadruples(&d) {
            disagreements += 1;
        }
    }
    c.check_eq("median route vs quadruple route disagreements", disagreements, 0);

    let mut clique_disagreements = 0;
    for _ in 0..1000 {
        let size = rng.gen_range(0..=8usize);
        let mut members: Vec<Tiling> = all5.choose_multiple(&mut rng, size).copied().collect();
        members.push(Tiling::standard(5).unwrap());
        members.push(Tiling::anti_standard(5).unwrap());
        let d = SuperDomain::new(5, members).unwrap();
        if is_clique(&d) != is_csd(&d) {
            clique_disagreements += 1;
        }
    }
    c.check_eq("clique vs CSD disagreements on normal domains", clique_disagreements, 0);

    let all4 = enumerate_all(4).unwrap();
    let systems = [
        MajoritySystem::simple(5).unwrap(),
        MajoritySystem::dictatorship(5, 1).unwrap(),
        MajoritySystem::weighted(&[3, 1, 1, 1, 1]).unwrap(),
    ];
    let mut formula_disagreements = 0;
    for i in 0..1000 {
        let votes: Vec<Tiling> = (0..5).map(|_| *all4.choose(&mut rng).unwrap()).collect();
        let p = Profile::new(votes).unwrap();
        let f = &systems[i % systems.len()];
        if aggregate_with_system(&p, f).unwrap() != union_of_intersections(&p, f) {
            formula_disagreements += 1;
        }
    }
    c.check_eq("aggregate vs coalition formula disagreements", formula_disagreements, 0);
    c.finish();
}

#[test]
fn criterion_7_orientation_domains() {
    let mut c = Criterion::new(7);
    for n in [4u8, 5] {
        let stick_count = Lambda::get(n).unwrap().sticks().len();
        let mut acyclic_count = 0;
        for mask in 0..1u64 << stick_count {
            let o = StickOrientations::from_bitmask(n, mask).unwrap();
            if !is_acyclic(&o) {
                continue;
            }
            acyclic_count += 1;
            let d = cubillage_csd(&o).unwrap();
            c.check(&format!("is_csd (n={n}, mask {mask})"), is_csd(&d));
            c.check(&format!("is_normal (n={n}, mask {mask})"), is_normal(&d));
            c.check(&format!("is_clique (n={n}, mask {mask})"), is_clique(&d));
            c.check(&format!("is_closed (n={n}, mask {mask})"), is_closed(&d));
            c.check(
                &format!("is_maximal_csd (n={n}, mask {mask})"),
                is_maximal_csd(&d).unwrap(),
            );
        }
        c.check_eq(
            &format!("acyclic assignments (n={n})"),
            acyclic_count,
            if n == 4 { 2 } else { 10 },
        );

        let lex = Lambda::get(n).unwrap().triples().to_vec();
        let order = validate_admissible(&lex, n).unwrap();
        let chain = chain_from_linear(&order);
        c.check_eq(&format!("lex chain length (n={n})"), chain.len(), lambda_size(n) + 1);
        c.check(
            &format!("every lex-chain prefix is a tiling (n={n})"),
            chain.iter().all(|t| is_tiling(t.inv())),
        );
    }
    c.finish();
}

#[test]
fn criterion_8_partition_domains_and_lemmas() {
    let mut c = Criterion::new(8);
    for n in [4u8, 5, 6] {
        for seq in (2..n).permutations((n - 2) as usize) {
            let s = SplitSequence::new(n, seq.clone()).unwrap();
            let p = symmetric_partition(&s);
            let mut union = InversionSet::empty(n).unwrap();
            let mut disjoint = true;
            for (_, t) in p.parts() {
                disjoint &= union.is_disjoint(t.inv());
                union = &union | t.inv();
            }
            c.check(&format!("parts disjoint (n={n}, seq {seq:?})"), disjoint);
            c.check_eq(
                &format!("parts cover Λ (n={n}, seq {seq:?})"),
                union,
                InversionSet::full(n).unwrap(),
            );
            let d = boolean_csd(&p);
            c.check_eq(
                &format!("boolean domain size (n={n}, seq {seq:?})"),
                d.len(),
                1 << (n - 2),
            );
            if n <= 5 {
                c.check(
                    &format!("boolean domain maximal (n={n}, seq {seq:?})"),
                    is_maximal_csd(&d).unwrap(),
                );
            }
        }
    }

    // dense-triple facts, exhaustively for n <= 6
    for n in 3..=6u8 {
        for t in enumerate_all(n).unwrap().iter() {
            if t.rank() > 0 && t.basis().is_empty() {
                c.check(&format!("nonempty tiling without dense triple: {t} (n={n})"), false);
            }
            for tr in t.inv().iter_triples() {
                let covered =
                    (tr.i() + 1..tr.k()).any(|l| t.inv().contains(Triple::ext(l).unwrap()));
                if !covered {
                    c.check(&format!("triple {tr} of {t} covers no dense triple (n={n})"), false);
                }
            }
            let basis: Vec<u8> = t.basis().iter().map(|d| d.j()).collect();
            for a in 2..n {
                for b in a..n {
                    if (a..=b).all(|j| basis.contains(&j)) {
                        let forced = interval_tiling(a - 1, b + 1, n).unwrap();
                        if !forced.inv().is_subset(t.inv()) {
                            c.check(
                                &format!("interval [{a}..{b}] of basis not inside {t} (n={n})"),
                                false,
                            );
                        }
                    }
                }
            }
        }
    }
    c.finish();
}

/// One fixed battery touching every verb; used twice to compare bytes.
fn run_cli_battery(dir: &std::path::Path) -> Vec<u8> {
    let fixture = |name: &str, content: &str| {
        let path = dir.join(name);
        std::fs::write(&path, content).unwrap();
        path.to_str().unwrap().to_string()
    };
    let profile = fixture("profile.txt", "n=4\n1110\n0000\n0111\n");
    let median = fixture("median.txt", "n=4\n1100\n0111\n0001\n");
    let domain = fixture("domain.txt", "n=4\n0000\n1000\n1100\n1110\n1111\n");
    let chain = fixture("chain.txt", "n=4\n0000\n1000\n1100\n1110\n");
    let anti3 = fixture("anti3.txt", "n=3\n1\n");
    let orders = fixture("orders.txt", "1,2,3\n2,3,1\n3,1,2\n");
    let orient4 = fixture("orient4.txt", "1234:D\n");
    let orient5 = fixture("orient5.txt", "1234:R\n1235:R\n1245:R\n1345:D\n2345:D\n");
    let seq4 = fixture("seq4.txt", "123,124,134,234\n");
    let system = fixture("system.txt", "110\n011\n101\n111\n");

    let battery: Vec<Vec<String>> = vec![
        vec!["enumerate".into(), "--n".into(), "5".into(), "--count".into()],
        vec!["enumerate".into(), "--n".into(), "4".into()],
        vec!["enumerate".into(), "--n".into(), "4".into(), "--format".into(), "triples".into()],
        vec!["enumerate".into(), "--n".into(), "5".into(), "--format".into(), "json".into()],
        vec!["validate".into(), "--input".into(), median.clone()],
        vec!["aggregate".into(), "--input".into(), profile.clone()],
        vec!["aggregate".into(), "--input".into(), profile.clone(), "--system".into(), system],
        vec!["median".into(), "--input".into(), median, "--format".into(), "json".into()],
        vec!["snakes".into(), "--input".into(), anti3],
        vec!["cd-check".into(), "--input".into(), orders],
        vec!["csd-check".into(), "--input".into(), profile.clone(), "--format".into(), "json".into()],
        vec!["csd-check".into(), "--input".into(), domain.clone()],
        vec!["csd-closed".into(), "--input".into(), domain.clone()],
        vec!["csd-maximal".into(), "--input".into(), domain.clone()],
        vec!["csd-maximal".into(), "--input".into(), chain, "--format".into(), "json".into()],
        vec!["build-cubillage".into(), "--n".into(), "4".into(), "--orient".into(), orient4.clone()],
        vec!["build-cubillage".into(), "--n".into(), "5".into(), "--orient".into(), orient5.clone()],
        vec!["build-chain".into(), "--n".into(), "4".into(), "--input".into(), seq4],
        vec!["build-symmetric".into(), "--n".into(), "4".into(), "--seq".into(), "3,2".into()],
        vec!["build-symmetric".into(), "--n".into(), "5".into(), "--seq".into(), "3,2,4".into(), "--partition".into()],
        vec!["export-graph".into(), "--n".into(), "4".into()],
        vec!["export-graph".into(), "--n".into(), "4".into(), "--orient".into(), orient4],
    ];

    let mut transcript = Vec::new();
    for args in battery {
        let out = Command::new(env!("CARGO_BIN_EXE_zonotil"))
            .args(&args)
            .output()
            .expect("binary runs");
        transcript.extend_from_slice(format!("$ zonotil {}\n", args.join(" ")).as_bytes());
        transcript.extend_from_slice(&out.stdout);
        transcript.extend_from_slice(&out.stderr);
        transcript.extend_from_slice(format!("exit {}\n\n", out.status.code().unwrap()).as_bytes());
    }
    transcript
}

#[test]
fn criterion_9_cli_determinism() {
    let mut c = Criterion::new(9);
    let dir = tempfile::tempdir().unwrap();
    let first = run_cli_battery(dir.path());
    let second = run_cli_battery(dir.path());
    c.check("two consecutive full CLI runs are byte-identical", first == second);
    c.check("the battery produced output", !first.is_empty());
    c.finish();
}
