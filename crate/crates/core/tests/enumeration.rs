//! Enumeration counts, cross-checked against an independent brute-force
//! filter over every bitmask.

use zonotil_core::{enumerate_all, lambda_size, InversionSet, Lambda};

/// Independent oracle: test every subset of the triple set directly against
/// the per-stick prefix-or-suffix rule, without touching the BFS path.
fn brute_force_tilings(n: u8) -> Vec<InversionSet> {
    let lam = Lambda::new(n).unwrap();
    let size = lambda_size(n);
    assert!(size <= 20, "brute force is for small n");
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
    let valid = |pat: u32| matches!(pat, 0b0000 | 0b0001 | 0b0011 | 0b0111 | 0b1111 | 0b1000 | 0b1100 | 0b1110);
    let mut out = Vec::new();
    for mask in 0u32..1 << size {
        let ok = stick_ranks.iter().all(|ranks| {
            let pat = (mask >> ranks[0] & 1)
                | (mask >> ranks[1] & 1) << 1
                | (mask >> ranks[2] & 1) << 2
                | (mask >> ranks[3] & 1) << 3;
            valid(pat)
        });
        if ok {
            let mut s = InversionSet::empty(n).unwrap();
            for r in 0..size {
                if mask >> r & 1 == 1 {
                    s.insert_rank(r);
                }
            }
            out.push(s);
        }
    }
    out
}

#[test]
fn counts_match_brute_force_up_to_n6() {
    let expected = [(3u8, 2usize), (4, 8), (5, 62), (6, 908)];
    for (n, count) in expected {
        let enumerated = enumerate_all(n).unwrap();
        assert_eq!(enumerated.len(), count, "n = {n}");
        let brute = brute_force_tilings(n);
        assert_eq!(brute.len(), count, "brute force, n = {n}");
        let mut from_bfs: Vec<InversionSet> =
            enumerated.iter().map(|t| *t.inv()).collect();
        let mut from_brute = brute;
        from_bfs.sort();
        from_brute.sort();
        assert_eq!(from_bfs, from_brute, "n = {n}");
    }
}

#[test]
fn every_enumerated_set_is_a_tiling() {
    for n in 2..=6 {
        for t in enumerate_all(n).unwrap().iter() {
            assert!(zonotil_core::is_tiling(t.inv()));
        }
    }
}

#[test]
fn enumeration_order_is_deterministic() {
    let a: Vec<String> = enumerate_all(5).unwrap().iter().map(|t| t.to_string()).collect();
    let b: Vec<String> = enumerate_all(5).unwrap().iter().map(|t| t.to_string()).collect();
    assert_eq!(a, b);
    for w in a.windows(2) {
        assert!(w[0] != w[1]);
    }
}

#[test]
fn cap_is_enforced() {
    assert!(enumerate_all(0).is_err());
    assert!(enumerate_all(zonotil_core::max_n() + 1).is_err());
}
