//! Cross-module properties of compatible orders: restriction consistency,
//! behaviour under opposites, and the Condorcet-domain guarantee.

use itertools::Itertools;
use zonotil_core::snakes::{is_compatible_order, is_condorcet_domain, sigma, LinearOrder};
use zonotil_core::{enumerate_all, Tiling};

#[test]
fn sigma_is_a_condorcet_domain_for_every_tiling() {
    for n in 3..=5u8 {
        for t in enumerate_all(n).unwrap().iter() {
            let orders = sigma(t).unwrap();
            assert!(orders.contains(&LinearOrder::identity(n)));
            assert!(orders.contains(&LinearOrder::reversal(n)));
            assert!(is_condorcet_domain(&orders), "n = {n}, tiling {t}");
        }
    }
}

#[test]
fn membership_restricts_to_color_triples() {
    for n in 4..=5u8 {
        let triples: Vec<Vec<u8>> = (1..=n).combinations(3).collect();
        for t in enumerate_all(n).unwrap().iter() {
            for order in sigma(t).unwrap() {
                for k in &triples {
                    let restricted_order = order.restrict(k).unwrap();
                    let restricted_tiling = t.restrict(k).unwrap();
                    assert!(
                        is_compatible_order(&restricted_order, &restricted_tiling),
                        "n = {n}, tiling {t}, order {order}, K = {k:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn sigma_of_opposite_is_reversal_of_sigma() {
    for n in 3..=5u8 {
        for t in enumerate_all(n).unwrap().iter() {
            let mut reversed: Vec<LinearOrder> =
                sigma(t).unwrap().into_iter().map(|o| o.reversed()).collect();
            reversed.sort();
            let mut opposite = sigma(&t.opposite()).unwrap();
            opposite.sort();
            assert_eq!(reversed, opposite, "n = {n}, tiling {t}");
        }
    }
}

#[test]
fn sigma_cap_is_enforced() {
    assert!(sigma(&Tiling::standard(9).unwrap()).is_ok());
    assert!(sigma(&Tiling::standard(10).unwrap()).is_err());
}

/// The largest compatible-order domain over all tilings hits the known
/// maximum Condorcet-domain sizes 4, 9, 20, 45 for n = 3..6.
#[test]
fn sigma_size_extremes() {
    let extremes: Vec<(usize, usize)> = (3..=6u8)
        .map(|n| {
            let sizes: Vec<usize> = enumerate_all(n)
                .unwrap()
                .iter()
                .map(|t| sigma(t).unwrap().len())
                .collect();
            (
                *sizes.iter().min().unwrap(),
                *sizes.iter().max().unwrap(),
            )
        })
        .collect();
    assert_eq!(extremes, [(4, 4), (7, 9), (11, 20), (16, 45)]);
}
