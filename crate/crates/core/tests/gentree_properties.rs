mod common;

use std::collections::BTreeSet;

use common::*;
use hrd::counting::count_hrd;
use hrd::gentree::{enumerate_trees, is_hrd, is_ihrd};
use hrd::{Error, GenTree, OrderK};
use proptest::prelude::*;

fn order(k: usize) -> OrderK {
    OrderK::new(k).unwrap()
}

#[test]
fn membership_matches_definition() {
    for k in 2..=7 {
        let mut oracle = HrdOracle::new(k);
        for n in 1..=7 {
            for p in all_perms(n) {
                assert_eq!(
                    is_hrd(&p, order(k)),
                    oracle.contains(p.values()),
                    "{} k={k}",
                    p.compact()
                );
            }
        }
    }
}

#[test]
fn membership_is_monotone_in_k() {
    for n in 1..=7 {
        for p in all_perms(n) {
            for k in 2..7 {
                if is_hrd(&p, order(k)) {
                    assert!(is_hrd(&p, order(k + 1)), "{}", p.compact());
                }
            }
            assert_eq!(
                is_hrd(&p, order(n.max(2))),
                p.is_baxter(),
                "{}",
                p.compact()
            );
        }
    }
}

#[test]
fn irreducible_means_new_at_its_own_order() {
    for n in 2..=8 {
        for p in all_perms(n).into_iter().filter(is_ihrd) {
            assert!(is_hrd(&p, order(n)));
            if n > 2 {
                assert!(!is_hrd(&p, order(n - 1)), "{}", p.compact());
            }
        }
    }
}

#[test]
fn trees_roundtrip() {
    for n in 1..=7 {
        for p in all_perms(n).into_iter().filter(|p| p.is_baxter()) {
            let t = GenTree::tree_of_perm(&p, order(7)).unwrap();
            t.validate(Some(order(7))).unwrap();
            assert_eq!(t.leaves(), n);
            assert_eq!(t.perm_of_tree().unwrap(), p);
            assert_eq!(t.to_string().parse::<GenTree>().unwrap(), t);
            let tight = order(t.order().max(2));
            assert!(GenTree::tree_of_perm(&p, tight).is_ok());
            if t.order() > 2 {
                assert!(matches!(
                    GenTree::tree_of_perm(&p, order(t.order() - 1)),
                    Err(Error::ExceedsOrder { .. })
                ));
            }
        }
    }
    assert!(matches!(
        GenTree::tree_of_perm(&perm("2413"), order(5)),
        Err(Error::NotBaxter(_))
    ));
}

#[test]
fn enumeration_is_the_image_of_the_hierarchy() {
    for k in 2..=7 {
        for n in 1..=7 {
            let trees = enumerate_trees(order(k), n).unwrap();
            let perms: BTreeSet<_> = trees.iter().map(|t| t.perm_of_tree().unwrap()).collect();
            assert_eq!(
                perms.len(),
                trees.len(),
                "k={k} n={n}: two trees share a permutation"
            );
            let members: BTreeSet<_> = all_perms(n)
                .into_iter()
                .filter(|p| is_hrd(p, order(k)))
                .collect();
            assert_eq!(perms, members, "k={k} n={n}");
            assert_eq!(
                num_bigint::BigUint::from(trees.len()),
                count_hrd(order(k), n).unwrap()
            );
            for t in &trees {
                t.validate(Some(order(k))).unwrap();
                assert_eq!(
                    &GenTree::tree_of_perm(&t.perm_of_tree().unwrap(), order(k)).unwrap(),
                    t
                );
            }
        }
    }
}

#[test]
fn tree_floorplans_realize_the_permutation() {
    for n in 1..=7 {
        for t in enumerate_trees(order(7), n).unwrap() {
            let f = t.floorplan_of_tree().unwrap();
            assert!(f.is_valid(), "{t}");
            assert_eq!(f.len(), n);
            assert_eq!(f.fp2bp().unwrap(), t.perm_of_tree().unwrap(), "{t}");
        }
    }
}

#[test]
fn malformed_trees_are_rejected() {
    let leaf = || GenTree::Leaf;
    let twelve = perm("12");
    let inner = GenTree::node(twelve.clone(), vec![leaf(), leaf()]).unwrap();
    assert!(GenTree::node(twelve.clone(), vec![inner.clone(), leaf()]).is_err());
    assert!(GenTree::node(twelve.clone(), vec![leaf(), inner]).is_ok());
    assert!(GenTree::node(twelve, vec![leaf()]).is_err());
    assert!(GenTree::node(perm("2413"), vec![leaf(), leaf(), leaf(), leaf()]).is_err());
    assert!(GenTree::node(perm("123"), vec![leaf(), leaf(), leaf()]).is_err());
    let wheel = GenTree::node(perm("41352"), (0..5).map(|_| leaf()).collect()).unwrap();
    assert!(matches!(
        wheel.validate(Some(order(4))),
        Err(Error::ExceedsOrder { .. })
    ));
}

#[test]
fn text_format() {
    let t: GenTree = "(41352 (12 . .) . . . .)".parse().unwrap();
    assert_eq!(t.perm_of_tree().unwrap(), perm("451362"));
    assert_eq!(t.to_string(), "(41352 (12 . .) . . . .)");
    for bad in [
        "",
        "(",
        "(12 .)",
        "(12 . . .)",
        "(12 . .) .",
        "(1x2 . .)",
        "((12 . .) . .)",
    ] {
        assert!(bad.parse::<GenTree>().is_err(), "{bad:?}");
    }
    match "(12 .\n  (21 . ?))".parse::<GenTree>() {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 9)),
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn random_permutations_agree_with_definition(
        v in (1..=9usize).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()),
        k in 2..=9usize,
    ) {
        let p = hrd::Permutation::new(v.clone()).unwrap();
        prop_assert_eq!(is_hrd(&p, order(k)), HrdOracle::new(k).contains(&v));
    }
}
