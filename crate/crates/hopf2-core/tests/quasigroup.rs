//! Quasigroup validation, nucleus, associator, quasiassociativity and the
//! 3-cocycle condition.

use hopf2_core::cayley::{build_gn, cayley_dickson_cochain};
use hopf2_core::quasigroup::*;
use hopf2_core::Error;
use proptest::prelude::*;

fn gn(n: usize) -> FiniteQuasigroup {
    build_gn(&cayley_dickson_cochain(n).unwrap()).unwrap()
}

/// The first non-associative loop of order 5 with two-sided inverses in
/// lexicographic order of reduced Latin squares (found by exhaustive search).
fn loop5() -> FiniteQuasigroup {
    let t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
    let labels = (0..5).map(|i| i.to_string()).collect();
    FiniteQuasigroup::from_fn(labels, 0, |a, b| t[a][b]).unwrap()
}

#[test]
fn cyclic_group_is_valid_and_associative() {
    let z4 = FiniteQuasigroup::cyclic(4).unwrap();
    assert!(z4.validate().is_empty());
    assert!(z4.is_associative());
    assert_eq!(z4.nucleus(), vec![0, 1, 2, 3]);
    let a = z4.associator().unwrap();
    assert_eq!(a.image, vec![0]);
    assert!(z4.is_quasiassociative());
    assert!(z4.cocycle_check().unwrap().holds);
}

#[test]
fn repeated_row_entry_is_a_latin_square_violation() {
    let labels: Vec<String> = (0..3).map(|i| i.to_string()).collect();
    let q = FiniteQuasigroup::new(labels, vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]], 0, vec![0, 2, 1]).unwrap();
    let v = q.validate();
    assert!(v.iter().any(|x| matches!(x, Violation::LatinSquareRow { .. })), "{v:?}");
}

#[test]
fn shape_errors() {
    let labels: Vec<String> = vec!["a".into(), "a".into()];
    assert!(matches!(
        FiniteQuasigroup::new(labels, vec![vec![0, 1], vec![1, 0]], 0, vec![0, 1]),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn nucleus_table() {
    assert_eq!(gn(1).nucleus().len(), 4);
    assert_eq!(gn(2).nucleus().len(), 8);
    let g3 = gn(3);
    let labels: Vec<&str> = g3.nucleus().iter().map(|&a| g3.label(a)).collect();
    assert_eq!(labels, ["e[a=000,i=0]", "e[a=000,i=1]"]);
}

#[test]
fn associator_of_g2_is_trivial_and_of_g3_is_a_sign() {
    assert_eq!(gn(2).associator().unwrap().image, vec![0]);
    let g3 = gn(3);
    let a = g3.associator().unwrap();
    assert_eq!(a.image, vec![0, 1]);
    assert!(a.in_nucleus);
    for g in 0..16 {
        for h in 0..16 {
            for k in 0..16 {
                let lhs = g3.mul(g, g3.mul(h, k));
                assert_eq!(lhs, g3.mul(a.beta(g, h, k), g3.mul(g3.mul(g, h), k)));
            }
        }
    }
}

#[test]
fn order_five_loop_is_not_quasiassociative() {
    let q = loop5();
    assert!(!q.is_associative());
    assert_eq!(q.nucleus(), vec![0]);
    assert_eq!(q.associator().unwrap().image, vec![0, 1, 2, 3, 4]);
    assert!(!q.is_quasiassociative());
    assert!(matches!(q.cocycle_check(), Err(Error::PreconditionFailed(_))));
}

#[test]
fn quasiassociativity_and_cocycle_for_gn() {
    for n in 1..=3 {
        let q = gn(n);
        let qa = q.quasiassociativity().unwrap();
        assert!(qa.holds(), "n={n}: {qa:?}");
        assert_eq!(qa.bracketing_mismatch, None);
        let r = q.cocycle_check().unwrap();
        assert!(r.holds, "n={n}");
        assert_eq!(r.checked, q.order().pow(4));
    }
}

#[test]
fn nucleus_is_a_subgroup() {
    for n in 1..=3 {
        let q = gn(n);
        let nuc = q.nucleus();
        for &a in &nuc {
            assert!(nuc.contains(&q.inv(a)));
            for &b in &nuc {
                assert!(nuc.contains(&q.mul(a, b)));
            }
        }
    }
}

#[test]
fn catalan_numbers() {
    let counts: Vec<usize> = (1..=5).map(|n| product_trees(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 5, 14, 42]);
    assert!(matches!(product_trees(6), Err(Error::SizeLimit(_))));
    for t in product_trees(4).unwrap() {
        assert_eq!(t.leaves(), 5);
    }
}

#[test]
fn product_tree_display() {
    let trees = product_trees(2).unwrap();
    let shown: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
    assert_eq!(shown.len(), 2);
    assert_ne!(shown[0], shown[1]);
}

#[test]
fn nucleus_passthrough() {
    let z3 = FiniteQuasigroup::cyclic(3).unwrap();
    assert!(z3.nucleus_passthrough_check(3).unwrap().holds);
    let g3 = gn(3);
    let r2 = g3.nucleus_passthrough_check(2).unwrap();
    assert!(r2.holds);
    let r3 = g3.nucleus_passthrough_check(3).unwrap();
    assert!(r3.holds);
    assert!(r3.hypotheses > 0);
    assert!(matches!(g3.nucleus_passthrough_check(4), Err(Error::SizeLimit(_))));
}

proptest! {
    #[test]
    fn associator_reproduces_products(n in 1usize..=3, g in 0usize..16, h in 0usize..16, k in 0usize..16) {
        let q = gn(n);
        let (g, h, k) = (g % q.order(), h % q.order(), k % q.order());
        let a = q.associator().unwrap();
        prop_assert_eq!(q.mul(g, q.mul(h, k)), q.mul(a.beta(g, h, k), q.mul(q.mul(g, h), k)));
    }

    #[test]
    fn inverse_laws_hold_in_gn(n in 0usize..=4, g in 0usize..32, h in 0usize..32) {
        let q = gn(n);
        let (g, h) = (g % q.order(), h % q.order());
        prop_assert_eq!(q.mul(q.inv(g), q.mul(g, h)), h);
        prop_assert_eq!(q.mul(q.mul(h, q.inv(g)), g), h);
    }
}
