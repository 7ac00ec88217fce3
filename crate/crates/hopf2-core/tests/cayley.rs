//! Cayley–Dickson cochains, the quasigroups `G_n`, and the 3-cocycle `ψ`.

use hopf2_core::cayley::*;
use hopf2_core::Error;

/// Sign tables produced by an independent nested-pair Cayley–Dickson
/// implementation with the same doubling formula.
const F2: [[i8; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]];
const F3: [[i8; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, -1, 1],
    [1, -1, -1, 1, 1, 1, -1, -1],
    [1, 1, -1, -1, 1, -1, 1, -1],
    [1, -1, -1, -1, -1, 1, 1, 1],
    [1, 1, -1, 1, -1, -1, -1, 1],
    [1, 1, 1, -1, -1, 1, -1, -1],
    [1, -1, 1, 1, -1, -1, 1, -1],
];

#[test]
fn complex_numbers() {
    let f = cayley_dickson_cochain(1).unwrap();
    assert_eq!(f.rows(), vec![vec![1, 1], vec![1, -1]]);
}

#[test]
fn quaternion_and_octonion_tables_match_oracle() {
    let f2 = cayley_dickson_cochain(2).unwrap();
    assert_eq!(f2.rows(), F2.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    assert_eq!(f2.value(0b01, 0b10), 1);
    assert_eq!(f2.value(0b10, 0b01), -1);
    let f3 = cayley_dickson_cochain(3).unwrap();
    assert_eq!(f3.rows(), F3.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    assert!((1..8).all(|a| f3.value(a, a) == -1));
}

#[test]
fn size_limit_and_trivial_case() {
    assert!(matches!(cayley_dickson_cochain(5), Err(Error::SizeLimit(_))));
    let f0 = cayley_dickson_cochain(0).unwrap();
    assert_eq!(f0.size(), 1);
    assert_eq!(build_gn(&f0).unwrap().order(), 2);
}

#[test]
fn unnormalized_cochain_is_rejected() {
    assert!(Cochain2::new(1, vec![1, -1, 1, -1]).is_err());
    assert!(Cochain2::new(1, vec![1, 1, 1, 2]).is_err());
}

#[test]
fn gn_structure() {
    let g1 = build_gn(&cayley_dickson_cochain(1).unwrap()).unwrap();
    assert_eq!(g1.order(), 4);
    assert!(g1.is_associative());
    let g2 = build_gn(&cayley_dickson_cochain(2).unwrap()).unwrap();
    assert!(g2.is_associative());
    assert_eq!(g2.nucleus().len(), 8);
    let g3 = build_gn(&cayley_dickson_cochain(3).unwrap()).unwrap();
    assert_eq!(g3.order(), 16);
    assert!(g3.validate().is_empty());
    assert!(!g3.is_associative());
    assert_eq!(g3.nucleus(), vec![0, 1]);
    assert_eq!(g3.label(1), "e[a=000,i=1]");
    assert!(g3.is_quasiassociative());
}

#[test]
fn labels_are_msb_first() {
    assert_eq!(bits(0b011, 3), "011");
    assert_eq!(bits(0, 0), "0");
    assert_eq!(element_label(4, 1, 3), "e[a=100,i=1]");
    assert_eq!(function_label(1, 0, 2), "f[a=01,i=0]");
}

#[test]
fn coboundary_is_a_cocycle_and_controls_the_associator() {
    for n in 0..=4 {
        let f = cayley_dickson_cochain(n).unwrap();
        let psi = coboundary_3cocycle(&f);
        assert!(psi.cocycle_identity().holds, "n={n}");
        assert!((0..f.size() as u32).all(|c| (0..f.size() as u32).all(|d| psi.value(0, c, d) == 1)));
        if n <= 3 {
            assert!(psi_matches_quasigroup_associator(&f).unwrap(), "n={n}");
        }
    }
    let f2 = cayley_dickson_cochain(2).unwrap();
    assert!(coboundary_3cocycle(&f2).is_trivial());
    let f3 = cayley_dickson_cochain(3).unwrap();
    let psi3 = coboundary_3cocycle(&f3);
    assert_eq!(psi3.value(0b001, 0b010, 0b100), -1);
    assert_eq!(psi3.negative_count(), 168);
    assert_eq!(coboundary_3cocycle(&cayley_dickson_cochain(4).unwrap()).negative_count(), 1848);
}

#[test]
fn displayed_formula_needs_the_diagonal_factors() {
    for n in 2..=4 {
        let f = cayley_dickson_cochain(n).unwrap();
        assert_eq!(beta_coefficient_sign(&f), coboundary_3cocycle(&f), "n={n}");
        assert!(!displayed_psi(&f).cocycle_identity().holds, "n={n}");
    }
    let f2 = cayley_dickson_cochain(2).unwrap();
    assert!(!displayed_psi(&f2).is_trivial());
    let report = psi_matches_quasigroup_associator_report(&f2, &displayed_psi(&f2)).unwrap();
    assert!(!report.holds);
}

#[test]
fn trivial_cochain_gives_elementary_abelian_group() {
    let f = Cochain2::trivial(3).unwrap();
    let g = build_gn(&f).unwrap();
    assert!(g.is_associative());
    assert!(coboundary_3cocycle(&f).is_trivial());
}
