//! Crossed modules, strict 2-groups and the coherent 2-group of `G_n`.

use hopf2_core::cayley::{build_gn, cayley_dickson_cochain};
use hopf2_core::quasigroup::FiniteQuasigroup;
use hopf2_core::two_group::*;

fn gn(n: usize) -> FiniteQuasigroup {
    build_gn(&cayley_dickson_cochain(n).unwrap()).unwrap()
}

fn z2_identity() -> CrossedModule {
    let z2 = FiniteQuasigroup::cyclic(2).unwrap();
    CrossedModule { m: z2.clone(), n: z2, phi: vec![0, 1], gamma: vec![vec![0, 1], vec![0, 1]] }
}

#[test]
fn valid_crossed_modules() {
    assert!(CrossedModule::identity_of(gn(2)).validate().is_empty());
    assert!(CrossedModule::to_trivial(FiniteQuasigroup::cyclic(2).unwrap()).unwrap().validate().is_empty());
    assert!(z2_identity().validate().is_empty());
}

#[test]
fn non_action_is_reported() {
    let mut x = CrossedModule::to_trivial(FiniteQuasigroup::cyclic(3).unwrap()).unwrap();
    x.gamma[0] = vec![0, 2, 1];
    let v = x.validate();
    assert!(v.iter().any(|e| matches!(e, CrossedModuleViolation::ActionViolation { .. })), "{v:?}");
}

#[test]
fn peiffer_and_equivariance_failures() {
    // φ = id on Z_3 with a trivial action breaks the Peiffer identity only
    // in non-abelian groups; use Q_8.
    let q8 = gn(2);
    let k = q8.order();
    let x = CrossedModule { m: q8.clone(), n: q8.clone(), phi: (0..k).collect(), gamma: vec![(0..k).collect(); k] };
    let v = x.validate();
    assert!(v.iter().any(|e| matches!(e, CrossedModuleViolation::Peiffer { .. })), "{v:?}");
    assert!(v.iter().any(|e| matches!(e, CrossedModuleViolation::Equivariance { .. })), "{v:?}");
}

#[test]
fn strict_two_group_of_z2() {
    let t = strict_two_group_from_crossed_module(&z2_identity()).unwrap();
    assert_eq!(t.morphisms.order(), 4);
    assert!(t.is_strict());
    let r = t.verify_all();
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn trivial_m_gives_discrete_groupoid() {
    let n = gn(2);
    let k = n.order();
    let one = FiniteQuasigroup::cyclic(1).unwrap();
    let x = CrossedModule { m: one, n, phi: vec![0], gamma: vec![vec![0]; k] };
    let t = strict_two_group_from_crossed_module(&x).unwrap();
    assert_eq!(t.morphisms.order(), k);
    assert!(t.comp.keys().all(|&(a, b)| a == b));
    assert!(t.verify_all().all_pass());
}

#[test]
fn invalid_crossed_module_is_rejected() {
    let mut x = z2_identity();
    x.phi = vec![1, 1];
    assert!(strict_two_group_from_crossed_module(&x).is_err());
}

#[test]
fn group_gives_strict_two_group() {
    let t = coherent_two_group_from_quasigroup(&FiniteQuasigroup::cyclic(3).unwrap()).unwrap();
    assert!(t.is_strict());
    assert!(t.verify_all().all_pass());
    let t2 = coherent_two_group_from_quasigroup(&gn(2)).unwrap();
    assert_eq!(t2.morphisms.order(), 64);
    assert!(t2.is_strict());
    assert!(t2.verify_all().all_pass());
}

#[test]
fn octonion_two_group() {
    let t = coherent_two_group_from_quasigroup(&gn(3)).unwrap();
    assert_eq!(t.morphisms.order(), 32);
    assert!(!t.is_strict());
    let p = t.verify_pentagon();
    assert!(p.holds);
    assert_eq!(p.checked, 16usize.pow(4));
    let nat = t.verify_naturality();
    assert!(nat.holds);
    assert_eq!(nat.checked, 32usize.pow(3));
    let i = t.verify_interchange();
    assert!(i.holds);
    assert_eq!(i.checked, 64 * 64);
    let r = t.verify_all();
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn perturbed_alpha_breaks_pentagon_and_naturality() {
    let t = coherent_two_group_from_quasigroup(&gn(3)).unwrap();
    // Negate the nucleus component of α on one nontrivial triple: the
    // morphism (−n, g) sits 16 indices away from (n, g).
    let (g, h, k) = (2, 4, 8);
    let a = t.alpha(g, h, k);
    let flipped = (a + 16) % 32;
    let bad = t.with_alpha(g, h, k, flipped);
    assert!(!bad.verify_pentagon().holds);
    assert!(!bad.verify_naturality().holds);
}

#[test]
fn non_quasiassociative_input_is_rejected() {
    let t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
    let q = FiniteQuasigroup::from_fn((0..5).map(|i| i.to_string()).collect(), 0, |a, b| t[a][b]).unwrap();
    assert!(coherent_two_group_from_quasigroup(&q).is_err());
}

#[test]
fn round_trip_recovers_crossed_modules() {
    for x in [z2_identity(), CrossedModule::identity_of(gn(2))] {
        let r = crossed_module_round_trip(&x).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}
