use hopf2_core::cayley::{build_gn, cayley_dickson_cochain};
use hopf2_core::hopf::{
    antipode_properties, check_hopf_algebra, check_hopf_coquasigroup, check_hopf_quasigroup, function_algebra,
    linear_extension, Claim,
};
use hopf2_core::linear::{ix, Vector};
use hopf2_core::quasigroup::FiniteQuasigroup;
use hopf2_core::scalar::int;
use hopf2_core::Error;

fn gn(n: usize) -> FiniteQuasigroup {
    build_gn(&cayley_dickson_cochain(n).unwrap()).unwrap()
}

#[test]
fn function_algebra_of_g3_is_a_hopf_coquasigroup_but_not_coassociative() {
    let h = function_algebra(&gn(3)).unwrap();
    assert_eq!(h.dim(), 16);
    assert_eq!(h.claim(), Claim::HopfCoquasigroup);
    let r = check_hopf_coquasigroup(&h);
    assert!(r.all_pass(), "{r:?}");
    assert!(!h.is_coassociative());
    assert_eq!(h.space().labels()[0], "f[a=000,i=0]");
}

#[test]
fn linear_extension_of_g3_is_a_hopf_quasigroup_but_not_associative() {
    let h = linear_extension(&gn(3)).unwrap();
    let r = check_hopf_quasigroup(&h);
    assert!(r.all_pass(), "{r:?}");
    assert!(!h.is_associative());
    assert!(!check_hopf_coquasigroup(&h).passed("associativity"));
}

#[test]
fn group_cases_are_hopf_algebras() {
    for n in 0..=2 {
        let q = gn(n);
        for h in [function_algebra(&q).unwrap(), linear_extension(&q).unwrap()] {
            let r = check_hopf_algebra(&h);
            assert!(r.all_pass(), "n={n}: {r:?}");
            assert!(antipode_properties(&h).unwrap().all_pass());
        }
    }
}

#[test]
fn antipode_properties_hold_for_g3() {
    let h = function_algebra(&gn(3)).unwrap();
    let r = antipode_properties(&h).unwrap();
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn perturbed_antipode_is_caught_with_witness() {
    let h = function_algebra(&gn(3)).unwrap();
    let s = h.antipode().with_entry(&[0], &[1], int(1)).unwrap();
    let bad = h.with_antipode(s).unwrap();
    let r = check_hopf_coquasigroup(&bad);
    assert!(!r.all_pass());
    let c = r.failures().next().unwrap();
    assert!(c.name.starts_with("antipode"), "{}", c.name);
    assert!(c.witness.is_some());
    assert!(matches!(antipode_properties(&bad), Err(Error::PreconditionFailed(_))));
}

#[test]
fn coproduct_of_delta_functions_splits_over_products() {
    let q = gn(3);
    let h = function_algebra(&q).unwrap();
    for g in 0..16u16 {
        let d = h.delta_of(g);
        assert_eq!(d.len(), 16);
        for (idx, c) in d.iter() {
            assert_eq!(q.mul(idx[0] as usize, idx[1] as usize), g as usize);
            assert_eq!(*c, int(1));
        }
    }
    let unit: Vector = (0..16u16).map(|g| (ix(&[g]), int(1))).collect();
    assert_eq!(*h.unit(), unit);
}

#[test]
fn identity_antipode_is_rejected_on_both_sides() {
    let b = function_algebra(&gn(3)).unwrap();
    let bad = b.with_antipode(hopf2_core::linear::LinearMap::identity(b.space().clone())).unwrap();
    let r = check_hopf_coquasigroup(&bad);
    assert!(r.passed("associativity"));
    assert!(!r.passed("antipode_left_1") || !r.passed("antipode_right_1"));
    let a = linear_extension(&gn(3)).unwrap();
    let bad = a.with_antipode(hopf2_core::linear::LinearMap::identity(a.space().clone())).unwrap();
    assert!(!check_hopf_quasigroup(&bad).all_pass());
}

#[test]
fn group_algebra_of_z2_satisfies_all_claims() {
    let h = hopf2_core::examples::group_algebra_z2().unwrap();
    assert!(check_hopf_algebra(&h).all_pass());
    assert!(check_hopf_coquasigroup(&h).all_pass());
    assert!(check_hopf_quasigroup(&h).all_pass());
    assert!(antipode_properties(&h).unwrap().all_pass());
}

#[test]
fn antipode_of_g3_functions_is_the_sign_of_the_square() {
    // S(f_a^i) = f_a^{i + [a ≠ 0]}: the inverse of e_a^i is e_a^{i+1} for a ≠ 0.
    let h = function_algebra(&gn(3)).unwrap();
    for g in 0..16u16 {
        let expected = if g < 2 { g } else { g ^ 1 };
        assert_eq!(h.antipode_of(g), Vector::basis(ix(&[expected])));
        assert_eq!(h.counit_of(g), if g == 0 { int(1) } else { int(0) });
    }
}
