use hopf2_core::cayley::{cayley_dickson_cochain, coboundary_3cocycle};
use hopf2_core::examples::{
    base_hopf_algebra, cayley_pair, function_algebra_gn, function_algebra_z2, group_algebra_z2, identity_pair,
    untwisted_gn,
};
use hopf2_core::hopf::{
    check_coassociative_pair, check_quasi_coassociative, coassociator_beta, coproduct_passthrough_check,
    function_algebra, iterated_coproduct, CoassociativePairData,
};
use hopf2_core::linear::{LinearMap, Vector};
use hopf2_core::quasigroup::product_trees;
use hopf2_core::scalar::int;
use hopf2_core::Error;

#[test]
fn beta_is_trivial_exactly_for_coassociative_cases() {
    for n in 0..=2 {
        let b = function_algebra_gn(n).unwrap();
        let r = coassociator_beta(&b).unwrap();
        assert!(r.trivial, "n={n}");
        assert!(r.relation.pass);
        assert!(b.is_coassociative());
    }
    for h in [group_algebra_z2().unwrap(), function_algebra_z2().unwrap()] {
        assert!(coassociator_beta(&h).unwrap().trivial);
    }
    let b3 = function_algebra_gn(3).unwrap();
    let r = coassociator_beta(&b3).unwrap();
    assert!(!r.trivial);
    assert!(!b3.is_coassociative());
}

#[test]
fn coassociator_relation_holds_on_g3() {
    let r = coassociator_beta(&function_algebra_gn(3).unwrap()).unwrap();
    assert!(r.relation.pass, "{:?}", r.relation);
}

// Term counts and sample entries from an independent dictionary-based
// computation over the octonion multiplication table.
#[test]
fn beta_of_g3_matches_frozen_values() {
    let b = function_algebra_gn(3).unwrap();
    let beta = coassociator_beta(&b).unwrap().beta;
    for g in 2..16u16 {
        assert!(beta.image(&[g]).is_zero(), "β(f_a^i) must vanish for a ≠ 0, index {g}");
    }
    let b0 = beta.image(&[0]);
    let b1 = beta.image(&[1]);
    assert_eq!(b0.len(), 2752);
    assert_eq!(b1.len(), 1344);
    assert!(b0.iter().chain(b1.iter()).all(|(_, c)| *c == int(1)));
    let s3 = b.space().power(3);
    let f = |l: &str| s3.index_of(l).unwrap();
    assert_eq!(b1.coefficient(&f("f[a=001,i=0]⊗f[a=010,i=0]⊗f[a=100,i=0]")), int(1));
    assert_eq!(b0.coefficient(&f("f[a=001,i=0]⊗f[a=010,i=0]⊗f[a=100,i=0]")), int(0));
    assert_eq!(b0.coefficient(&f("f[a=001,i=0]⊗f[a=001,i=0]⊗f[a=001,i=0]")), int(1));
}

#[test]
fn beta_of_f0_is_governed_by_the_coboundary_sign() {
    let psi = coboundary_3cocycle(&cayley_dickson_cochain(3).unwrap());
    let beta = coassociator_beta(&function_algebra_gn(3).unwrap()).unwrap().beta;
    for i in 0..2u16 {
        let v = beta.image(&[i]);
        for x in 0..16u16 {
            for y in 0..16u16 {
                for z in 0..16u16 {
                    let sign = psi.value((x / 2) as u32, (y / 2) as u32, (z / 2) as u32);
                    let expected = if (sign < 0) == (i == 1) { int(1) } else { int(0) };
                    assert_eq!(v.coefficient(&[x, y, z]), expected);
                }
            }
        }
    }
}

#[test]
fn cayley_pairs_are_coassociative_and_quasi_coassociative() {
    for n in 0..=3 {
        let p = cayley_pair(n).unwrap();
        let r = check_coassociative_pair(&p);
        assert!(r.all_pass(), "n={n}: {r:?}");
        let q = check_quasi_coassociative(&p);
        assert!(q.report.all_pass(), "n={n}: {:?}", q.report);
        assert_eq!(q.kernel_basis.len(), 2 * (1 << n) - 2);
    }
}

#[test]
fn identity_pair_of_a_hopf_algebra_is_trivially_quasi_coassociative() {
    for h in [group_algebra_z2().unwrap(), base_hopf_algebra().unwrap()] {
        let p = identity_pair(&h).unwrap();
        assert!(check_coassociative_pair(&p).all_pass());
        let q = check_quasi_coassociative(&p);
        assert!(q.report.all_pass());
        assert!(q.kernel_basis.is_empty());
    }
}

#[test]
fn counit_times_unit_is_still_a_coassociative_pair() {
    let p = cayley_pair(3).unwrap();
    let unit = p.a.unit().clone();
    let trivial = LinearMap::from_fn(p.b.space().clone(), p.a.space().clone(), |g| unit.scaled(&p.b.counit_of(g[0]))).unwrap();
    let r = check_coassociative_pair(&p.with_phi(trivial).unwrap());
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn identity_into_the_untwisted_group_breaks_mixed_coassociativity() {
    let b = function_algebra_gn(3).unwrap();
    let a = function_algebra(&untwisted_gn(3).unwrap()).unwrap().with_claim(hopf2_core::hopf::Claim::HopfAlgebra);
    let phi = LinearMap::from_fn(b.space().clone(), a.space().clone(), |g| Vector::basis(g.clone())).unwrap();
    let r = check_coassociative_pair(&CoassociativePairData::new(a, b, phi).unwrap());
    assert!(r.passed("a.coassociativity"));
    assert!(r.passed("phi_multiplicative"));
    assert!(!r.passed("phi_comultiplicative"));
    assert!(!r.passed("mixed_1"));
    assert!(r.get("mixed_1").unwrap().witness.is_some());
}

#[test]
fn iterated_coproducts_pass_phi_through_brackets() {
    let p = cayley_pair(3).unwrap();
    let r = coproduct_passthrough_check(&p, 3).unwrap();
    assert!(r.holds, "{r:?}");
    assert_eq!(r.pairs, 4 * 10);
    assert!(r.hypotheses > 0);
    // Without φ the hypothesis alone is not enough: the brackets differ.
    let b = &p.b;
    let trees = product_trees(2).unwrap();
    assert!((0..16).any(|i| iterated_coproduct(b, i, &trees[0]) != iterated_coproduct(b, i, &trees[1])));
    assert!(matches!(coproduct_passthrough_check(&p, 4), Err(Error::SizeLimit(_))));
}

#[test]
fn corrupted_antipode_breaks_quasi_coassociativity() {
    let p = cayley_pair(3).unwrap();
    // S(f_001^0) picks up a stray f_000^0 component.
    let s = p.b.antipode().with_entry(&[0], &[2], int(1)).unwrap();
    let bad = p.with_b(p.b.with_antipode(s).unwrap()).unwrap();
    let q = check_quasi_coassociative(&bad);
    assert!(!q.report.passed("ad_left_in_ideal"));
    assert!(!q.report.passed("ad_right_in_ideal"));
    assert!(!q.report.passed("ideal_in_ker_beta"));
    assert!(q.report.passed("phi_surjective"));
}
