use hopf2_core::examples::{base_hopf_algebra, gn, group_algebra_z2};
use hopf2_core::hopf::{
    beta_star, canonical_pairing, check_beta_duality, check_hopf_algebra, check_pairing, ideal_ib, nucleus_na,
    quotient_hopf, Claim,
};
use hopf2_core::linear::{ix, Subspace, Vector};
use hopf2_core::quasigroup::FiniteQuasigroup;
use hopf2_core::scalar::int;
use hopf2_core::Error;

fn label_set(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

#[test]
fn canonical_pairings_are_nondegenerate_hopf_pairings() {
    let mut qs = vec![FiniteQuasigroup::cyclic(2).unwrap()];
    qs.extend((1..=3).map(|n| gn(n).unwrap()));
    for q in &qs {
        let p = canonical_pairing(q).unwrap();
        let r = check_pairing(&p);
        assert!(r.all_pass(), "{r:?}");
    }
}

// Dimensions from an independent nullspace computation over the octonion
// table: 4, 8 and 9 for n = 1, 2, 3.
#[test]
fn nucleus_solution_space_and_core() {
    for (n, raw, core, closed) in [(1, 4, 4, true), (2, 8, 8, true), (3, 9, 2, false)] {
        let p = canonical_pairing(&gn(n).unwrap()).unwrap();
        let r = nucleus_na(&p.a).unwrap();
        assert_eq!(r.solution.dim(), raw, "n={n}");
        assert_eq!(r.core.dim(), core, "n={n}");
        assert_eq!(r.delta_closed, closed, "n={n}");
    }
    let p = canonical_pairing(&gn(3).unwrap()).unwrap();
    let r = nucleus_na(&p.a).unwrap();
    assert_eq!(r.labels_inside, label_set(&["e[a=000,i=0]", "e[a=000,i=1]"]));
    assert_eq!(r.core.basis_labels_inside(), vec![ix(&[0]), ix(&[1])]);
    // e_a^0 + e_a^1 is nuclear but its coproduct leaves N⊗N.
    let x = Vector::from_terms([(ix(&[2]), int(1)), (ix(&[3]), int(1))]);
    assert!(r.solution.contains(&x));
    assert!(!r.core.contains(&x));
}

#[test]
fn nucleus_needs_a_quasigroup_claim() {
    let p = canonical_pairing(&gn(3).unwrap()).unwrap();
    assert!(matches!(nucleus_na(&p.b), Err(Error::PreconditionFailed(_))));
}

#[test]
fn ideal_and_quotient_for_g3() {
    let p = canonical_pairing(&gn(3).unwrap()).unwrap();
    let core = nucleus_na(&p.a).unwrap().core;
    let ib = ideal_ib(&p, &core).unwrap();
    assert_eq!(ib.ideal.dim(), 14);
    assert!(ib.report.all_pass(), "{:?}", ib.report);
    for g in 2..16u16 {
        assert!(ib.ideal.contains(&Vector::basis(ix(&[g]))));
    }
    let c = quotient_hopf(&p.b, ib.ideal.basis()).unwrap();
    assert_eq!(c.hopf.dim(), 2);
    assert_eq!(c.hopf.claim(), Claim::HopfAlgebra);
    assert!(check_hopf_algebra(&c.hopf).all_pass());
    assert_eq!(c.hopf.space().labels(), label_set(&["f[a=000,i=0]", "f[a=000,i=1]"]));
    // Same structure constants as k[G_0].
    let k0 = base_hopf_algebra().unwrap();
    assert_eq!(c.hopf.m().entries(), k0.m().entries());
    assert_eq!(c.hopf.delta().entries(), k0.delta().entries());
    assert_eq!(c.hopf.counit().entries(), k0.counit().entries());
    assert_eq!(c.hopf.antipode().entries(), k0.antipode().entries());
    assert_eq!(c.hopf.unit(), k0.unit());
}

#[test]
fn ideal_is_zero_when_the_nucleus_is_everything() {
    for n in 1..=2 {
        let p = canonical_pairing(&gn(n).unwrap()).unwrap();
        let core = nucleus_na(&p.a).unwrap().core;
        let ib = ideal_ib(&p, &core).unwrap();
        assert_eq!(ib.ideal.dim(), 0);
        let c = quotient_hopf(&p.b, ib.ideal.basis()).unwrap();
        assert_eq!(c.hopf.dim(), p.b.dim());
        assert_eq!(c.hopf.m(), p.b.m());
    }
}

#[test]
fn quotient_by_a_non_coideal_is_rejected() {
    let p = canonical_pairing(&gn(3).unwrap()).unwrap();
    // span{f_001^0} is an ideal of the pointwise algebra but not a coideal.
    let err = quotient_hopf(&p.b, &[Vector::basis(ix(&[2]))]).unwrap_err();
    assert!(matches!(err, Error::NotACoideal(_)), "{err:?}");
    // f_0^0 + f_001^0 does not span an ideal.
    let v = Vector::from_terms([(ix(&[0]), int(1)), (ix(&[2]), int(1))]);
    assert!(matches!(quotient_hopf(&p.b, &[v]), Err(Error::NotAnIdeal(_))));
}

#[test]
fn beta_star_lands_in_the_nucleus() {
    let p = canonical_pairing(&gn(3).unwrap()).unwrap();
    let core = nucleus_na(&p.a).unwrap().core;
    let r = beta_star(&p.a, &core).unwrap();
    assert!(r.report.all_pass(), "{:?}", r.report);
    for n in 1..=2 {
        let p = canonical_pairing(&gn(n).unwrap()).unwrap();
        let core = nucleus_na(&p.a).unwrap().core;
        assert!(beta_star(&p.a, &core).unwrap().report.all_pass());
    }
}

#[test]
fn beta_star_of_a_hopf_algebra_is_the_unit() {
    let h = group_algebra_z2().unwrap();
    let ones = Subspace::span(h.space().clone(), [h.unit().clone()]);
    let r = beta_star(&h, &ones).unwrap();
    assert!(r.report.passed("image_in_nucleus"));
    for (_, v) in r.map.columns() {
        assert_eq!(v, h.unit());
    }
}

#[test]
fn beta_star_leaves_the_unit_line_for_g3() {
    let p = canonical_pairing(&gn(3).unwrap()).unwrap();
    let ones = Subspace::span(p.a.space().clone(), [p.a.unit().clone()]);
    let r = beta_star(&p.a, &ones).unwrap();
    assert!(!r.report.passed("image_in_nucleus"));
}

#[test]
fn coassociator_and_beta_star_are_dual() {
    let mut qs = vec![FiniteQuasigroup::cyclic(2).unwrap()];
    qs.extend((1..=3).map(|n| gn(n).unwrap()));
    for q in &qs {
        let p = canonical_pairing(q).unwrap();
        let c = check_beta_duality(&p).unwrap();
        assert!(c.pass, "{c:?}");
    }
}
