use hopf2_core::algebroid::{check_antipode, check_bring_coring, check_central_hopf_algebroid, check_takeuchi, CentralHopfAlgebroidData};
use hopf2_core::hopf::flatten_pair;
use hopf2_core::linear::{compose, ix, LinearMap, Vector};
use hopf2_core::examples::{base_hopf_algebra, function_algebra_z2, group_algebra_z2};

#[test]
fn ground_field_case_reduces_to_hopf_algebra() {
    for h in [group_algebra_z2().unwrap(), function_algebra_z2().unwrap(), base_hopf_algebra().unwrap()] {
        let d = CentralHopfAlgebroidData::over_ground_field(&h).unwrap();
        let r = check_central_hopf_algebroid(&d);
        assert!(r.all_pass(), "{}: {:?}", h.name(), r.failures().collect::<Vec<_>>());
        assert_eq!(d.balanced.pair().dim(), h.dim() * h.dim());
    }
}

#[test]
fn ground_field_antipode_perturbation_is_detected() {
    let h = group_algebra_z2().unwrap();
    let d = CentralHopfAlgebroidData::over_ground_field(&h).unwrap();
    let zero = LinearMap::zero(h.space().clone(), h.space().clone());
    let bad = d.with_antipode(zero).unwrap();
    let r = check_antipode(&bad);
    assert!(!r.passed("antipode_left"));
    assert!(check_bring_coring(&bad).all_pass());
    assert!(check_takeuchi(&bad).all_pass());
}

fn cayley_algebroid(n: usize) -> CentralHopfAlgebroidData {
    hopf2_core::examples::hopf2_bundle_gn(n).unwrap().algebroid
}

#[test]
fn cayley_bundles_are_central_hopf_algebroids() {
    for n in 1..=3 {
        let d = cayley_algebroid(n);
        let r = check_central_hopf_algebroid(&d);
        assert!(r.all_pass(), "n={n}: {:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(d.h.space().dim(), 4 << n);
    }
}

#[test]
fn counit_composed_with_the_algebroid_antipode_is_unchanged() {
    // ε(S_A(a)φ(b₍₁₎)⊗b₍₂₎) = ε_A(a)b, so this perturbation is invisible.
    for n in 1..=3 {
        let d = cayley_algebroid(n);
        assert_eq!(compose(&d.eps, &d.antipode).unwrap(), d.eps);
    }
}

#[test]
fn counit_composed_with_the_hopf_antipode_breaks_a_counit_law() {
    let bundle = hopf2_core::examples::hopf2_bundle_gn(2).unwrap();
    let d = &bundle.algebroid;
    let bad = d.with_eps(compose(&d.eps, bundle.hopf.antipode()).unwrap()).unwrap();
    let r = check_bring_coring(&bad);
    assert!(!r.passed("counit_right"), "{r:?}");
    assert!(!r.passed("eps_left_linear"));
}

#[test]
fn swapping_source_and_target_breaks_bilinearity_of_the_coproduct() {
    for n in 1..=3 {
        let d = cayley_algebroid(n).with_source_target_swapped().unwrap();
        let r = check_bring_coring(&d);
        assert!(!r.passed("delta_left_linear") && !r.passed("delta_right_linear"), "n={n}");
        assert!(!r.passed("counit_right"));
        assert!(!check_antipode(&d).passed("antipode_left"));
        // H is commutative, so xt(b)⊗y ~ x⊗s(b)y = x⊗ys(b) in H⊗_B H: every
        // element lies in the Takeuchi product, whichever way s and t go.
        assert!(check_takeuchi(&d).passed("takeuchi"));
    }
}

#[test]
fn antipode_without_the_phi_term_breaks_the_right_law() {
    // S(a⊗b) = S_A(a)⊗b instead of S_A(a)φ(b₍₁₎)⊗b₍₂₎.
    let bundle = hopf2_core::examples::hopf2_bundle_gn(2).unwrap();
    let pair = hopf2_core::examples::cayley_pair(2).unwrap();
    let d = &bundle.algebroid;
    let db = bundle.b.dim() as u16;
    let bad_s = LinearMap::from_fn(d.h.space().clone(), d.h.space().clone(), |i| {
        let (ai, bi) = (i[0] / db, i[0] % db);
        let sa = pair.a.antipode_of(ai);
        flatten_pair(&sa.tensor(&Vector::basis(ix(&[bi]))), db as usize)
    })
    .unwrap();
    let r = check_antipode(&d.with_antipode(bad_s).unwrap());
    assert!(!r.passed("antipode_right"), "{r:?}");
}
