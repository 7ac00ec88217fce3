//! Ready-made instances: the Cayley-basis quasigroups `G_n`, their function
//! algebras `k[G_n]` and quasigroup algebras `kG_n`, the coassociative pair
//! `(k[G_0], k[G_n], π)`, small group-algebra cases, and the coherent
//! Hopf 2-algebras built from them.

use alloc::format;

use crate::cayley::{build_gn, cayley_dickson_cochain, Cochain2};
use crate::error::Result;
use crate::hopf2::{build_alpha, build_coherent, build_h, CoherentHopf2Bundle, CrossedComoduleData};
use crate::hopf::{function_algebra, linear_extension, CoassociativePairData, Claim, HopfStructure};
use crate::linear::{ix, LinearMap, Vector};
use crate::quasigroup::FiniteQuasigroup;

/// The Cayley-basis quasigroup `G_n` of the `2^n`-dimensional
/// Cayley–Dickson algebra (`n = 0` gives `{±1}`).
pub fn gn(n: usize) -> Result<FiniteQuasigroup> {
    build_gn(&cayley_dickson_cochain(n)?)
}

/// `G_n` built from the trivial cochain, i.e. the group `Z_2^{n+1}` with
/// the same labels as `G_n`.
pub fn untwisted_gn(n: usize) -> Result<FiniteQuasigroup> {
    build_gn(&Cochain2::trivial(n)?)
}

/// The function algebra `k[G_n]` as a Hopf coquasigroup.
pub fn function_algebra_gn(n: usize) -> Result<HopfStructure> {
    Ok(function_algebra(&gn(n)?)?.renamed(format!("k[G_{n}]")))
}

/// The quasigroup algebra `kG_n` as a Hopf quasigroup.
pub fn quasigroup_algebra_gn(n: usize) -> Result<HopfStructure> {
    Ok(linear_extension(&gn(n)?)?.renamed(format!("kG_{n}")))
}

/// `k[G_0]`, the functions on `{±1}`, as a Hopf algebra.
pub fn base_hopf_algebra() -> Result<HopfStructure> {
    Ok(function_algebra_gn(0)?.with_claim(Claim::HopfAlgebra))
}

/// The restriction `π: k[G_n] → k[G_0]` of functions to the nucleus
/// `{±e_0}`: `f_0^i ↦ f^i`, `f_a^i ↦ 0` for `a ≠ 0`.
pub fn projection_pi(n: usize) -> Result<LinearMap> {
    let b = function_algebra_gn(n)?;
    let a = base_hopf_algebra()?;
    LinearMap::from_fn(b.space().clone(), a.space().clone(), |g| {
        if g[0] < 2 {
            Vector::basis(ix(&[g[0]]))
        } else {
            Vector::zero()
        }
    })
}

/// The coassociative pair `(k[G_0], k[G_n], π)`.
pub fn cayley_pair(n: usize) -> Result<CoassociativePairData> {
    CoassociativePairData::new(base_hopf_algebra()?, function_algebra_gn(n)?, projection_pi(n)?)
}

/// The pair `(H, H, id)` for a Hopf algebra `H`.
pub fn identity_pair(h: &HopfStructure) -> Result<CoassociativePairData> {
    CoassociativePairData::new(h.clone(), h.clone(), LinearMap::identity(h.space().clone()))
}

/// The group algebra `kZ_2` as a Hopf algebra.
pub fn group_algebra_z2() -> Result<HopfStructure> {
    Ok(linear_extension(&FiniteQuasigroup::cyclic(2)?)?.renamed("kZ_2").with_claim(Claim::HopfAlgebra))
}

/// The function algebra `k[Z_2]` as a Hopf algebra.
pub fn function_algebra_z2() -> Result<HopfStructure> {
    Ok(function_algebra(&FiniteQuasigroup::cyclic(2)?)?.renamed("k[Z_2]").with_claim(Claim::HopfAlgebra))
}

/// The coherent Hopf 2-algebra on `H = k[G_0]⊗k[G_n]` built from the
/// quasi coassociative pair `(k[G_0], k[G_n], π)`.
pub fn hopf2_bundle_gn(n: usize) -> Result<CoherentHopf2Bundle> {
    build_coherent(&cayley_pair(n)?)
}

/// The crossed comodule `(kZ_2, kZ_2, id, a ↦ 1⊗a)`.
pub fn trivial_crossed_comodule_z2() -> Result<CrossedComoduleData> {
    let pair = identity_pair(&group_algebra_z2()?)?;
    let delta = CrossedComoduleData::trivial_coaction(&pair)?;
    CrossedComoduleData::new(pair, delta)
}

/// The strict Hopf 2-algebra on `kZ_2⊗kZ_2` from the trivial crossed
/// comodule.
pub fn strict_bundle_z2() -> Result<CoherentHopf2Bundle> {
    let x = trivial_crossed_comodule_z2()?;
    let bundle = build_h(&x)?;
    let alpha = build_alpha(&bundle, &x.pair)?;
    bundle.with_alpha(alpha)
}
