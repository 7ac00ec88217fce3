//! The `H = A⊗B` construction: a Hopf coquasigroup layer, a central Hopf
//! algebroid layer over `B`, and the coassociator `α: H → B⊗B⊗B`.
//!
//! `H` has the single basis `a⊗b` with index `a·dim(B) + b`.

use alloc::string::String;

use crate::algebroid::CentralHopfAlgebroidData;
use crate::error::{Error, Result};
use crate::hopf::{
    coassociator_beta, flatten_pair, mul_tensors, tensor_algebra, Algebra, Claim, CoassociativePairData,
    HopfStructure,
};
use crate::linear::{ix, kernel, preimage, LinearMap, Space, Vector};

use super::comodule::{check_crossed_comodule, CrossedComoduleData};

/// Everything a coherent Hopf 2-algebra carries: the base `B`, the Hopf
/// coquasigroup `(H, ▲, ε_H, S_H)`, the central Hopf algebroid
/// `(H, s, t, Δ, ε, S)` over `B`, and the coassociator `α`, if built.
#[derive(Clone, Debug)]
pub struct CoherentHopf2Bundle {
    /// The commutative Hopf coquasigroup `B`.
    pub b: HopfStructure,
    /// `H` with `▲`, `ε_H`, `S_H`.
    pub hopf: HopfStructure,
    /// `H` with `s`, `t`, `Δ`, `ε`, `S` over `B`.
    pub algebroid: CentralHopfAlgebroidData,
    /// `α: H → B⊗B⊗B`.
    pub alpha: Option<LinearMap>,
}

impl CoherentHopf2Bundle {
    /// Assembles a bundle, checking that all layers live on the same spaces.
    pub fn new(
        b: HopfStructure,
        hopf: HopfStructure,
        algebroid: CentralHopfAlgebroidData,
        alpha: Option<LinearMap>,
    ) -> Result<Self> {
        if hopf.space() != algebroid.h.space() || b.space() != algebroid.b.space() {
            return Err(Error::DomainMismatch(String::from("Hopf layer and algebroid layer live on different spaces")));
        }
        let bundle = Self { b, hopf, algebroid, alpha: None };
        match alpha {
            Some(a) => bundle.with_alpha(a),
            None => Ok(bundle),
        }
    }

    /// The name of `H`.
    pub fn name(&self) -> &str {
        self.hopf.name()
    }

    /// `dim H`.
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// A copy with the coassociator set.
    pub fn with_alpha(&self, alpha: LinearMap) -> Result<Self> {
        if alpha.domain() != self.hopf.space() || *alpha.codomain() != self.b.space().power(3) {
            return Err(Error::DomainMismatch(alloc::format!(
                "α must map {} → {}",
                self.hopf.space(),
                self.b.space().power(3)
            )));
        }
        Ok(Self { alpha: Some(alpha), ..self.clone() })
    }

    /// A copy with another Hopf-coquasigroup layer on the same space.
    pub fn with_hopf(&self, hopf: HopfStructure) -> Result<Self> {
        Self::new(self.b.clone(), hopf, self.algebroid.clone(), self.alpha.clone())
    }

    /// A copy with another algebroid layer on the same spaces.
    pub fn with_algebroid(&self, algebroid: CentralHopfAlgebroidData) -> Result<Self> {
        Self::new(self.b.clone(), self.hopf.clone(), algebroid, self.alpha.clone())
    }

    /// `(ε⊗ε⊗ε)∘(▲⊗id)∘▲`, the coassociator of a strict Hopf 2-algebra.
    pub fn strict_alpha(&self) -> LinearMap {
        let eps = &self.algebroid.eps;
        let cod = self.b.space().power(3);
        LinearMap::from_fn(self.hopf.space().clone(), cod, |i| {
            let v = self.hopf.left_double(i[0]);
            eps.apply_at(&eps.apply_at(&eps.apply_at(&v, 0), 1), 2)
        })
        .expect("ε lands in B")
    }
}

fn e(i: u16) -> Vector {
    Vector::basis(ix(&[i]))
}

/// Builds both layers on `H = A⊗B` from a crossed comodule:
///
/// * `▲(a⊗b) = a₍₁₎⊗a₍₂₎₍₋₁₎b₍₁₎⊗a₍₂₎₍₀₎⊗b₍₂₎`, `ε_H = ε_A⊗ε_B`,
///   `S_H(a⊗b) = S_A(a₍₀₎)⊗S_B(a₍₋₁₎b)`;
/// * `s(b) = φ(b₍₁₎)⊗b₍₂₎`, `t(b) = 1⊗b`, `Δ(a⊗b) = (a₍₁₎⊗1)⊗_B(a₍₂₎⊗b)`,
///   `ε(a⊗b) = ε_A(a)b`, `S(a⊗b) = S_A(a)φ(b₍₁₎)⊗b₍₂₎`.
///
/// The crossed-comodule conditions, commutativity of `B` and centrality of
/// `φ(B)` in `A` are verified first.
pub fn build_h(x: &CrossedComoduleData) -> Result<CoherentHopf2Bundle> {
    let (a, b, phi, delta) = (x.a(), x.b(), x.phi(), &x.delta);
    if let Some(f) = check_crossed_comodule(x).failures().next() {
        return Err(Error::PreconditionFailed(alloc::format!("not a crossed comodule: {} fails", f.name)));
    }
    if !b.algebra().is_commutative() {
        return Err(Error::PreconditionFailed(alloc::format!("{} is not commutative", b.name())));
    }
    for i in b.basis_indices() {
        if !a.algebra().is_central(&phi.image(&[i])) {
            return Err(Error::PreconditionFailed(alloc::format!(
                "φ({}) is not central in {}",
                b.space().label_of(&[i]),
                a.name()
            )));
        }
    }
    let db = b.dim();
    let dbu = db as u16;
    let name = alloc::format!("{}⊗{}", a.name(), b.name());
    let h: Algebra = tensor_algebra(&name, a.algebra(), b.algebra())?;
    let sh = h.space().clone();
    let sb = b.space().clone();
    let split = |i: u16| (i / dbu, i % dbu);

    let tri = LinearMap::from_fn(sh.clone(), sh.power(2), |i| {
        let (ai, bi) = split(i[0]);
        // (a₁, a₂₍₋₁₎, a₂₍₀₎) ⊗ (b₁, b₂) → (a₁, a₂₍₋₁₎b₁, a₂₍₀₎, b₂)
        let v = delta.apply_at(&a.delta_of(ai), 1).tensor(&b.delta_of(bi));
        flatten_pair(&b.mul_at(&v.permute(&[0, 1, 3, 2, 4]), 1), db)
    })?;
    let eps_h = LinearMap::from_fn(sh.clone(), Space::scalars(), |i| {
        let (ai, bi) = split(i[0]);
        Vector::basis(ix(&[])).scaled(&(a.counit_of(ai) * b.counit_of(bi)))
    })?;
    let s_h = LinearMap::from_fn(sh.clone(), sh.clone(), |i| {
        let (ai, bi) = split(i[0]);
        let mut out = Vector::zero();
        for (idx, c) in delta.image(&[ai]).iter() {
            let right = b.antipode().apply(&b.algebra().mul_basis(idx[0], bi));
            out.add_scaled(&flatten_pair(&a.antipode_of(idx[1]).tensor(&right), db), c);
        }
        out
    })?;
    let claim = if b.is_coassociative() && a.is_coassociative() { Claim::HopfAlgebra } else { Claim::HopfCoquasigroup };
    let hopf = HopfStructure::new(name, h.clone(), tri, eps_h, s_h, claim)?;

    let s = LinearMap::from_fn(sb.clone(), sh.clone(), |i| flatten_pair(&phi.apply_at(&b.delta_of(i[0]), 0), db))?;
    let t = LinearMap::from_fn(sb.clone(), sh.clone(), |i| flatten_pair(&a.unit().tensor(&e(i[0])), db))?;
    let cop = LinearMap::from_fn(sh.clone(), sh.power(2), |i| {
        let (ai, bi) = split(i[0]);
        let mut out = Vector::zero();
        for (idx, c) in a.delta_of(ai).iter() {
            let v = e(idx[0]).tensor(b.unit()).tensor(&e(idx[1])).tensor(&e(bi));
            out.add_scaled(&flatten_pair(&v, db), c);
        }
        out
    })?;
    let eps = LinearMap::from_fn(sh.clone(), sb.clone(), |i| {
        let (ai, bi) = split(i[0]);
        e(bi).scaled(&a.counit_of(ai))
    })?;
    let anti = LinearMap::from_fn(sh.clone(), sh.clone(), |i| {
        let (ai, bi) = split(i[0]);
        let sa = a.antipode_of(ai);
        let mut out = Vector::zero();
        for (idx, c) in b.delta_of(bi).iter() {
            let left = a.algebra().mul(&sa, &phi.image(&[idx[0]]));
            out.add_scaled(&flatten_pair(&left.tensor(&e(idx[1])), db), c);
        }
        out
    })?;
    let algebroid = CentralHopfAlgebroidData::new(h, b.clone(), s, t, cop, eps, anti)?;
    CoherentHopf2Bundle::new(b.clone(), hopf, algebroid, None)
}

/// The coassociator `α([c]⊗b) = β(c)·(b₍₁₎₍₁₎⊗b₍₁₎₍₂₎⊗b₍₂₎)`, with `β` the
/// coassociator of `B` evaluated on a representative `c` of `[c]`.
/// `pair` is `(C, B, φ)` with `C` the first tensor factor of `H`; fails with
/// [`Error::IllDefined`] unless `ker φ ⊆ ker β`.
pub fn build_alpha(bundle: &CoherentHopf2Bundle, pair: &CoassociativePairData) -> Result<LinearMap> {
    let (c, b, phi) = (&pair.a, &pair.b, &pair.phi);
    if b.space() != bundle.b.space() || bundle.dim() != c.dim() * b.dim() {
        return Err(Error::DomainMismatch(String::from("pair does not match the bundle's factors")));
    }
    let beta = coassociator_beta(b)?.beta;
    let s3 = b.space().power(3);
    for k in kernel(phi) {
        if let Some((idx, _)) = beta.apply(&k).leading() {
            return Err(Error::IllDefined(alloc::format!(
                "ker φ is not inside ker β: an element of ker φ has β-component at {}",
                s3.label_of(idx)
            )));
        }
    }
    let legs = [b.algebra(), b.algebra(), b.algebra()];
    let db = b.dim() as u16;
    let mut reps = alloc::vec::Vec::new();
    for y in c.basis_indices() {
        let rep = preimage(phi, &e(y))
            .ok_or_else(|| Error::PreconditionFailed(alloc::format!("φ does not reach {}", c.space().label_of(&[y]))))?;
        reps.push(beta.apply(&rep));
    }
    LinearMap::from_fn(bundle.hopf.space().clone(), s3, |i| {
        let (ci, bi) = (i[0] / db, i[0] % db);
        mul_tensors(&legs, &reps[ci as usize], &b.left_double(bi))
    })
}

/// The full construction: `Ad`, `H = C⊗B` and `α` from a quasi
/// coassociative pair `(C, B, φ)` with `B` commutative.
pub fn build_coherent(pair: &CoassociativePairData) -> Result<CoherentHopf2Bundle> {
    let x = super::comodule::adjoint_crossed_comodule(pair)?;
    let bundle = build_h(&x)?;
    let alpha = build_alpha(&bundle, pair)?;
    bundle.with_alpha(alpha)
}
