//! Crossed comodules of Hopf coquasigroups and the adjoint coaction `Ad`
//! on the quotient of a quasi coassociative Hopf coquasigroup.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hopf::{
    check_coassociative_pair, check_quasi_coassociative, mul_tensors, Algebra, CoassociativePairData, HopfStructure,
};
use crate::linear::{ix, kernel, preimage, LinearMap, Vector};
use crate::report::{check_identity, Check, Report};

/// A crossed comodule `(A, B, φ, δ)`: a coassociative pair `(A, B, φ)`
/// with a left coaction `δ: A → B⊗A`, `δ(a) = a₍₋₁₎⊗a₍₀₎`.
#[derive(Clone, Debug)]
pub struct CrossedComoduleData {
    /// The underlying coassociative pair; `pair.a` is `A`, `pair.b` is `B`.
    pub pair: CoassociativePairData,
    /// The coaction `A → B⊗A`.
    pub delta: LinearMap,
}

impl CrossedComoduleData {
    /// Assembles the data, checking the shape of `δ`.
    pub fn new(pair: CoassociativePairData, delta: LinearMap) -> Result<Self> {
        let (sa, sb) = (pair.a.space(), pair.b.space());
        if delta.domain() != sa || *delta.codomain() != sb.tensor(sa) {
            return Err(Error::DomainMismatch(alloc::format!(
                "coaction must map {sa} → {}, got {} → {}",
                sb.tensor(sa),
                delta.domain(),
                delta.codomain()
            )));
        }
        Ok(Self { pair, delta })
    }

    /// `A`.
    pub fn a(&self) -> &HopfStructure {
        &self.pair.a
    }

    /// `B`.
    pub fn b(&self) -> &HopfStructure {
        &self.pair.b
    }

    /// `φ: B → A`.
    pub fn phi(&self) -> &LinearMap {
        &self.pair.phi
    }

    /// A copy with another coaction.
    pub fn with_delta(&self, delta: LinearMap) -> Result<Self> {
        Self::new(self.pair.clone(), delta)
    }

    /// The trivial coaction `a ↦ 1_B⊗a`.
    pub fn trivial_coaction(pair: &CoassociativePairData) -> Result<LinearMap> {
        let unit = pair.b.unit().clone();
        LinearMap::from_fn(pair.a.space().clone(), pair.b.space().tensor(pair.a.space()), |i| {
            unit.tensor(&Vector::basis(ix(&[i[0]])))
        })
    }

    fn ba(&self) -> [&Algebra; 2] {
        [self.b().algebra(), self.a().algebra()]
    }
}

/// Verifies every crossed-comodule condition: the coassociative pair; `δ`
/// a counital coassociative coaction; the comodule-coalgebra laws
/// `a₍₋₁₎⊗a₍₀₎₍₁₎⊗a₍₀₎₍₂₎ = a₍₁₎₍₋₁₎a₍₂₎₍₋₁₎⊗a₍₁₎₍₀₎⊗a₍₂₎₍₀₎` and
/// `ε_A(a)1 = a₍₋₁₎ε_A(a₍₀₎)`; `δ` an algebra map; both forms of
/// `δ(φ(b)) = b₍₁₎₍₁₎S_B(b₍₂₎)⊗φ(b₍₁₎₍₂₎) = b₍₁₎S_B(b₍₂₎₍₂₎)⊗φ(b₍₂₎₍₁₎)`; and
/// `φ(a₍₋₁₎)⊗a₍₀₎ = a₍₁₎S_A(a₍₃₎)⊗a₍₂₎`.
pub fn check_crossed_comodule(x: &CrossedComoduleData) -> Report {
    let (a, b, phi, delta) = (x.a(), x.b(), x.phi(), &x.delta);
    let mut r = Report::new(alloc::format!("({}, {}, φ, δ) as crossed comodule", a.name(), b.name()));
    r.absorb("pair", check_coassociative_pair(&x.pair));
    let (sa, sb) = (a.space(), b.space());
    let ba = sb.tensor(sa);
    let ea = |i: &[u16]| Vector::basis(ix(&[i[0]]));
    r.push(check_identity("coaction_counital", sa, sa, |i| b.counit_at(&delta.image(i), 0), |i| ea(i), None));
    r.push(check_identity(
        "coaction_coassociative",
        sa,
        &sb.power(2).tensor(sa),
        |i| b.delta_at(&delta.image(i), 0),
        |i| delta.apply_at(&delta.image(i), 1),
        None,
    ));
    r.push(check_identity(
        "comodule_coalgebra",
        sa,
        &ba.tensor(sa),
        |i| a.delta_at(&delta.image(i), 1),
        |i| {
            let d = delta.apply_at(&delta.apply_at(&a.delta_of(i[0]), 1), 0);
            b.mul_at(&d.permute(&[0, 2, 1, 3]), 0)
        },
        None,
    ));
    r.push(check_identity(
        "comodule_counital",
        sa,
        sb,
        |i| b.unit().scaled(&a.counit_of(i[0])),
        |i| a.counit_at(&delta.image(i), 1),
        None,
    ));
    r.push(Check::from_bool(
        "coaction_unital",
        delta.apply(a.unit()) == b.unit().tensor(a.unit()),
        "1",
        "δ(1) ≠ 1⊗1",
    ));
    r.push(check_identity(
        "coaction_multiplicative",
        &sa.power(2),
        &ba,
        |i| delta.apply(&a.algebra().mul_basis(i[0], i[1])),
        |i| mul_tensors(&x.ba(), &delta.image(&[i[0]]), &delta.image(&[i[1]])),
        None,
    ));
    let cc3 = |v: Vector| b.mul_at(&phi.apply_at(&b.antipode_at(&v, 2), 1).permute(&[0, 2, 1]), 0);
    r.push(check_identity(
        "phi_coaction_left",
        sb,
        &ba,
        |i| delta.apply(&phi.image(i)),
        |i| cc3(b.left_double(i[0])),
        None,
    ));
    r.push(check_identity(
        "phi_coaction_right",
        sb,
        &ba,
        |i| delta.apply(&phi.image(i)),
        |i| cc3(b.right_double(i[0])),
        None,
    ));
    r.push(check_identity(
        "peiffer",
        sa,
        &sa.power(2),
        |i| phi.apply_at(&delta.image(i), 0),
        |i| a.mul_at(&a.antipode_at(&a.left_double(i[0]), 2).permute(&[0, 2, 1]), 0),
        None,
    ));
    r
}

/// `x ↦ x₍₁₎₍₁₎S(x₍₂₎)⊗φ(x₍₁₎₍₂₎)` on `B`, with `S` supplied so the
/// antipode leg can be perturbed.
fn ad_left(b: &HopfStructure, phi: &LinearMap, s: &LinearMap, i: u16) -> Vector {
    b.mul_at(&phi.apply_at(&s.apply_at(&b.left_double(i), 2), 1).permute(&[0, 2, 1]), 0)
}

/// `x ↦ x₍₁₎S(x₍₂₎₍₂₎)⊗φ(x₍₂₎₍₁₎)` on `B`.
fn ad_right(b: &HopfStructure, phi: &LinearMap, s: &LinearMap, i: u16) -> Vector {
    b.mul_at(&phi.apply_at(&s.apply_at(&b.right_double(i), 2), 1).permute(&[0, 2, 1]), 0)
}

/// `Ad: C → B⊗C`, `Ad([c]) = c₍₁₎₍₁₎S(c₍₂₎)⊗[c₍₁₎₍₂₎]`, with `S` in place of
/// `S_B`. Fails with [`Error::IllDefined`] if the two bracketings disagree or
/// the formula does not vanish on `ker φ`; no further precondition is
/// checked.
pub fn ad_with_antipode(b: &HopfStructure, c: &HopfStructure, phi: &LinearMap, s: &LinearMap) -> Result<LinearMap> {
    let (sb, sc) = (b.space(), c.space());
    if phi.domain() != sb || phi.codomain() != sc || s.domain() != sb || s.codomain() != sb {
        return Err(Error::DomainMismatch(String::from("Ad needs φ: B → C and S: B → B")));
    }
    let cod = sb.tensor(sc);
    let left = LinearMap::from_fn(sb.clone(), cod.clone(), |i| ad_left(b, phi, s, i[0]))?;
    let right = LinearMap::from_fn(sb.clone(), cod.clone(), |i| ad_right(b, phi, s, i[0]))?;
    if let Some((i, _)) = left.first_difference(&right) {
        return Err(Error::IllDefined(alloc::format!(
            "Ad bracketings differ at {}",
            sb.label_of(&i)
        )));
    }
    for k in kernel(phi) {
        let v = left.apply(&k);
        if let Some((idx, _)) = v.leading() {
            return Err(Error::IllDefined(alloc::format!(
                "Ad depends on the representative: an element of ker φ maps to {}",
                cod.label_of(idx)
            )));
        }
    }
    let mut cols = Vec::new();
    for y in sc.indices() {
        let rep = preimage(phi, &Vector::basis(y.clone()))
            .ok_or_else(|| Error::PreconditionFailed(alloc::format!("φ does not reach {}", sc.label_of(&y))))?;
        cols.push((y, left.apply(&rep)));
    }
    LinearMap::from_columns(sc.clone(), cod, cols)
}

/// The adjoint coaction `Ad([c]) = c₍₁₎S_B(c₍₃₎)⊗[c₍₂₎]` of `B` on
/// `C = B/ker φ`, computed on representatives. Requires `B` quasi
/// coassociative over `(C, B, φ)`.
pub fn build_ad(b: &HopfStructure, c: &HopfStructure, phi: &LinearMap) -> Result<LinearMap> {
    let pair = CoassociativePairData::new(c.clone(), b.clone(), phi.clone())?;
    let q = check_quasi_coassociative(&pair);
    if let Some(f) = q.report.failures().next() {
        return Err(Error::PreconditionFailed(alloc::format!(
            "{} is not quasi coassociative over {}: {} fails",
            b.name(),
            c.name(),
            f.name
        )));
    }
    ad_with_antipode(b, c, phi, b.antipode())
}

/// The crossed comodule `(C, B, φ, Ad)` of a quasi coassociative `B`.
pub fn adjoint_crossed_comodule(pair: &CoassociativePairData) -> Result<CrossedComoduleData> {
    let ad = build_ad(&pair.b, &pair.a, &pair.phi)?;
    CrossedComoduleData::new(pair.clone(), ad)
}
