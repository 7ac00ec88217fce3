//! Hopf algebras, Hopf coquasigroups and Hopf quasigroups as structure
//! tensors, their standard builders, and exhaustive axiom checkers.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linear::{ix, Index, LinearMap, Space, Vector};
use crate::quasigroup::FiniteQuasigroup;
use crate::report::{check_identity, Check, Report};
use crate::scalar::{one, Scalar};

use super::algebra::{mul_tensors, Algebra};

/// Which axiom system a structure claims to satisfy. Checkers never trust
/// the claim; it only selects which checks apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Associative and coassociative with the usual antipode.
    HopfAlgebra,
    /// Associative; coproduct possibly non-coassociative.
    HopfCoquasigroup,
    /// Coassociative; product possibly nonassociative.
    HopfQuasigroup,
}

impl Claim {
    /// Stable name used in reports and wire formats.
    pub fn name(self) -> &'static str {
        match self {
            Claim::HopfAlgebra => "HopfAlgebra",
            Claim::HopfCoquasigroup => "HopfCoquasigroup",
            Claim::HopfQuasigroup => "HopfQuasigroup",
        }
    }

    /// Inverse of [`Claim::name`].
    pub fn from_name(name: &str) -> Option<Self> {
        [Claim::HopfAlgebra, Claim::HopfCoquasigroup, Claim::HopfQuasigroup].into_iter().find(|c| c.name() == name)
    }
}

/// `(m, 1, Δ, ε, S)` on one labeled basis, plus the claimed axiom system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfStructure {
    name: String,
    algebra: Algebra,
    delta: LinearMap,
    counit: LinearMap,
    antipode: LinearMap,
    claim: Claim,
}

impl HopfStructure {
    /// Assembles a structure, checking only that every map has the right
    /// domain and codomain.
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra,
        delta: LinearMap,
        counit: LinearMap,
        antipode: LinearMap,
        claim: Claim,
    ) -> Result<Self> {
        let space = algebra.space().clone();
        let expect = |what: &str, f: &LinearMap, dom: &Space, cod: &Space| {
            if f.domain() != dom || f.codomain() != cod {
                Err(Error::DomainMismatch(alloc::format!(
                    "{what} must map {dom} → {cod}, got {} → {}",
                    f.domain(),
                    f.codomain()
                )))
            } else {
                Ok(())
            }
        };
        expect("Δ", &delta, &space, &space.tensor(&space))?;
        expect("ε", &counit, &space, &Space::scalars())?;
        expect("S", &antipode, &space, &space)?;
        Ok(Self { name: name.into(), algebra, delta, counit, antipode, claim })
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The underlying algebra.
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// The underlying space.
    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Multiplication map.
    pub fn m(&self) -> &LinearMap {
        self.algebra.m()
    }

    /// Unit element.
    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    /// Coproduct.
    pub fn delta(&self) -> &LinearMap {
        &self.delta
    }

    /// Counit.
    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    /// Antipode.
    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    /// The claimed axiom system.
    pub fn claim(&self) -> Claim {
        self.claim
    }

    /// A copy with another name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Self { name: name.into(), ..self.clone() }
    }

    /// A copy with another claim.
    pub fn with_claim(&self, claim: Claim) -> Self {
        Self { claim, ..self.clone() }
    }

    /// A copy with another antipode.
    pub fn with_antipode(&self, antipode: LinearMap) -> Result<Self> {
        Self::new(self.name.clone(), self.algebra.clone(), self.delta.clone(), self.counit.clone(), antipode, self.claim)
    }

    /// A copy with another coproduct.
    pub fn with_delta(&self, delta: LinearMap) -> Result<Self> {
        Self::new(self.name.clone(), self.algebra.clone(), delta, self.counit.clone(), self.antipode.clone(), self.claim)
    }

    /// A copy with another counit.
    pub fn with_counit(&self, counit: LinearMap) -> Result<Self> {
        Self::new(self.name.clone(), self.algebra.clone(), self.delta.clone(), counit, self.antipode.clone(), self.claim)
    }

    /// `Δ(e_i)`.
    pub fn delta_of(&self, i: u16) -> Vector {
        self.delta.image(&[i])
    }

    /// `ε(e_i)`.
    pub fn counit_of(&self, i: u16) -> Scalar {
        self.counit.image(&[i]).coefficient(&[])
    }

    /// `S(e_i)`.
    pub fn antipode_of(&self, i: u16) -> Vector {
        self.antipode.image(&[i])
    }

    /// `Δ` applied to leg `offset`.
    pub fn delta_at(&self, v: &Vector, offset: usize) -> Vector {
        self.delta.apply_at(v, offset)
    }

    /// `ε` applied to leg `offset` (the leg disappears).
    pub fn counit_at(&self, v: &Vector, offset: usize) -> Vector {
        self.counit.apply_at(v, offset)
    }

    /// `S` applied to leg `offset`.
    pub fn antipode_at(&self, v: &Vector, offset: usize) -> Vector {
        self.antipode.apply_at(v, offset)
    }

    /// Product of legs `offset` and `offset + 1`.
    pub fn mul_at(&self, v: &Vector, offset: usize) -> Vector {
        self.algebra.mul_at(v, offset)
    }

    /// `(Δ⊗id)Δ(e_i)`.
    pub fn left_double(&self, i: u16) -> Vector {
        self.delta_at(&self.delta_of(i), 0)
    }

    /// `(id⊗Δ)Δ(e_i)`.
    pub fn right_double(&self, i: u16) -> Vector {
        self.delta_at(&self.delta_of(i), 1)
    }

    /// Whether `(Δ⊗id)Δ = (id⊗Δ)Δ`.
    pub fn is_coassociative(&self) -> bool {
        check_coassociativity(self).pass
    }

    /// Whether the product is associative.
    pub fn is_associative(&self) -> bool {
        check_associativity(&self.algebra).pass
    }

    /// Iterates basis indices `0..dim` as rank-1 multi-indices.
    pub fn basis_indices(&self) -> impl Iterator<Item = u16> {
        0..self.dim() as u16
    }
}

/// Label of the delta function on a quasigroup element: `e[…]` becomes
/// `f[…]`, any other label `x` becomes `δ[x]`.
pub fn function_label_of(element: &str) -> String {
    match element.strip_prefix("e[") {
        Some(rest) => alloc::format!("f[{rest}"),
        None => alloc::format!("δ[{element}]"),
    }
}

/// The function algebra `k[Q]`: basis `δ_g`, pointwise product, unit
/// `Σ δ_g`, `Δ(δ_g) = Σ_{hk=g} δ_h⊗δ_k`, `ε(δ_g) = [g = 1]`,
/// `S(δ_g) = δ_{g⁻¹}`. Claims to be a Hopf coquasigroup.
pub fn function_algebra(q: &FiniteQuasigroup) -> Result<HopfStructure> {
    if let Some(v) = q.validate().first() {
        return Err(Error::InvalidInput(alloc::format!("not a quasigroup: {v:?}")));
    }
    let labels = q.labels().iter().map(|l| function_label_of(l)).collect();
    let name = alloc::format!("k[{}]", q.labels().len());
    let space = Space::new(name.clone(), labels)?;
    let n = q.order() as u16;
    let unit = Vector::from_terms((0..n).map(|g| (ix(&[g]), one())));
    let algebra = Algebra::from_fn(space.clone(), unit, |g, h| {
        if g == h {
            Vector::basis(ix(&[g]))
        } else {
            Vector::zero()
        }
    })?;
    let mut delta_cols: Vec<Vector> = alloc::vec![Vector::zero(); n as usize];
    for h in 0..n {
        for k in 0..n {
            let g = q.mul(h as usize, k as usize);
            delta_cols[g].add_term(ix(&[h, k]), one());
        }
    }
    let delta = LinearMap::from_columns(
        space.clone(),
        space.tensor(&space),
        delta_cols.into_iter().enumerate().map(|(g, v)| (ix(&[g as u16]), v)),
    )?;
    let counit = LinearMap::from_columns(
        space.clone(),
        Space::scalars(),
        [(ix(&[q.unit() as u16]), Vector::basis(Index::new()))],
    )?;
    let antipode = LinearMap::from_fn(space.clone(), space.clone(), |g| Vector::basis(ix(&[q.inv(g[0] as usize) as u16])))?;
    HopfStructure::new(name, algebra, delta, counit, antipode, Claim::HopfCoquasigroup)
}

/// The quasigroup algebra `kQ`: table product, unit `e_1`, grouplike
/// coproduct `Δ(u) = u⊗u`, `ε(u) = 1`, `S(u) = u⁻¹`. Claims to be a Hopf
/// quasigroup.
pub fn linear_extension(q: &FiniteQuasigroup) -> Result<HopfStructure> {
    if let Some(v) = q.validate().first() {
        return Err(Error::InvalidInput(alloc::format!("not a quasigroup: {v:?}")));
    }
    let name = alloc::format!("k{}", q.labels().len());
    let space = Space::new(name.clone(), q.labels().to_vec())?;
    let unit = Vector::basis(ix(&[q.unit() as u16]));
    let algebra =
        Algebra::from_fn(space.clone(), unit, |g, h| Vector::basis(ix(&[q.mul(g as usize, h as usize) as u16])))?;
    let delta = LinearMap::from_fn(space.clone(), space.tensor(&space), |g| Vector::basis(ix(&[g[0], g[0]])))?;
    let counit = LinearMap::from_fn(space.clone(), Space::scalars(), |_| Vector::basis(Index::new()))?;
    let antipode = LinearMap::from_fn(space.clone(), space.clone(), |g| Vector::basis(ix(&[q.inv(g[0] as usize) as u16])))?;
    HopfStructure::new(name, algebra, delta, counit, antipode, Claim::HopfQuasigroup)
}

fn e(i: u16) -> Vector {
    Vector::basis(ix(&[i]))
}

fn scalar_vec(c: Scalar) -> Vector {
    Vector::term(Index::new(), c)
}

/// `x(yz) = (xy)z` on basis triples.
pub fn check_associativity(a: &Algebra) -> Check {
    let s = a.space();
    check_identity(
        "associativity",
        &s.power(3),
        s,
        |i| a.mul(&e(i[0]), &a.mul_basis(i[1], i[2])),
        |i| a.mul(&a.mul_basis(i[0], i[1]), &e(i[2])),
        None,
    )
}

/// `1x = x = x1` on basis elements.
pub fn check_unit(a: &Algebra) -> Check {
    let s = a.space();
    let left = check_identity("unit_left", s, s, |i| a.mul(a.unit(), &e(i[0])), |i| e(i[0]), None);
    if !left.pass {
        return left.renamed("unit");
    }
    check_identity("unit", s, s, |i| a.mul(&e(i[0]), a.unit()), |i| e(i[0]), None)
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ`.
pub fn check_coassociativity(h: &HopfStructure) -> Check {
    let s = h.space();
    check_identity("coassociativity", s, &s.power(3), |i| h.left_double(i[0]), |i| h.right_double(i[0]), None)
}

fn push_coalgebra_checks(h: &HopfStructure, r: &mut Report) {
    let s = h.space();
    let a = h.algebra();
    r.push(check_identity("counit_left", s, s, |i| h.counit_at(&h.delta_of(i[0]), 0), |i| e(i[0]), None));
    r.push(check_identity("counit_right", s, s, |i| h.counit_at(&h.delta_of(i[0]), 1), |i| e(i[0]), None));
    r.push(Check::from_bool(
        "delta_unital",
        h.delta.apply(a.unit()) == a.unit_power(2),
        "1",
        "Δ(1) ≠ 1⊗1",
    ));
    r.push(check_identity(
        "delta_multiplicative",
        &s.power(2),
        &s.power(2),
        |i| h.delta.apply(&a.mul_basis(i[0], i[1])),
        |i| mul_tensors(&[a, a], &h.delta_of(i[0]), &h.delta_of(i[1])),
        None,
    ));
    r.push(Check::from_bool(
        "counit_unital",
        h.counit.apply(a.unit()) == scalar_vec(one()),
        "1",
        "ε(1) ≠ 1",
    ));
    r.push(check_identity(
        "counit_multiplicative",
        &s.power(2),
        &Space::scalars(),
        |i| h.counit.apply(&a.mul_basis(i[0], i[1])),
        |i| scalar_vec(h.counit_of(i[0]) * h.counit_of(i[1])),
        None,
    ));
}

/// Verifies the Hopf coquasigroup axioms: associative unital algebra,
/// counital coproduct, `Δ` and `ε` algebra maps, and the four identities
/// `(m⊗id)(S⊗id⊗id)(id⊗Δ)Δ = 1⊗id = (m⊗id)(id⊗S⊗id)(id⊗Δ)Δ`,
/// `(id⊗m)(id⊗S⊗id)(Δ⊗id)Δ = id⊗1 = (id⊗m)(id⊗id⊗S)(Δ⊗id)Δ`.
pub fn check_hopf_coquasigroup(h: &HopfStructure) -> Report {
    let mut r = Report::new(alloc::format!("{} as Hopf coquasigroup", h.name));
    let a = h.algebra();
    let s = h.space();
    r.push(check_unit(a));
    r.push(check_associativity(a));
    push_coalgebra_checks(h, &mut r);
    let one_left = |i: &Index| a.unit().tensor(&e(i[0]));
    let one_right = |i: &Index| e(i[0]).tensor(a.unit());
    let s2 = s.power(2);
    r.push(check_identity(
        "antipode_left_1",
        s,
        &s2,
        |i| h.mul_at(&h.antipode_at(&h.right_double(i[0]), 0), 0),
        one_left,
        None,
    ));
    r.push(check_identity(
        "antipode_left_2",
        s,
        &s2,
        |i| h.mul_at(&h.antipode_at(&h.right_double(i[0]), 1), 0),
        one_left,
        None,
    ));
    r.push(check_identity(
        "antipode_right_1",
        s,
        &s2,
        |i| h.mul_at(&h.antipode_at(&h.left_double(i[0]), 1), 1),
        one_right,
        None,
    ));
    r.push(check_identity(
        "antipode_right_2",
        s,
        &s2,
        |i| h.mul_at(&h.antipode_at(&h.left_double(i[0]), 2), 1),
        one_right,
        None,
    ));
    r.note(alloc::format!("coassociative: {}", h.is_coassociative()));
    r
}

/// Verifies the Hopf quasigroup axioms: unital algebra, coassociative
/// counital coproduct, `Δ` and `ε` algebra maps, and
/// `m(id⊗m)(S⊗id⊗id)(Δ⊗id) = ε⊗id = m(id⊗m)(id⊗S⊗id)(Δ⊗id)`,
/// `m(m⊗id)(id⊗S⊗id)(id⊗Δ) = id⊗ε = m(m⊗id)(id⊗id⊗S)(id⊗Δ)`.
pub fn check_hopf_quasigroup(h: &HopfStructure) -> Report {
    let mut r = Report::new(alloc::format!("{} as Hopf quasigroup", h.name));
    let a = h.algebra();
    let s = h.space();
    r.push(check_unit(a));
    r.push(check_coassociativity(h));
    push_coalgebra_checks(h, &mut r);
    let s2 = s.power(2);
    let left_in = |i: &Index| h.delta_of(i[0]).tensor(&e(i[1]));
    let right_in = |i: &Index| e(i[0]).tensor(&h.delta_of(i[1]));
    let eps_left = |i: &Index| e(i[1]).scaled(&h.counit_of(i[0]));
    let eps_right = |i: &Index| e(i[0]).scaled(&h.counit_of(i[1]));
    r.push(check_identity(
        "antipode_left_1",
        &s2,
        s,
        |i| h.mul_at(&h.mul_at(&h.antipode_at(&left_in(i), 0), 1), 0),
        eps_left,
        None,
    ));
    r.push(check_identity(
        "antipode_left_2",
        &s2,
        s,
        |i| h.mul_at(&h.mul_at(&h.antipode_at(&left_in(i), 1), 1), 0),
        eps_left,
        None,
    ));
    r.push(check_identity(
        "antipode_right_1",
        &s2,
        s,
        |i| h.mul_at(&h.mul_at(&h.antipode_at(&right_in(i), 1), 0), 0),
        eps_right,
        None,
    ));
    r.push(check_identity(
        "antipode_right_2",
        &s2,
        s,
        |i| h.mul_at(&h.mul_at(&h.antipode_at(&right_in(i), 2), 0), 0),
        eps_right,
        None,
    ));
    r.note(alloc::format!("associative: {}", h.is_associative()));
    r
}

/// Verifies the Hopf algebra axioms, including `m(S⊗id)Δ = 1ε = m(id⊗S)Δ`.
pub fn check_hopf_algebra(h: &HopfStructure) -> Report {
    let mut r = Report::new(alloc::format!("{} as Hopf algebra", h.name));
    let a = h.algebra();
    let s = h.space();
    r.push(check_unit(a));
    r.push(check_associativity(a));
    r.push(check_coassociativity(h));
    push_coalgebra_checks(h, &mut r);
    let eta_eps = |i: &Index| a.unit().scaled(&h.counit_of(i[0]));
    r.push(check_identity("antipode_left", s, s, |i| h.mul_at(&h.antipode_at(&h.delta_of(i[0]), 0), 0), eta_eps, None));
    r.push(check_identity("antipode_right", s, s, |i| h.mul_at(&h.antipode_at(&h.delta_of(i[0]), 1), 0), eta_eps, None));
    r
}

/// Runs the checker matching the structure's claim.
pub fn check_claim(h: &HopfStructure) -> Report {
    match h.claim {
        Claim::HopfAlgebra => check_hopf_algebra(h),
        Claim::HopfCoquasigroup => check_hopf_coquasigroup(h),
        Claim::HopfQuasigroup => check_hopf_quasigroup(h),
    }
}

/// The standard antipode properties: `S(h₁)h₂ = ε(h)1 = h₁S(h₂)`,
/// `S(hh′) = S(h′)S(h)`, `Δ(S h) = S(h₂)⊗S(h₁)`, plus `S(1) = 1` and
/// `ε∘S = ε`. Requires the claimed axiom system to hold.
pub fn antipode_properties(h: &HopfStructure) -> Result<Report> {
    let pre = check_claim(h);
    if let Some(c) = pre.failures().next() {
        return Err(Error::PreconditionFailed(alloc::format!(
            "{} fails {} ({:?})",
            h.name,
            c.name,
            c.witness
        )));
    }
    let mut r = Report::new(alloc::format!("{} antipode properties", h.name));
    let a = h.algebra();
    let s = h.space();
    let eta_eps = |i: &Index| a.unit().scaled(&h.counit_of(i[0]));
    r.push(check_identity(
        "convolution_left",
        s,
        s,
        |i| h.mul_at(&h.antipode_at(&h.delta_of(i[0]), 0), 0),
        eta_eps,
        None,
    ));
    r.push(check_identity(
        "convolution_right",
        s,
        s,
        |i| h.mul_at(&h.antipode_at(&h.delta_of(i[0]), 1), 0),
        eta_eps,
        None,
    ));
    r.push(check_identity(
        "anti_multiplicative",
        &s.power(2),
        s,
        |i| h.antipode.apply(&a.mul_basis(i[0], i[1])),
        |i| a.mul(&h.antipode_of(i[1]), &h.antipode_of(i[0])),
        None,
    ));
    r.push(check_identity(
        "anti_comultiplicative",
        s,
        &s.power(2),
        |i| h.delta.apply(&h.antipode_of(i[0])),
        |i| h.antipode_at(&h.antipode_at(&h.delta_of(i[0]), 0), 1).permute(&[1, 0]),
        None,
    ));
    r.push(Check::from_bool("antipode_unital", h.antipode.apply(a.unit()) == *a.unit(), "1", "S(1) ≠ 1"));
    r.push(check_identity(
        "counit_preserved",
        s,
        &Space::scalars(),
        |i| h.counit.apply(&h.antipode_of(i[0])),
        |i| scalar_vec(h.counit_of(i[0])),
        None,
    ));
    Ok(r)
}
