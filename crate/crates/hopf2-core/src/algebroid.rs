//! Central Hopf algebroids: a left bialgebroid over a commutative base `B`
//! whose source and target maps land in the center, with an antipode.
//!
//! Balanced tensor products `H⊗_B H` are realized as quotients of `H⊗H` by
//! `h t(b)⊗h′ − h⊗s(b)h′`; every coring identity is compared in normal form.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hopf::{mul_tensors, Algebra, Claim, HopfStructure};
use crate::linear::{ix, Echelon, Index, LinearMap, QuotientSpace, Space, Vector};
use crate::report::{check_identity, Check, Report};

/// `H⊗_B H` and `H⊗_B H⊗_B H` as normal-form projections.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pair: QuotientSpace,
    p2: LinearMap,
    generators: Vec<Vector>,
}

impl BalancedTensor {
    /// The balanced square for the bimodule `b▷h◁b′ = s(b)t(b′)h`.
    pub fn new(h: &Algebra, s: &LinearMap, t: &LinearMap) -> Self {
        let generators = balanced_relations(h, s, t);
        let pair = QuotientSpace::new(h.space().power(2), generators.iter().cloned());
        let p2 = pair.projection_map();
        Self { pair, p2, generators }
    }

    /// The quotient `H⊗H → H⊗_B H`.
    pub fn pair(&self) -> &QuotientSpace {
        &self.pair
    }

    /// Relation generators `h t(b)⊗h′ − h⊗s(b)h′` over basis `h, h′, b`.
    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// Normal form in `H⊗_B H`.
    pub fn project(&self, v: &Vector) -> Vector {
        self.pair.project(v)
    }

    /// Normal form in `(H⊗_B H)⊗(H⊗_B H)` for a 4-tensor.
    pub fn project_double(&self, v: &Vector) -> Vector {
        self.p2.apply_at(&self.p2.apply_at(v, 0), 2)
    }

    /// The triple balanced product `H⊗_B H⊗_B H`.
    pub fn triple(&self) -> BalancedTriple {
        // H⊗R is sent by P₂⊗id into a space where it spans the remaining
        // relations; R⊗H is the kernel of P₂⊗id.
        let mut e = Echelon::new();
        let dim = self.pair.ambient().factor(0).dim() as u16;
        for g in &self.generators {
            for x in 0..dim {
                let v = Vector::basis(ix(&[x])).tensor(g);
                e.insert(&self.p2.apply_at(&v, 0));
            }
        }
        BalancedTriple { p2: self.p2.clone(), relations: e.into_reduced() }
    }
}

/// Normal forms in `H⊗_B H⊗_B H`: first `P₂` on legs 0–1, then reduction by
/// the projected relations on legs 1–2.
#[derive(Clone, Debug)]
pub struct BalancedTriple {
    p2: LinearMap,
    relations: Echelon,
}

impl BalancedTriple {
    /// Normal form of a 3-tensor.
    pub fn project(&self, v: &Vector) -> Vector {
        self.relations.reduce(&self.p2.apply_at(v, 0))
    }

    /// Dimension of the relation subspace after the first projection.
    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }
}

fn e(i: u16) -> Vector {
    Vector::basis(ix(&[i]))
}

/// `h t(b)⊗h′ − h⊗s(b)h′` for all basis `h, h′` of `H` and `b` of `B`.
pub fn balanced_relations(h: &Algebra, s: &LinearMap, t: &LinearMap) -> Vec<Vector> {
    let dh = h.dim() as u16;
    let db = s.domain().dim() as u16;
    let mut out = Vec::new();
    for b in 0..db {
        let sb = s.image(&[b]);
        let tb = t.image(&[b]);
        for x in 0..dh {
            let xt = h.mul(&e(x), &tb);
            for y in 0..dh {
                let v = xt.tensor(&e(y)).sub(&e(x).tensor(&h.mul(&sb, &e(y))));
                if !v.is_zero() {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// A central Hopf algebroid `(H, s, t, Δ, ε, S)` over a commutative base.
#[derive(Clone, Debug)]
pub struct CentralHopfAlgebroidData {
    /// The total algebra.
    pub h: Algebra,
    /// The base, a commutative Hopf coquasigroup; only its algebra is used here.
    pub b: HopfStructure,
    /// Source `B → H`.
    pub s: LinearMap,
    /// Target `B → H`.
    pub t: LinearMap,
    /// Coproduct `H → H⊗H`, read in `H⊗_B H`.
    pub delta: LinearMap,
    /// Counit `H → B`.
    pub eps: LinearMap,
    /// Antipode `H → H`.
    pub antipode: LinearMap,
    /// The balanced tensor square built from `s` and `t`.
    pub balanced: BalancedTensor,
}

impl CentralHopfAlgebroidData {
    /// Assembles the data, checking shapes and building `H⊗_B H`.
    pub fn new(
        h: Algebra,
        b: HopfStructure,
        s: LinearMap,
        t: LinearMap,
        delta: LinearMap,
        eps: LinearMap,
        antipode: LinearMap,
    ) -> Result<Self> {
        let (sh, sb) = (h.space().clone(), b.space().clone());
        let shapes = [
            ("s", &s, &sb, sh.clone()),
            ("t", &t, &sb, sh.clone()),
            ("Δ", &delta, &sh, sh.power(2)),
            ("ε", &eps, &sh, sb.clone()),
            ("S", &antipode, &sh, sh.clone()),
        ];
        for (name, f, dom, cod) in shapes {
            if f.domain() != dom || *f.codomain() != cod {
                return Err(Error::DomainMismatch(alloc::format!(
                    "{name} must map {dom} → {cod}, got {} → {}",
                    f.domain(),
                    f.codomain()
                )));
            }
        }
        let balanced = BalancedTensor::new(&h, &s, &t);
        Ok(Self { h, b, s, t, delta, eps, antipode, balanced })
    }

    /// The classical case `B = k`, `s = t = unit`, for a Hopf algebra `H`.
    pub fn over_ground_field(h: &HopfStructure) -> Result<Self> {
        let k = ground_field()?;
        let one_h = h.unit().clone();
        let s = LinearMap::from_fn(k.space().clone(), h.space().clone(), |_| one_h.clone())?;
        let eps = LinearMap::from_fn(h.space().clone(), k.space().clone(), |i| e(0).scaled(&h.counit_of(i[0])))?;
        Self::new(h.algebra().clone(), k, s.clone(), s, h.delta().clone(), eps, h.antipode().clone())
    }

    /// A copy with `s` and `t` exchanged (the balanced product is rebuilt).
    pub fn with_source_target_swapped(&self) -> Result<Self> {
        Self::new(
            self.h.clone(),
            self.b.clone(),
            self.t.clone(),
            self.s.clone(),
            self.delta.clone(),
            self.eps.clone(),
            self.antipode.clone(),
        )
    }

    /// A copy with another counit.
    pub fn with_eps(&self, eps: LinearMap) -> Result<Self> {
        Self { eps, ..self.clone() }.validated()
    }

    /// A copy with another antipode.
    pub fn with_antipode(&self, antipode: LinearMap) -> Result<Self> {
        Self { antipode, ..self.clone() }.validated()
    }

    /// A copy with another coproduct.
    pub fn with_delta(&self, delta: LinearMap) -> Result<Self> {
        Self { delta, ..self.clone() }.validated()
    }

    fn validated(self) -> Result<Self> {
        let sh = self.h.space();
        if self.eps.domain() != sh
            || self.eps.codomain() != self.b.space()
            || self.antipode.domain() != sh
            || self.antipode.codomain() != sh
            || self.delta.domain() != sh
            || *self.delta.codomain() != sh.power(2)
        {
            return Err(Error::DomainMismatch(String::from("replacement map has the wrong shape")));
        }
        Ok(self)
    }

    fn space(&self) -> &Space {
        self.h.space()
    }

    fn legs2(&self) -> [&Algebra; 2] {
        [&self.h, &self.h]
    }

    /// `s(ε(x))` for a vector `x` of `H`.
    fn s_eps(&self, x: &Vector) -> Vector {
        self.s.apply(&self.eps.apply(x))
    }

    fn t_eps(&self, x: &Vector) -> Vector {
        self.t.apply(&self.eps.apply(x))
    }

    /// Product in `H` of legs 0 and 1 of a 2-tensor.
    fn mu(&self, v: &Vector) -> Vector {
        self.h.mul_at(v, 0)
    }
}

/// The ground field `k` as a one-dimensional Hopf algebra.
pub fn ground_field() -> Result<HopfStructure> {
    let space = Space::new("k", alloc::vec![String::from("1")])?;
    let algebra = Algebra::from_fn(space.clone(), e(0), |_, _| e(0))?;
    let delta = LinearMap::from_fn(space.clone(), space.power(2), |_| Vector::basis(ix(&[0, 0])))?;
    let counit = LinearMap::from_fn(space.clone(), Space::scalars(), |_| Vector::basis(Index::new()))?;
    let antipode = LinearMap::identity(space.clone());
    HopfStructure::new("k", algebra, delta, counit, antipode, Claim::HopfAlgebra)
}

fn algebra_map_checks(r: &mut Report, name: &str, f: &LinearMap, dom: &Algebra, cod: &Algebra) {
    r.push(Check::from_bool(
        alloc::format!("{name}_unital"),
        f.apply(dom.unit()) == *cod.unit(),
        "1",
        alloc::format!("{name}(1) ≠ 1"),
    ));
    r.push(check_identity(
        &alloc::format!("{name}_multiplicative"),
        &dom.space().power(2),
        cod.space(),
        |i| f.apply(&dom.mul_basis(i[0], i[1])),
        |i| cod.mul(&f.image(&[i[0]]), &f.image(&[i[1]])),
        None,
    ));
}

/// Verifies the B-ring and B-coring structure: `B` commutative; `s`, `t`
/// unital algebra maps with central, mutually commuting images; `Δ` and
/// `ε` bimodule maps for `b▷h◁b′ = s(b)t(b′)h`; coassociativity in
/// `H⊗_B H⊗_B H`; both counit laws, each evaluated on representatives and
/// shown independent of the representative.
pub fn check_bring_coring(d: &CentralHopfAlgebroidData) -> Report {
    let mut r = Report::new("B-ring and B-coring");
    let sh = d.space();
    let sb = d.b.space();
    let ba = d.b.algebra();
    r.push(Check::from_bool("base_commutative", ba.is_commutative(), d.b.name(), "base algebra is not commutative"));
    algebra_map_checks(&mut r, "s", &d.s, ba, &d.h);
    algebra_map_checks(&mut r, "t", &d.t, ba, &d.h);
    for (name, f) in [("s_central", &d.s), ("t_central", &d.t)] {
        r.push(check_identity(
            name,
            &sb.tensor(sh),
            sh,
            |i| d.h.mul(&f.image(&[i[0]]), &e(i[1])),
            |i| d.h.mul(&e(i[1]), &f.image(&[i[0]])),
            None,
        ));
    }
    r.push(check_identity(
        "source_target_commute",
        &sb.power(2),
        sh,
        |i| d.h.mul(&d.s.image(&[i[0]]), &d.t.image(&[i[1]])),
        |i| d.h.mul(&d.t.image(&[i[1]]), &d.s.image(&[i[0]])),
        None,
    ));
    let q = |v: &Vector| d.balanced.project(v);
    r.push(check_identity(
        "delta_left_linear",
        &sb.tensor(sh),
        &sh.power(2),
        |i| d.delta.apply(&d.h.mul(&d.s.image(&[i[0]]), &e(i[1]))),
        |i| mul_tensors(&d.legs2(), &d.s.image(&[i[0]]).tensor(d.h.unit()), &d.delta.image(&[i[1]])),
        Some(&q),
    ));
    r.push(check_identity(
        "delta_right_linear",
        &sb.tensor(sh),
        &sh.power(2),
        |i| d.delta.apply(&d.h.mul(&d.t.image(&[i[0]]), &e(i[1]))),
        |i| mul_tensors(&d.legs2(), &d.h.unit().tensor(&d.t.image(&[i[0]])), &d.delta.image(&[i[1]])),
        Some(&q),
    ));
    r.push(check_identity(
        "eps_left_linear",
        &sb.tensor(sh),
        sb,
        |i| d.eps.apply(&d.h.mul(&d.s.image(&[i[0]]), &e(i[1]))),
        |i| ba.mul(&e(i[0]), &d.eps.image(&[i[1]])),
        None,
    ));
    r.push(check_identity(
        "eps_right_linear",
        &sb.tensor(sh),
        sb,
        |i| d.eps.apply(&d.h.mul(&d.t.image(&[i[0]]), &e(i[1]))),
        |i| ba.mul(&d.eps.image(&[i[1]]), &e(i[0])),
        None,
    ));
    let triple = d.balanced.triple();
    let q3 = |v: &Vector| triple.project(v);
    r.push(check_identity(
        "coassociativity",
        sh,
        &sh.power(3),
        |i| d.delta.apply_at(&d.delta.image(&[i[0]]), 0),
        |i| d.delta.apply_at(&d.delta.image(&[i[0]]), 1),
        Some(&q3),
    ));
    // Counit laws: x⊗y ↦ s(ε(x))y and x⊗y ↦ t(ε(y))x on H⊗_B H.
    let left = |v: &Vector| {
        let mut out = Vector::zero();
        for (idx, c) in v.iter() {
            out.add_scaled(&d.h.mul(&d.s_eps(&e(idx[0])), &e(idx[1])), c);
        }
        out
    };
    let right = |v: &Vector| {
        let mut out = Vector::zero();
        for (idx, c) in v.iter() {
            out.add_scaled(&d.h.mul(&d.t_eps(&e(idx[1])), &e(idx[0])), c);
        }
        out
    };
    r.push(check_identity("counit_left", sh, sh, |i| left(&d.delta.image(&[i[0]])), |i| e(i[0]), None));
    r.push(check_identity("counit_right", sh, sh, |i| right(&d.delta.image(&[i[0]])), |i| e(i[0]), None));
    r.push(well_defined("counit_left_well_defined", d, &left));
    r.push(well_defined("counit_right_well_defined", d, &right));
    r
}

/// A map on `H⊗H` descends to `H⊗_B H` iff it kills every relation generator.
fn well_defined(name: &str, d: &CentralHopfAlgebroidData, f: &dyn Fn(&Vector) -> Vector) -> Check {
    let sh = d.space();
    for g in d.balanced.generators() {
        let v = f(g);
        if !v.is_zero() {
            let input = g.leading().map(|(i, _)| sh.power(2).label_of(i)).unwrap_or_default();
            let entry = v.leading().map(|(i, _)| sh.label_of(i));
            return Check::fail(name, input, entry, "relation generator has nonzero image");
        }
    }
    Check::pass(name)
}

/// Verifies that `Δ(h)` lies in the Takeuchi product (`h₁t(b)⊗h₂ = h₁⊗h₂s(b)`
/// in `H⊗_B H`), that `Δ` is unital and multiplicative there, and that `ε`
/// is a unital left character: `ε(s(ε(a))a′) = ε(aa′) = ε(t(ε(a))a′)`,
/// `ε(s(b)a) = bε(a)`, plus `ε(aa′) = ε(a)ε(a′)`.
pub fn check_takeuchi(d: &CentralHopfAlgebroidData) -> Report {
    let mut r = Report::new("Takeuchi product and left character");
    let sh = d.space();
    let sb = d.b.space();
    let ba = d.b.algebra();
    let q = |v: &Vector| d.balanced.project(v);
    r.push(check_identity(
        "takeuchi",
        &sh.tensor(sb),
        &sh.power(2),
        |i| mul_tensors(&d.legs2(), &d.delta.image(&[i[0]]), &d.t.image(&[i[1]]).tensor(d.h.unit())),
        |i| mul_tensors(&d.legs2(), &d.delta.image(&[i[0]]), &d.h.unit().tensor(&d.s.image(&[i[1]]))),
        Some(&q),
    ));
    r.push(Check::from_bool(
        "delta_unital",
        q(&d.delta.apply(d.h.unit()).sub(&d.h.unit_power(2))).is_zero(),
        "1",
        "Δ(1) ≠ 1⊗1 in H⊗_B H",
    ));
    r.push(check_identity(
        "delta_multiplicative",
        &sh.power(2),
        &sh.power(2),
        |i| d.delta.apply(&d.h.mul_basis(i[0], i[1])),
        |i| mul_tensors(&d.legs2(), &d.delta.image(&[i[0]]), &d.delta.image(&[i[1]])),
        Some(&q),
    ));
    r.push(Check::from_bool("eps_unital", d.eps.apply(d.h.unit()) == *ba.unit(), "1", "ε(1) ≠ 1_B"));
    r.push(check_identity(
        "eps_source_linear",
        &sb.tensor(sh),
        sb,
        |i| d.eps.apply(&d.h.mul(&d.s.image(&[i[0]]), &e(i[1]))),
        |i| ba.mul(&e(i[0]), &d.eps.image(&[i[1]])),
        None,
    ));
    r.push(check_identity(
        "left_character_s",
        &sh.power(2),
        sb,
        |i| d.eps.apply(&d.h.mul(&d.s_eps(&e(i[0])), &e(i[1]))),
        |i| d.eps.apply(&d.h.mul_basis(i[0], i[1])),
        None,
    ));
    r.push(check_identity(
        "left_character_t",
        &sh.power(2),
        sb,
        |i| d.eps.apply(&d.h.mul(&d.t_eps(&e(i[0])), &e(i[1]))),
        |i| d.eps.apply(&d.h.mul_basis(i[0], i[1])),
        None,
    ));
    r.push(check_identity(
        "eps_multiplicative",
        &sh.power(2),
        sb,
        |i| d.eps.apply(&d.h.mul_basis(i[0], i[1])),
        |i| ba.mul(&d.eps.image(&[i[0]]), &d.eps.image(&[i[1]])),
        None,
    ));
    r
}

/// Verifies `S(t(b)hs(b′)) = t(b′)S(h)s(b)`, the antipode laws
/// `μ_L(S⊗id)Δ = t∘ε` and `μ_R(id⊗S)Δ = s∘ε` with both `μ_L(S⊗id)` and
/// `μ_R(id⊗S)` shown to descend to `H⊗_B H`, and `S∘s = t`, `S∘t = s`.
pub fn check_antipode(d: &CentralHopfAlgebroidData) -> Report {
    let mut r = Report::new("antipode");
    let sh = d.space();
    let sb = d.b.space();
    let sa = &d.antipode;
    r.push(check_identity(
        "twisted_bilinear",
        &sb.tensor(sh).tensor(sb),
        sh,
        |i| sa.apply(&d.h.mul(&d.h.mul(&d.t.image(&[i[0]]), &e(i[1])), &d.s.image(&[i[2]]))),
        |i| d.h.mul(&d.h.mul(&d.t.image(&[i[2]]), &sa.image(&[i[1]])), &d.s.image(&[i[0]])),
        None,
    ));
    let mu_l = |v: &Vector| d.mu(&sa.apply_at(v, 0));
    let mu_r = |v: &Vector| d.mu(&sa.apply_at(v, 1));
    r.push(well_defined("mu_l_well_defined", d, &mu_l));
    r.push(well_defined("mu_r_well_defined", d, &mu_r));
    r.push(check_identity("antipode_left", sh, sh, |i| mu_l(&d.delta.image(&[i[0]])), |i| d.t_eps(&e(i[0])), None));
    r.push(check_identity("antipode_right", sh, sh, |i| mu_r(&d.delta.image(&[i[0]])), |i| d.s_eps(&e(i[0])), None));
    r.push(check_identity("antipode_source", sb, sh, |i| sa.apply(&d.s.image(&[i[0]])), |i| d.t.image(&[i[0]]), None));
    r.push(check_identity("antipode_target", sb, sh, |i| sa.apply(&d.t.image(&[i[0]])), |i| d.s.image(&[i[0]]), None));
    r
}

/// All three algebroid reports, keyed `coring`, `takeuchi`, `antipode`.
pub fn check_central_hopf_algebroid(d: &CentralHopfAlgebroidData) -> Report {
    let mut r = Report::new("central Hopf algebroid");
    r.absorb("coring", check_bring_coring(d));
    r.absorb("takeuchi", check_takeuchi(d));
    r.absorb("antipode", check_antipode(d));
    r
}
