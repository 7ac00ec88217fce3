//! Verification of the coherent Hopf 2-algebra axioms (i)–(ix), the
//! antipode properties, strictness, and the cocommutation relation.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebroid::check_central_hopf_algebroid;
use crate::hopf::{check_claim, check_hopf_coquasigroup, mul_tensors, Algebra, HopfStructure};
use crate::linear::{pure_decomposition, LinearMap, Space, Vector};
use crate::report::{check_identity, Check, Report};

use super::bundle::CoherentHopf2Bundle;

/// Roman numerals of the nine axioms, in order.
pub const AXIOMS: [&str; 9] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"];

/// Per-axiom reports, plus a `layers` report for the three underlying
/// structures (`B` a commutative Hopf coquasigroup, `H` a Hopf
/// coquasigroup, `H` a central Hopf algebroid over `B`).
#[derive(Clone, Debug)]
pub struct CoherentReport {
    /// The underlying structures.
    pub layers: Report,
    /// `(numeral, report)` for axioms (i)–(ix).
    pub axioms: Vec<(&'static str, Report)>,
}

impl CoherentReport {
    /// The report of one axiom, by numeral.
    pub fn axiom(&self, numeral: &str) -> Option<&Report> {
        self.axioms.iter().find(|(n, _)| *n == numeral).map(|(_, r)| r)
    }

    /// Whether one axiom passes.
    pub fn axiom_passes(&self, numeral: &str) -> bool {
        self.axiom(numeral).is_some_and(Report::all_pass)
    }

    /// Whether the layers and all nine axioms pass.
    pub fn all_pass(&self) -> bool {
        self.layers.all_pass() && self.axioms.iter().all(|(_, r)| r.all_pass())
    }

    /// Everything flattened into one report, keyed `layers.*` and `axiom_<n>.*`.
    pub fn to_report(&self, subject: &str) -> Report {
        let mut r = Report::new(subject);
        r.absorb("layers", self.layers.clone());
        for (n, a) in &self.axioms {
            r.absorb(&alloc::format!("axiom_{n}"), a.clone());
        }
        r
    }
}

fn legs(a: &Algebra, k: usize) -> Vec<&Algebra> {
    (0..k).map(|_| a).collect()
}

/// `f(v)·y`, distributed over the columns of `f` so that no large
/// intermediate `f(v)` is formed.
fn mul_image_left(legs: &[&Algebra], f: &LinearMap, v: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (i, c) in v.iter() {
        if let Some(col) = f.column(i) {
            out.add_scaled(&mul_tensors(legs, col, y), c);
        }
    }
    out
}

/// Applies `f` to each of the first `k` legs.
fn each_leg(f: &LinearMap, v: &Vector, k: usize) -> Vector {
    (0..k).fold(v.clone(), |acc, j| f.apply_at(&acc, j))
}

/// Unital, multiplicative, comultiplicative, counital and antipode-preserving.
fn morphism_checks(r: &mut Report, name: &str, f: &LinearMap, dom: &HopfStructure, cod: &HopfStructure) {
    let (sd, sc) = (dom.space(), cod.space());
    r.push(Check::from_bool(
        alloc::format!("{name}_unital"),
        f.apply(dom.unit()) == *cod.unit(),
        "1",
        alloc::format!("{name}(1) ≠ 1"),
    ));
    r.push(check_identity(
        &alloc::format!("{name}_multiplicative"),
        &sd.power(2),
        sc,
        |i| f.apply(&dom.algebra().mul_basis(i[0], i[1])),
        |i| cod.algebra().mul(&f.image(&[i[0]]), &f.image(&[i[1]])),
        None,
    ));
    r.push(check_identity(
        &alloc::format!("{name}_comultiplicative"),
        sd,
        &sc.power(2),
        |i| cod.delta().apply(&f.image(i)),
        |i| f.apply_at(&f.apply_at(&dom.delta_of(i[0]), 0), 1),
        None,
    ));
    r.push(check_identity(
        &alloc::format!("{name}_counital"),
        sd,
        &Space::scalars(),
        |i| cod.counit().apply(&f.image(i)),
        |i| dom.counit().image(i),
        None,
    ));
    r.push(check_identity(
        &alloc::format!("{name}_antipode"),
        sd,
        sc,
        |i| cod.antipode().apply(&f.image(i)),
        |i| f.apply(&dom.antipode_of(i[0])),
        None,
    ));
}

/// `(Δ⊗Δ)∘▲ = (id⊗τ⊗id)∘(▲⊗▲)∘Δ` compared in `(H⊗_B H)⊗(H⊗_B H)`.
///
/// The left side is `(P₂Δ⊗P₂Δ)∘▲` with `P₂` the normal-form projection of
/// `H⊗_B H`. On the right, `Δ(h)`, `▲(u)` and `▲(w)` are split into pure
/// tensors, so `P₂⊗P₂` is only ever applied to `(x₁⊗y₁)⊗(x₂⊗y₂)`.
fn check_cocommutation(bundle: &CoherentHopf2Bundle) -> Check {
    let h = &bundle.hopf;
    let d = &bundle.algebroid;
    let sh = h.space();
    let bal = &d.balanced;
    let pdelta = LinearMap::from_fn(sh.clone(), sh.power(2), |i| bal.project(&d.delta.image(i))).expect("lands in H⊗H");
    let q = |v: &Vector| bal.project_double(v);
    check_identity(
        "cocommutation",
        sh,
        &sh.power(4),
        |i| pdelta.apply_at(&pdelta.apply_at(&h.delta_of(i[0]), 1), 0),
        |i| {
            let mut out = Vector::zero();
            for (u, w) in pure_decomposition(&d.delta.image(i), 1) {
                let tu = pure_decomposition(&h.delta().apply(&u), 1);
                let tw = pure_decomposition(&h.delta().apply(&w), 1);
                for (x1, x2) in &tu {
                    for (y1, y2) in &tw {
                        let left = bal.project(&x1.tensor(y1));
                        if left.is_zero() {
                            continue;
                        }
                        out.add_assign(&left.tensor(&bal.project(&x2.tensor(y2))));
                    }
                }
            }
            out
        },
        Some(&q),
    )
}

/// The cocommutation relation `(Δ⊗Δ)∘▲ = (id⊗τ⊗id)∘(▲⊗_B▲)∘Δ`, compared
/// in `(H⊗_B H)⊗(H⊗_B H)`.
pub fn check_lemma54(bundle: &CoherentHopf2Bundle) -> bool {
    check_cocommutation(bundle).pass
}

fn layers(bundle: &CoherentHopf2Bundle) -> Report {
    let mut r = Report::new("underlying structures");
    r.push(Check::from_bool(
        "b_commutative",
        bundle.b.algebra().is_commutative(),
        bundle.b.name(),
        "B is not commutative",
    ));
    r.absorb("b", check_hopf_coquasigroup(&bundle.b));
    r.absorb("h", check_claim(&bundle.hopf));
    r.absorb("algebroid", check_central_hopf_algebroid(&bundle.algebroid));
    r
}

/// Everything the axiom bodies share.
struct Ctx<'a> {
    bundle: &'a CoherentHopf2Bundle,
    h: &'a HopfStructure,
    b: &'a HopfStructure,
    d: &'a crate::algebroid::CentralHopfAlgebroidData,
}

impl<'a> Ctx<'a> {
    fn new(bundle: &'a CoherentHopf2Bundle) -> Self {
        Self { bundle, h: &bundle.hopf, b: &bundle.b, d: &bundle.algebroid }
    }

    /// `(ε⊗ε)∘▲`.
    fn eps2(&self, i: u16) -> Vector {
        let eps = &self.d.eps;
        eps.apply_at(&eps.apply_at(&self.h.delta_of(i), 0), 1)
    }
}

/// The underlying structures: `B` a commutative Hopf coquasigroup, `H` a
/// Hopf coquasigroup (or whatever its claim says), `H` a central Hopf
/// algebroid over `B`.
pub fn check_layers(bundle: &CoherentHopf2Bundle) -> Report {
    layers(bundle)
}

/// One axiom of (i)–(ix), by numeral. Axioms (v)–(ix) fail with an
/// explanatory witness if `α` has not been built; an unknown numeral yields
/// a failing report. (viii) and (ix) are checked at the level of
/// representatives of `Δ`, exactly as their expanded displays; the triple
/// legs in (ix) are `(Δ⊗id)Δ`, and their equality with `(id⊗Δ)Δ` on
/// representatives is reported alongside.
pub fn check_axiom(bundle: &CoherentHopf2Bundle, numeral: &str) -> Report {
    let c = Ctx::new(bundle);
    let alpha = bundle.alpha.as_ref();
    match (numeral, alpha) {
        ("i", _) => axiom_i(&c),
        ("ii", _) => axiom_ii(&c),
        ("iii", _) => axiom_iii(&c),
        ("iv", _) => axiom_iv(&c),
        ("v", Some(a)) => axiom_v(&c, a),
        ("vi", Some(a)) => axiom_vi(&c, a),
        ("vii", Some(a)) => axiom_vii(&c, a),
        ("viii", Some(a)) => axiom_viii(&c, a),
        ("ix", Some(a)) => axiom_ix(&c, a),
        (n, None) if AXIOMS.contains(&n) => {
            let mut r = Report::new("coassociator");
            r.push(Check::fail("alpha_present", bundle.name(), None, "α has not been built"));
            r
        }
        (n, _) => {
            let mut r = Report::new("unknown axiom");
            r.push(Check::fail("axiom_known", n, None, "not one of i–ix"));
            r
        }
    }
}

/// Verifies the underlying structures and axioms (i)–(ix).
pub fn check_coherent_axioms(bundle: &CoherentHopf2Bundle) -> CoherentReport {
    let axioms = AXIOMS.iter().map(|n| (*n, check_axiom(bundle, n))).collect();
    CoherentReport { layers: layers(bundle), axioms }
}

fn axiom_i(c: &Ctx) -> Report {
    let (h, d) = (c.h, c.d);
    let mut r = Report::new("shared algebra");
    r.push(Check::from_bool("shared_product", h.m() == d.h.m(), h.name(), "the two layers multiply differently"));
    r.push(Check::from_bool("shared_unit", h.unit() == d.h.unit(), "1", "the two layers have different units"));
    r
}

fn axiom_ii(c: &Ctx) -> Report {
    let mut r = Report::new("ε is a Hopf coquasigroup morphism");
    morphism_checks(&mut r, "eps", &c.d.eps, c.h, c.b);
    r
}

fn axiom_iii(c: &Ctx) -> Report {
    let mut r = Report::new("s, t are Hopf coquasigroup morphisms");
    morphism_checks(&mut r, "s", &c.d.s, c.b, c.h);
    morphism_checks(&mut r, "t", &c.d.t, c.b, c.h);
    r
}

fn axiom_iv(c: &Ctx) -> Report {
    let mut r = Report::new("cocommutation of Δ and ▲");
    r.push(check_cocommutation(c.bundle));
    r
}

fn axiom_v(c: &Ctx, alpha: &LinearMap) -> Report {
    let (h, b, d) = (c.h, c.b, c.d);
    let (sh, sb) = (h.space(), b.space());
    let s3 = sb.power(3);
    let ba = b.algebra();
    let mut r = Report::new("α∘t and α∘s");
    r.push(check_identity("alpha_target", sb, &s3, |i| alpha.apply(&d.t.image(i)), |i| b.left_double(i[0]), None));
    r.push(check_identity("alpha_source", sb, &s3, |i| alpha.apply(&d.s.image(i)), |i| b.right_double(i[0]), None));
    r.push(Check::from_bool("alpha_unital", alpha.apply(h.unit()) == ba.unit_power(3), "1", "α(1) ≠ 1⊗1⊗1"));
    r.push(check_identity(
        "alpha_multiplicative",
        &sh.power(2),
        &s3,
        |i| alpha.apply(&h.algebra().mul_basis(i[0], i[1])),
        |i| mul_tensors(&legs(ba, 3), &alpha.image(&[i[0]]), &alpha.image(&[i[1]])),
        None,
    ));
    r
}

fn axiom_vi(c: &Ctx, alpha: &LinearMap) -> Report {
    let (b, sh) = (c.b, c.h.space());
    let s3 = b.space().power(3);
    let one = b.unit();
    let mut r = Report::new("counit legs of α");
    r.push(check_identity(
        "counit_leg_1",
        sh,
        &s3,
        |i| one.tensor(&b.counit_at(&alpha.image(i), 0)),
        |i| one.tensor(&c.eps2(i[0])),
        None,
    ));
    r.push(check_identity(
        "counit_leg_2",
        sh,
        &s3,
        |i| b.counit_at(&alpha.image(i), 1).tensor(one).permute(&[0, 2, 1]),
        |i| c.eps2(i[0]).tensor(one).permute(&[0, 2, 1]),
        None,
    ));
    r.push(check_identity(
        "counit_leg_3",
        sh,
        &s3,
        |i| b.counit_at(&alpha.image(i), 2).tensor(one),
        |i| c.eps2(i[0]).tensor(one),
        None,
    ));
    r
}

fn axiom_vii(c: &Ctx, alpha: &LinearMap) -> Report {
    let (b, d, sh) = (c.b, c.d, c.h.space());
    let s2 = b.space().power(2);
    let one = b.unit();
    let one_eps = |i: &[u16]| one.tensor(&d.eps.image(i));
    let eps_one = |i: &[u16]| d.eps.image(i).tensor(one);
    let mut r = Report::new("antipode legs of α");
    r.push(check_identity(
        "antipode_12_right",
        sh,
        &s2,
        |i| b.mul_at(&b.antipode_at(&alpha.image(i), 1), 0),
        |i| one_eps(i),
        None,
    ));
    r.push(check_identity(
        "antipode_12_left",
        sh,
        &s2,
        |i| b.mul_at(&b.antipode_at(&alpha.image(i), 0), 0),
        |i| one_eps(i),
        None,
    ));
    r.push(check_identity(
        "antipode_23_left",
        sh,
        &s2,
        |i| b.mul_at(&b.antipode_at(&alpha.image(i), 1), 1),
        |i| eps_one(i),
        None,
    ));
    r.push(check_identity(
        "antipode_23_right",
        sh,
        &s2,
        |i| b.mul_at(&b.antipode_at(&alpha.image(i), 2), 1),
        |i| eps_one(i),
        None,
    ));
    r
}

/// `Δ(h) = Σ u_k⊗w_k` with the fewest pure terms. The displays of (viii)
/// and (ix) are multilinear in the legs of `Δ(h)`, so evaluating them on
/// this decomposition equals evaluating them on the expanded representative.
fn delta_pure(d: &crate::algebroid::CentralHopfAlgebroidData, i: u16) -> Vec<(Vector, Vector)> {
    pure_decomposition(&d.delta.image(&[i]), 1)
}

fn axiom_viii(c: &Ctx, alpha: &LinearMap) -> Report {
    let (h, d, sh) = (c.h, c.d, c.h.space());
    let h3 = legs(h.algebra(), 3);
    let s3 = sh.power(3);
    // The four leg maps H → H⊗H⊗H, tabulated once.
    let tab = |f: &dyn Fn(u16) -> Vector| LinearMap::from_fn(sh.clone(), s3.clone(), |i| f(i[0])).expect("lands in H⊗H⊗H");
    let s_alpha = tab(&|i| each_leg(&d.s, &alpha.image(&[i]), 3));
    let t_alpha = tab(&|i| each_leg(&d.t, &alpha.image(&[i]), 3));
    let left = tab(&|i| h.left_double(i));
    let right = tab(&|i| h.right_double(i));
    let mut r = Report::new("naturality of α");
    r.push(check_identity(
        "naturality_representatives",
        sh,
        &s3,
        |i| {
            let mut out = Vector::zero();
            for (u, w) in delta_pure(d, i[0]) {
                out.add_assign(&mul_image_left(&h3, &s_alpha, &u, &left.apply(&w)));
            }
            out
        },
        |i| {
            let mut out = Vector::zero();
            for (u, w) in delta_pure(d, i[0]) {
                out.add_assign(&mul_image_left(&h3, &right, &u, &t_alpha.apply(&w)));
            }
            out
        },
        None,
    ));
    r
}

fn axiom_ix(c: &Ctx, alpha: &LinearMap) -> Report {
    let (h, b, d, sh) = (c.h, c.b, c.d, c.h.space());
    let b4 = legs(b.algebra(), 4);
    let s4 = b.space().power(4);
    let tab = |f: &dyn Fn(u16) -> Vector| LinearMap::from_fn(sh.clone(), s4.clone(), |i| f(i[0])).expect("lands in B⊗⁴");
    // The five leg maps H → B⊗⁴, tabulated once:
    // (ε⊗α)∘▲, (id⊗Δ_B⊗id)∘α, (α⊗ε)∘▲, (id⊗id⊗Δ_B)∘α, (Δ_B⊗id⊗id)∘α.
    let eps_alpha = tab(&|i| d.eps.apply_at(&alpha.apply_at(&h.delta_of(i), 1), 0));
    let mid = tab(&|i| b.delta_at(&alpha.image(&[i]), 1));
    let alpha_eps = tab(&|i| alpha.apply_at(&d.eps.apply_at(&h.delta_of(i), 1), 0));
    let last = tab(&|i| b.delta_at(&alpha.image(&[i]), 2));
    let first = tab(&|i| b.delta_at(&alpha.image(&[i]), 0));
    let mut r = Report::new("3-cocycle condition");
    r.push(check_identity(
        "delta_coassociative_representatives",
        sh,
        &sh.power(3),
        |i| d.delta.apply_at(&d.delta.image(i), 0),
        |i| d.delta.apply_at(&d.delta.image(i), 1),
        None,
    ));
    // Triple legs (Δ⊗id)Δ(h) = Σ p⊗q⊗w, with Δ(u) = Σ p⊗q for each pure u⊗w.
    r.push(check_identity(
        "cocycle_representatives",
        sh,
        &s4,
        |i| {
            let mut out = Vector::zero();
            for (u, w) in delta_pure(d, i[0]) {
                let z = alpha_eps.apply(&w);
                for (p, q) in pure_decomposition(&d.delta.apply(&u), 1) {
                    // (ε⊗α)▲(p) · ((id⊗Δ_B⊗id)α(q) · z): the small factor
                    // z is absorbed first, using only associativity of B.
                    let qz = mul_image_left(&b4, &mid, &q, &z);
                    out.add_assign(&mul_image_left(&b4, &eps_alpha, &p, &qz));
                }
            }
            out
        },
        |i| {
            let mut out = Vector::zero();
            for (u, w) in delta_pure(d, i[0]) {
                out.add_assign(&mul_image_left(&b4, &last, &u, &first.apply(&w)));
            }
            out
        },
        None,
    ));
    r
}

/// The antipode properties: `Δ∘S_H = (S_H⊗_B S_H)∘Δ` in `H⊗_B H`;
/// `▲∘S = (S⊗S)∘▲` and `ε_H∘S = ε_H`; and, when `H` is commutative,
/// `S∘S_H = S_H∘S`.
pub fn check_prop42(bundle: &CoherentHopf2Bundle) -> Report {
    let h = &bundle.hopf;
    let d = &bundle.algebroid;
    let sh = h.space();
    let sa = h.antipode();
    let q = |v: &Vector| d.balanced.project(v);
    let mut r = Report::new(alloc::format!("antipode properties of {}", h.name()));
    r.push(check_identity(
        "delta_antipode",
        sh,
        &sh.power(2),
        |i| d.delta.apply(&h.antipode_of(i[0])),
        |i| each_leg(sa, &d.delta.image(i), 2),
        Some(&q),
    ));
    r.push(check_identity(
        "algebroid_antipode_comultiplicative",
        sh,
        &sh.power(2),
        |i| h.delta().apply(&d.antipode.image(i)),
        |i| each_leg(&d.antipode, &h.delta_of(i[0]), 2),
        None,
    ));
    r.push(check_identity(
        "algebroid_antipode_counital",
        sh,
        &Space::scalars(),
        |i| h.counit().apply(&d.antipode.image(i)),
        |i| h.counit().image(i),
        None,
    ));
    if h.algebra().is_commutative() {
        r.push(check_identity(
            "antipodes_commute",
            sh,
            sh,
            |i| d.antipode.apply(&h.antipode_of(i[0])),
            |i| sa.apply(&d.antipode.image(i)),
            None,
        ));
    } else {
        r.note(String::from("H is not commutative; S∘S_H = S_H∘S is not asserted"));
    }
    r
}

/// Whether `▲` and `Δ_B` are coassociative and `α = (ε⊗ε⊗ε)∘(▲⊗id)∘▲`.
pub fn check_strict(bundle: &CoherentHopf2Bundle) -> bool {
    bundle.hopf.is_coassociative()
        && bundle.b.is_coassociative()
        && bundle.alpha.as_ref().is_some_and(|a| *a == bundle.strict_alpha())
}
