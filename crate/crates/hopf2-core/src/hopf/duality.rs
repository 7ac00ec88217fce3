//! Dual pairings between a Hopf coquasigroup and a Hopf quasigroup, the
//! nucleus `N_A`, its annihilator ideal `I_B`, quotient Hopf structures and
//! the dual coassociator `β*`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linear::{ix, kernel, rank, Index, LinearMap, QuotientSpace, Space, Subspace, Vector};
use crate::quasigroup::FiniteQuasigroup;
use crate::report::{check_identity, Check, Report};
use crate::scalar::Scalar;

use super::algebra::Algebra;
use super::coassoc::coassociator_beta;
use super::structure::{
    check_associativity, check_coassociativity, check_hopf_quasigroup, function_algebra, linear_extension, Claim,
    HopfStructure,
};

/// A bilinear pairing `⟨·,·⟩: B⊗A → k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPairingData {
    /// The coquasigroup side.
    pub b: HopfStructure,
    /// The quasigroup side.
    pub a: HopfStructure,
    /// The pairing as a map `B⊗A → k`.
    pub pairing: LinearMap,
}

impl DualPairingData {
    /// Assembles a pairing, checking only its shape.
    pub fn new(b: HopfStructure, a: HopfStructure, pairing: LinearMap) -> Result<Self> {
        if *pairing.domain() != b.space().tensor(a.space()) || *pairing.codomain() != Space::scalars() {
            return Err(Error::DomainMismatch(alloc::format!(
                "pairing must map {}⊗{} → 1, got {} → {}",
                b.space(),
                a.space(),
                pairing.domain(),
                pairing.codomain()
            )));
        }
        Ok(Self { b, a, pairing })
    }

    /// `⟨e_x, e_y⟩`.
    pub fn value(&self, x: u16, y: u16) -> Scalar {
        self.pairing.image(&[x, y]).coefficient(&[])
    }

    /// `⟨β, α⟩` for tensors `β ∈ B^{⊗k}`, `α ∈ A^{⊗k}`, paired legwise.
    pub fn pair_tensors(&self, beta: &Vector, alpha: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in beta.iter() {
            for (j, d) in alpha.iter() {
                let mut w = c * d;
                for (x, y) in i.iter().zip(j.iter()) {
                    if w.is_zero() {
                        break;
                    }
                    w *= self.value(*x, *y);
                }
                acc += w;
            }
        }
        acc
    }

    /// The map `B → A`, `e_x ↦ Σ_y ⟨e_x, e_y⟩ e_y`.
    pub fn as_map(&self) -> LinearMap {
        LinearMap::from_fn(self.b.space().clone(), self.a.space().clone(), |x| {
            Vector::from_terms(self.a.basis_indices().map(|y| (ix(&[y]), self.value(x[0], y))))
        })
        .expect("pairing rows live on A")
    }

    /// The map `A → B`, `e_y ↦ Σ_x ⟨e_x, e_y⟩ e_x`.
    pub fn transpose_map(&self) -> LinearMap {
        LinearMap::from_fn(self.a.space().clone(), self.b.space().clone(), |y| {
            Vector::from_terms(self.b.basis_indices().map(|x| (ix(&[x]), self.value(x, y[0]))))
        })
        .expect("pairing columns live on B")
    }

    /// Whether the pairing matrix is invertible.
    pub fn is_nondegenerate(&self) -> bool {
        self.a.dim() == self.b.dim() && rank(&self.as_map()) == self.b.dim()
    }
}

/// The evaluation pairing `⟨δ_g, h⟩ = [g = h]` between `k[Q]` and `kQ`.
pub fn canonical_pairing(q: &FiniteQuasigroup) -> Result<DualPairingData> {
    let b = function_algebra(q)?;
    let a = linear_extension(q)?;
    let pairing = LinearMap::from_fn(b.space().tensor(a.space()), Space::scalars(), |i| {
        if i[0] == i[1] {
            Vector::basis(Index::new())
        } else {
            Vector::zero()
        }
    })?;
    DualPairingData::new(b, a, pairing)
}

fn scalar_vec(c: Scalar) -> Vector {
    Vector::term(Index::new(), c)
}

/// Verifies `⟨Δ_B b, a⊗a′⟩ = ⟨b, aa′⟩`, `⟨b⊗b′, Δ_A a⟩ = ⟨bb′, a⟩`,
/// `ε_B(b) = ⟨b, 1_A⟩`, `ε_A(a) = ⟨1_B, a⟩`, `⟨S b, a⟩ = ⟨b, S a⟩` and
/// nondegeneracy.
pub fn check_pairing(p: &DualPairingData) -> Report {
    let mut r = Report::new(alloc::format!("⟨{}, {}⟩", p.b.name(), p.a.name()));
    let (sa, sb) = (p.a.space(), p.b.space());
    let k = Space::scalars();
    let e = |i: u16| Vector::basis(ix(&[i]));
    r.push(check_identity(
        "coproduct_b",
        &sb.tensor(sa).tensor(sa),
        &k,
        |i| scalar_vec(p.pair_tensors(&p.b.delta_of(i[0]), &Vector::basis(ix(&[i[1], i[2]])))),
        |i| scalar_vec(p.pair_tensors(&e(i[0]), &p.a.algebra().mul_basis(i[1], i[2]))),
        None,
    ));
    r.push(check_identity(
        "coproduct_a",
        &sb.tensor(sb).tensor(sa),
        &k,
        |i| scalar_vec(p.pair_tensors(&Vector::basis(ix(&[i[0], i[1]])), &p.a.delta_of(i[2]))),
        |i| scalar_vec(p.pair_tensors(&p.b.algebra().mul_basis(i[0], i[1]), &e(i[2]))),
        None,
    ));
    r.push(check_identity(
        "counit_b",
        sb,
        &k,
        |i| scalar_vec(p.b.counit_of(i[0])),
        |i| scalar_vec(p.pair_tensors(&e(i[0]), p.a.unit())),
        None,
    ));
    r.push(check_identity(
        "counit_a",
        sa,
        &k,
        |i| scalar_vec(p.a.counit_of(i[0])),
        |i| scalar_vec(p.pair_tensors(p.b.unit(), &e(i[0]))),
        None,
    ));
    r.push(check_identity(
        "antipode",
        &sb.tensor(sa),
        &k,
        |i| scalar_vec(p.pair_tensors(&p.b.antipode_of(i[0]), &e(i[1]))),
        |i| scalar_vec(p.pair_tensors(&e(i[0]), &p.a.antipode_of(i[1]))),
        None,
    ));
    r.push(Check::from_bool("nondegenerate", p.is_nondegenerate(), "pairing matrix", "pairing matrix is singular"));
    r
}

/// The nucleus of a Hopf quasigroup, as solved and as used.
#[derive(Clone, Debug)]
pub struct NucleusReport {
    /// All `a` with `a(uv) = (au)v`, `u(av) = (ua)v`, `u(va) = (uv)a` for
    /// basis `u, v`.
    pub solution: Subspace,
    /// Labels of the basis elements lying in `solution`.
    pub labels_inside: Vec<String>,
    /// Whether `Δ(solution) ⊆ solution⊗solution`.
    pub delta_closed: bool,
    /// The largest subcoalgebra of `solution`: the limit of
    /// `N₀ = solution`, `N_{k+1} = {x ∈ N_k : Δx ∈ N_k⊗N_k}`.
    pub core: Subspace,
}

fn tensor_square(space: &Space, basis: &[Vector]) -> Subspace {
    let mut vs = Vec::with_capacity(basis.len() * basis.len());
    for x in basis {
        for y in basis {
            vs.push(x.tensor(y));
        }
    }
    Subspace::span(space.power(2), vs)
}

/// Coordinate space `k^n` with labels `c0, c1, …`.
fn coordinates(n: usize) -> Result<Space> {
    Space::new("coords", (0..n).map(|i| alloc::format!("c{i}")).collect())
}

fn combine(basis: &[Vector], coeffs: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (j, c) in coeffs.iter() {
        out.add_scaled(&basis[j[0] as usize], c);
    }
    out
}

/// Solves for the nucleus of a Hopf quasigroup by exact elimination, and
/// reports its labels, Δ-closure and largest subcoalgebra.
pub fn nucleus_na(a: &HopfStructure) -> Result<NucleusReport> {
    if a.claim() != Claim::HopfQuasigroup && a.claim() != Claim::HopfAlgebra {
        return Err(Error::PreconditionFailed(alloc::format!("{} does not claim to be a Hopf quasigroup", a.name())));
    }
    let s = a.space();
    let alg = a.algebra();
    let tags = Space::new("position", ["left", "middle", "right"].into_iter().map(String::from).collect())?;
    let codomain = s.power(2).tensor(&tags).tensor(s);
    let e = |i: u16| Vector::basis(ix(&[i]));
    let system = LinearMap::from_fn(s.clone(), codomain, |x| {
        let x = e(x[0]);
        let mut out = Vector::zero();
        for u in a.basis_indices() {
            for v in a.basis_indices() {
                let (eu, ev) = (e(u), e(v));
                let conds = [
                    alg.mul(&x, &alg.mul_basis(u, v)).sub(&alg.mul(&alg.mul(&x, &eu), &ev)),
                    alg.mul(&eu, &alg.mul(&x, &ev)).sub(&alg.mul(&alg.mul(&eu, &x), &ev)),
                    alg.mul(&eu, &alg.mul(&ev, &x)).sub(&alg.mul(&alg.mul_basis(u, v), &x)),
                ];
                for (t, c) in conds.iter().enumerate() {
                    let prefix = Vector::basis(ix(&[u, v, t as u16]));
                    out.add_assign(&prefix.tensor(c));
                }
            }
        }
        out
    })?;
    let solution = Subspace::span(s.clone(), kernel(&system));
    let labels_inside = solution.basis_labels_inside().iter().map(|i| s.label_of(i)).collect();
    let delta_closed = {
        let sq = tensor_square(s, solution.basis());
        solution.basis().iter().all(|x| sq.contains(&a.delta().apply(x)))
    };
    let mut core = solution.clone();
    loop {
        let basis = core.basis().to_vec();
        let q = QuotientSpace::new(s.power(2), tensor_square(s, &basis).basis().iter().cloned());
        let coords = coordinates(basis.len())?;
        let obstruction =
            LinearMap::from_fn(coords, s.power(2), |j| q.project(&a.delta().apply(&basis[j[0] as usize])))?;
        let next = Subspace::span(s.clone(), kernel(&obstruction).iter().map(|c| combine(&basis, c)));
        if next.dim() == core.dim() {
            break;
        }
        core = next;
    }
    Ok(NucleusReport { solution, labels_inside, delta_closed, core })
}

/// `I_B` with the checks that make `B/I_B` a quotient Hopf structure.
#[derive(Clone, Debug)]
pub struct IdealReport {
    /// The annihilator of the given subspace of `A`.
    pub ideal: Subspace,
    /// `ideal`, `coideal`, `counit_vanishes`, `antipode_stable`.
    pub report: Report,
}

fn describe(space: &Space, v: &Vector) -> String {
    let parts: Vec<String> =
        v.iter().map(|(idx, c)| alloc::format!("{}·{}", crate::scalar::format(c), space.label_of(idx))).collect();
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join(" + ")
    }
}

fn ideal_checks(b: &HopfStructure, basis: &[Vector]) -> Report {
    let s = b.space();
    let ideal = Subspace::span(s.clone(), basis.iter().cloned());
    let mut r = Report::new(alloc::format!("ideal of {}", b.name()));
    let e = |i: u16| Vector::basis(ix(&[i]));
    let alg = b.algebra();
    let first_bad = basis.iter().find_map(|i| {
        b.basis_indices()
            .find(|&x| !ideal.contains(&alg.mul(i, &e(x))) || !ideal.contains(&alg.mul(&e(x), i)))
            .map(|x| alloc::format!("{} with {}", describe(s, i), s.label_of(&[x])))
    });
    r.push(match first_bad {
        None => Check::pass("ideal"),
        Some(w) => Check::fail("ideal", w, None, "product leaves the subspace"),
    });
    let mut gens = Vec::new();
    for i in basis {
        for x in b.basis_indices() {
            gens.push(i.tensor(&e(x)));
            gens.push(e(x).tensor(i));
        }
    }
    let sum = Subspace::span(s.power(2), gens);
    let bad = basis.iter().find(|i| !sum.contains(&b.delta().apply(i)));
    r.push(match bad {
        None => Check::pass("coideal"),
        Some(i) => Check::fail("coideal", describe(s, i), None, "Δ(i) ∉ I⊗B + B⊗I"),
    });
    let bad = basis.iter().find(|i| !b.counit().apply(i).is_zero());
    r.push(match bad {
        None => Check::pass("counit_vanishes"),
        Some(i) => Check::fail("counit_vanishes", describe(s, i), None, "ε(i) ≠ 0"),
    });
    let bad = basis.iter().find(|i| !ideal.contains(&b.antipode().apply(i)));
    r.push(match bad {
        None => Check::pass("antipode_stable"),
        Some(i) => Check::fail("antipode_stable", describe(s, i), None, "S(i) ∉ I"),
    });
    r
}

/// The annihilator `I_B = {b : ⟨b, n⟩ = 0 ∀ n ∈ N}` of a subspace `N ⊆ A`,
/// with ideal, coideal, counit and antipode-stability checks.
pub fn ideal_ib(p: &DualPairingData, n: &Subspace) -> Result<IdealReport> {
    if !p.is_nondegenerate() {
        return Err(Error::PreconditionFailed(String::from("pairing is degenerate")));
    }
    let coords = coordinates(n.dim())?;
    let constraints = LinearMap::from_fn(p.b.space().clone(), coords, |x| {
        let ex = Vector::basis(x.clone());
        Vector::from_terms(n.basis().iter().enumerate().map(|(j, v)| (ix(&[j as u16]), p.pair_tensors(&ex, v))))
    })?;
    let ideal = Subspace::span(p.b.space().clone(), kernel(&constraints));
    let report = ideal_checks(&p.b, ideal.basis());
    Ok(IdealReport { ideal, report })
}

/// A quotient Hopf structure `C = B/I` with its projection `B → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientHopf {
    /// The quotient, on the normal-form basis of `B/I`.
    pub hopf: HopfStructure,
    /// The canonical projection.
    pub projection: LinearMap,
}

/// Builds `B/I` with the induced structure maps. The quotient claims to be
/// a Hopf algebra when its product is associative and its coproduct
/// coassociative, and otherwise keeps the claim of `B`.
pub fn quotient_hopf(b: &HopfStructure, i: &[Vector]) -> Result<QuotientHopf> {
    let checks = ideal_checks(b, i);
    for (name, err) in [
        ("ideal", Error::NotAnIdeal as fn(String) -> Error),
        ("coideal", Error::NotACoideal),
        ("counit_vanishes", Error::NotACoideal),
        ("antipode_stable", Error::PreconditionFailed),
    ] {
        if let Some(c) = checks.get(name).filter(|c| !c.pass) {
            let w = c.witness.as_ref().map(|w| w.input.clone()).unwrap_or_default();
            return Err(err(alloc::format!("{name} fails at {w}")));
        }
    }
    let s = b.space();
    let q = QuotientSpace::new(s.clone(), i.iter().cloned());
    let free = q.free_indices();
    let position = |idx: &Index| free.iter().position(|f| f == idx).expect("normal forms use free indices") as u16;
    let labels = free.iter().map(|f| s.label_of(f)).collect();
    let name = if i.is_empty() { String::from(b.name()) } else { alloc::format!("{}/I", b.name()) };
    let cs = Space::new(name.clone(), labels)?;
    let to_c = |v: &Vector| q.project(v).map_indices(|idx| ix(&[position(idx)]));
    let projection = LinearMap::from_fn(s.clone(), cs.clone(), |x| to_c(&Vector::basis(x.clone())))?;
    let rep = |c: u16| Vector::basis(free[c as usize].clone());
    let pi2 = |v: &Vector| projection.apply_at(&projection.apply_at(v, 0), 1);
    let algebra = Algebra::from_fn(cs.clone(), to_c(b.unit()), |x, y| to_c(&b.algebra().mul(&rep(x), &rep(y))))?;
    let delta = LinearMap::from_fn(cs.clone(), cs.tensor(&cs), |x| pi2(&b.delta().apply(&rep(x[0]))))?;
    let counit = LinearMap::from_fn(cs.clone(), Space::scalars(), |x| b.counit().apply(&rep(x[0])))?;
    let antipode = LinearMap::from_fn(cs.clone(), cs.clone(), |x| to_c(&b.antipode().apply(&rep(x[0]))))?;
    let mut hopf = HopfStructure::new(name, algebra, delta, counit, antipode, b.claim())?;
    if check_associativity(hopf.algebra()).pass && check_coassociativity(&hopf).pass {
        hopf = hopf.with_claim(Claim::HopfAlgebra);
    }
    Ok(QuotientHopf { hopf, projection })
}

/// `β*(u⊗v⊗w) = (u₁(v₁w₁))(S(w₂)(S(v₂)S(u₂)))`, bracketed as displayed.
pub fn beta_star_of(a: &HopfStructure, u: u16, v: u16, w: u16) -> Vector {
    let x = Vector::basis(ix(&[u, v, w]));
    let x = a.delta_at(&a.delta_at(&a.delta_at(&x, 2), 1), 0);
    // (u₁, u₂, v₁, v₂, w₁, w₂) → (u₁, v₁, w₁, w₂, v₂, u₂)
    let x = x.permute(&[0, 2, 4, 5, 3, 1]);
    let x = a.antipode_at(&a.antipode_at(&a.antipode_at(&x, 3), 4), 5);
    let x = a.mul_at(&x, 4); // S(v₂)S(u₂)
    let x = a.mul_at(&x, 3); // S(w₂)(…)
    let x = a.mul_at(&x, 1); // v₁w₁
    let x = a.mul_at(&x, 0); // u₁(v₁w₁)
    a.mul_at(&x, 0)
}

/// `β*` with the quasiassociativity checks against a subspace `N ⊆ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaStarReport {
    /// `β*: A⊗A⊗A → A`.
    pub map: LinearMap,
    /// `image_in_nucleus` and `conjugation_stable`.
    pub report: Report,
}

/// Builds `β*` for a Hopf quasigroup and checks that its image lies in `n`
/// and that `(a₁ x) S(a₂) ∈ n` for `x ∈ n` and basis `a`.
pub fn beta_star(a: &HopfStructure, n: &Subspace) -> Result<BetaStarReport> {
    let pre = check_hopf_quasigroup(a);
    if let Some(c) = pre.failures().next() {
        return Err(Error::PreconditionFailed(alloc::format!("{} is not a Hopf quasigroup: {} fails", a.name(), c.name)));
    }
    let s = a.space();
    let map = LinearMap::from_fn(s.power(3), s.clone(), |i| beta_star_of(a, i[0], i[1], i[2]))?;
    let mut r = Report::new(alloc::format!("β* of {}", a.name()));
    let bad = map.columns().find(|(_, v)| !n.contains(v));
    r.push(match bad {
        None => Check::pass("image_in_nucleus"),
        Some((idx, v)) => Check::fail("image_in_nucleus", s.power(3).label_of(idx), None, describe(s, v)),
    });
    let mut bad = None;
    'outer: for x in n.basis() {
        for g in a.basis_indices() {
            let v = a.delta_of(g).tensor(x).permute(&[0, 2, 1]);
            let v = a.mul_at(&a.antipode_at(&v, 2), 0);
            let v = a.mul_at(&v, 0);
            if !n.contains(&v) {
                bad = Some(alloc::format!("{} by {}", describe(s, x), s.label_of(&[g])));
                break 'outer;
            }
        }
    }
    r.push(match bad {
        None => Check::pass("conjugation_stable"),
        Some(w) => Check::fail("conjugation_stable", w, None, "a₁ x S(a₂) leaves the subspace"),
    });
    Ok(BetaStarReport { map, report: r })
}

/// Verifies `⟨β_B(b), u⊗v⊗w⟩ = ⟨b, β*_A(u⊗v⊗w)⟩` for all basis tuples,
/// by comparing `(P⊗P⊗P)∘β_B` with the transpose of `Pᵀ∘β*_A`, where `P`
/// is the pairing matrix.
pub fn check_beta_duality(p: &DualPairingData) -> Result<Check> {
    let beta = coassociator_beta(&p.b)?.beta;
    let sa = p.a.space();
    let star = LinearMap::from_fn(sa.power(3), sa.clone(), |i| beta_star_of(&p.a, i[0], i[1], i[2]))?;
    let pm = p.as_map();
    let pt = p.transpose_map();
    let lhs: BTreeSet<(Index, Index, Scalar)> = beta
        .columns()
        .flat_map(|(b, v)| {
            let w = pm.apply_at(&pm.apply_at(&pm.apply_at(v, 0), 1), 2);
            w.iter().map(|(uvw, c)| (b.clone(), uvw.clone(), c.clone())).collect::<Vec<_>>()
        })
        .collect();
    let rhs: BTreeSet<(Index, Index, Scalar)> = star
        .columns()
        .flat_map(|(uvw, v)| {
            let w = pt.apply(v);
            w.iter().map(|(b, c)| (b.clone(), uvw.clone(), c.clone())).collect::<Vec<_>>()
        })
        .collect();
    Ok(match lhs.symmetric_difference(&rhs).next() {
        None => Check::pass("beta_duality"),
        Some((b, uvw, _)) => {
            let l = lhs.iter().find(|(x, y, _)| x == b && y == uvw).map(|t| t.2.clone()).unwrap_or_else(Scalar::zero);
            let r = rhs.iter().find(|(x, y, _)| x == b && y == uvw).map(|t| t.2.clone()).unwrap_or_else(Scalar::zero);
            Check::fail(
                "beta_duality",
                alloc::format!("{} paired with {}", p.b.space().label_of(b), sa.power(3).label_of(uvw)),
                None,
                alloc::format!("lhs={} rhs={}", crate::scalar::format(&l), crate::scalar::format(&r)),
            )
        }
    })
}
