//! The coassociator `β` of a Hopf coquasigroup, iterated coproducts,
//! coassociative pairs and quasi coassociativity.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linear::{ix, kernel, rank, Index, LinearMap, Space, Vector};
use crate::quasigroup::{product_trees, PassthroughReport, ProductTree};
use crate::report::{check_identity, Check, Report};

use super::algebra::{mul_tensors, Algebra};
use super::structure::{check_claim, check_hopf_coquasigroup, HopfStructure};

/// The coassociator of a Hopf coquasigroup together with its verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoassociatorReport {
    /// `β: B → B⊗B⊗B`.
    pub beta: LinearMap,
    /// `β(h₁)·(Δ⊗id)Δ(h₂) = (id⊗Δ)Δ(h)`, checked on every basis element.
    pub relation: Check,
    /// Whether `β(h) = ε(h)1⊗1⊗1` for every `h`.
    pub trivial: bool,
}

/// Legwise product `x·y` of two tensors in `H^{⊗k}`.
fn legwise(h: &HopfStructure, x: &Vector, y: &Vector) -> Vector {
    let k = x.iter().next().map_or(0, |(i, _)| i.len());
    let legs: Vec<&Algebra> = (0..k).map(|_| h.algebra()).collect();
    mul_tensors(&legs, x, y)
}

/// `β(e_i) = [(id⊗Δ)Δ(h₁)]·[(Δ⊗id)Δ(S h₂)]`, legwise, where
/// `Δ(e_i) = h₁⊗h₂`.
pub fn beta_of(h: &HopfStructure, i: u16) -> Vector {
    let mut out = Vector::zero();
    for (idx, c) in h.delta_of(i).iter() {
        let s = h.antipode_of(idx[1]);
        let right = h.delta_at(&h.delta().apply(&s), 0);
        out.add_scaled(&legwise(h, &h.right_double(idx[0]), &right), c);
    }
    out
}

/// Builds `β` for a Hopf coquasigroup, verifies the coassociator relation
/// and reports whether `β` is trivial.
pub fn coassociator_beta(h: &HopfStructure) -> Result<CoassociatorReport> {
    let pre = check_hopf_coquasigroup(h);
    if let Some(c) = pre.failures().next() {
        return Err(Error::PreconditionFailed(alloc::format!("{} is not a Hopf coquasigroup: {} fails", h.name(), c.name)));
    }
    let s = h.space();
    let s3 = s.power(3);
    let beta = LinearMap::from_fn(s.clone(), s3.clone(), |i| beta_of(h, i[0]))?;
    let relation = check_identity(
        "coassociator_relation",
        s,
        &s3,
        |i| {
            let mut out = Vector::zero();
            for (idx, c) in h.delta_of(i[0]).iter() {
                out.add_scaled(&legwise(h, &beta.image(&[idx[0]]), &h.left_double(idx[1])), c);
            }
            out
        },
        |i| h.right_double(i[0]),
        None,
    );
    let ones = h.algebra().unit_power(3);
    let trivial = h.basis_indices().all(|i| beta.image(&[i]) == ones.scaled(&h.counit_of(i)));
    Ok(CoassociatorReport { beta, relation, trivial })
}

/// Applies the iterated coproduct `Δ_I` shaped by `tree` to leg `offset`.
/// A leaf is the identity; a node `(l, r)` is `(Δ_l⊗Δ_r)Δ`.
pub fn iterated_coproduct_at(h: &HopfStructure, v: &Vector, offset: usize, tree: &ProductTree) -> Vector {
    match tree {
        ProductTree::Leaf => v.clone(),
        ProductTree::Node(l, r) => {
            let w = h.delta_at(v, offset);
            let w = iterated_coproduct_at(h, &w, offset + 1, r);
            iterated_coproduct_at(h, &w, offset, l)
        }
    }
}

/// `Δ_I(e_i)` for the bracketing `tree`.
pub fn iterated_coproduct(h: &HopfStructure, i: u16, tree: &ProductTree) -> Vector {
    iterated_coproduct_at(h, &Vector::basis(ix(&[i])), 0, tree)
}

/// A coassociative pair `(A, B, φ)`: a Hopf algebra `A`, a Hopf
/// coquasigroup `B` and a morphism `φ: B → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoassociativePairData {
    /// The Hopf algebra.
    pub a: HopfStructure,
    /// The Hopf coquasigroup.
    pub b: HopfStructure,
    /// The morphism `B → A`.
    pub phi: LinearMap,
}

impl CoassociativePairData {
    /// Assembles a pair, checking only the shape of `φ`.
    pub fn new(a: HopfStructure, b: HopfStructure, phi: LinearMap) -> Result<Self> {
        if phi.domain() != b.space() || phi.codomain() != a.space() {
            return Err(Error::DomainMismatch(alloc::format!(
                "φ must map {} → {}, got {} → {}",
                b.space(),
                a.space(),
                phi.domain(),
                phi.codomain()
            )));
        }
        Ok(Self { a, b, phi })
    }

    /// A copy with another `φ`.
    pub fn with_phi(&self, phi: LinearMap) -> Result<Self> {
        Self::new(self.a.clone(), self.b.clone(), phi)
    }

    /// A copy with another coquasigroup `B`.
    pub fn with_b(&self, b: HopfStructure) -> Result<Self> {
        Self::new(self.a.clone(), b, self.phi.clone())
    }

    fn phi_of(&self, i: u16) -> Vector {
        self.phi.image(&[i])
    }
}

/// Verifies that `φ` is a morphism of Hopf coquasigroups and the three
/// mixed coassociativity identities: `φ` applied to leg `k` of
/// `(Δ⊗id)Δ(b)` equals `φ` applied to leg `k` of `(id⊗Δ)Δ(b)`, `k = 0, 1, 2`.
/// The claim checks of `A` and `B` are included under `a.` and `b.`.
pub fn check_coassociative_pair(p: &CoassociativePairData) -> Report {
    let mut r = Report::new(alloc::format!("({}, {}, φ) as coassociative pair", p.a.name(), p.b.name()));
    r.absorb("a", check_claim(&p.a));
    r.absorb("b", check_claim(&p.b));
    let (a, b) = (&p.a, &p.b);
    let (sa, sb) = (a.space(), b.space());
    let e = |i: u16| Vector::basis(ix(&[i]));
    r.push(Check::from_bool(
        "phi_unital",
        p.phi.apply(b.unit()) == *a.unit(),
        "1",
        "φ(1_B) ≠ 1_A",
    ));
    r.push(check_identity(
        "phi_multiplicative",
        &sb.power(2),
        sa,
        |i| p.phi.apply(&b.algebra().mul_basis(i[0], i[1])),
        |i| a.algebra().mul(&p.phi_of(i[0]), &p.phi_of(i[1])),
        None,
    ));
    r.push(check_identity(
        "phi_comultiplicative",
        sb,
        &sa.power(2),
        |i| a.delta().apply(&p.phi_of(i[0])),
        |i| p.phi.apply_at(&p.phi.apply_at(&b.delta_of(i[0]), 0), 1),
        None,
    ));
    r.push(check_identity(
        "phi_counital",
        sb,
        &Space::scalars(),
        |i| a.counit().apply(&p.phi_of(i[0])),
        |i| b.counit().apply(&e(i[0])),
        None,
    ));
    r.push(check_identity(
        "phi_antipode",
        sb,
        sa,
        |i| p.phi.apply(&b.antipode_of(i[0])),
        |i| a.antipode().apply(&p.phi_of(i[0])),
        None,
    ));
    for k in 0..3 {
        let mut cod = Space::scalars();
        for l in 0..3 {
            cod = cod.tensor(if l == k { sa } else { sb });
        }
        r.push(check_identity(
            &alloc::format!("mixed_{}", k + 1),
            sb,
            &cod,
            |i| p.phi.apply_at(&b.left_double(i[0]), k),
            |i| p.phi.apply_at(&b.right_double(i[0]), k),
            None,
        ));
    }
    r
}

/// The iterated-coproduct pass-through: for every pair of bracketings
/// `I, J` of the `n`-th iterated coproduct and every slot `m`, if `ε`
/// applied at slot `m` makes `Δ_I` and `Δ_J` agree, then so does `φ`.
/// Failures are reported as `(tree i, tree j, slot, basis element)`.
pub fn coproduct_passthrough_check(p: &CoassociativePairData, n: usize) -> Result<PassthroughReport> {
    if n > 3 {
        return Err(Error::SizeLimit(alloc::format!("coproduct pass-through supports n ≤ 3, got {n}")));
    }
    let trees = product_trees(n)?;
    let b = &p.b;
    let images: Vec<Vec<Vector>> =
        trees.iter().map(|t| b.basis_indices().map(|i| iterated_coproduct(b, i, t)).collect()).collect();
    let mut report = PassthroughReport { holds: true, hypotheses: 0, pairs: 0, first_failure: None };
    for slot in 0..=n {
        for i in 0..trees.len() {
            for j in (i + 1)..trees.len() {
                report.pairs += 1;
                let eps_agree = images[i].iter().zip(&images[j]).all(|(x, y)| b.counit_at(x, slot) == b.counit_at(y, slot));
                if !eps_agree {
                    continue;
                }
                report.hypotheses += 1;
                let bad = images[i]
                    .iter()
                    .zip(&images[j])
                    .position(|(x, y)| p.phi.apply_at(x, slot) != p.phi.apply_at(y, slot));
                if let Some(elem) = bad {
                    report.holds = false;
                    if report.first_failure.is_none() {
                        report.first_failure = Some((i, j, slot, elem));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Outcome of [`check_quasi_coassociative`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiCoassocReport {
    /// A basis of `I = ker φ`.
    pub kernel_basis: Vec<Vector>,
    /// The per-condition checks.
    pub report: Report,
}

/// Labels of a vector's support, for witnesses.
fn describe(space: &Space, v: &Vector) -> String {
    let mut out = String::new();
    for (n, (idx, c)) in v.iter().enumerate() {
        if n > 0 {
            out.push_str(" + ");
        }
        out.push_str(&alloc::format!("{}·{}", crate::scalar::format(c), space.label_of(idx)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `x₁₁S(x₂)⊗x₁₂`.
fn ad_left(b: &HopfStructure, x: &Vector) -> Vector {
    let v = b.delta_at(&b.delta().apply(x), 0);
    let v = b.antipode_at(&v, 2).permute(&[0, 2, 1]);
    b.mul_at(&v, 0)
}

/// `x₁S(x₂₂)⊗x₂₁`.
fn ad_right(b: &HopfStructure, x: &Vector) -> Vector {
    let v = b.delta_at(&b.delta().apply(x), 1);
    let v = b.antipode_at(&v, 2).permute(&[0, 2, 1]);
    b.mul_at(&v, 0)
}

/// Verifies quasi coassociativity of `B` relative to the pair: `φ` is
/// surjective; for `i ∈ I = ker φ`, `i₁₁S(i₂)⊗i₁₂ ∈ B⊗I` and
/// `i₁S(i₂₂)⊗i₂₁ ∈ B⊗I`; `I ⊆ ker β`; and the two bracketings of the
/// adjoint coaction `Ad([c])` agree after projecting the second leg.
pub fn check_quasi_coassociative(p: &CoassociativePairData) -> QuasiCoassocReport {
    let b = &p.b;
    let sb = b.space();
    let mut r = Report::new(alloc::format!("{} quasi coassociative over {}", b.name(), p.a.name()));
    let pair = check_coassociative_pair(p);
    r.note(alloc::format!("coassociative pair: {}", if pair.all_pass() { "pass" } else { "fail" }));
    let rk = rank(&p.phi);
    r.push(Check::from_bool(
        "phi_surjective",
        rk == p.a.dim(),
        "φ",
        alloc::format!("rank φ = {rk} < dim {} = {}", p.a.name(), p.a.dim()),
    ));
    let kernel_basis = kernel(&p.phi);
    r.note(alloc::format!("dim I = {}", kernel_basis.len()));
    let in_b_tensor_i = |name: &str, f: &dyn Fn(&Vector) -> Vector| -> Check {
        for i in &kernel_basis {
            let proj = p.phi.apply_at(&f(i), 1);
            if !proj.is_zero() {
                return Check::fail(
                    name,
                    describe(sb, i),
                    proj.leading().map(|(idx, _)| sb.tensor(p.a.space()).label_of(idx)),
                    "second leg not in ker φ",
                );
            }
        }
        Check::pass(name)
    };
    r.push(in_b_tensor_i("ad_left_in_ideal", &|x| ad_left(b, x)));
    r.push(in_b_tensor_i("ad_right_in_ideal", &|x| ad_right(b, x)));
    match coassociator_beta(b) {
        Ok(beta) => {
            let bad = kernel_basis.iter().find(|i| !beta.beta.apply(i).is_zero());
            r.push(match bad {
                None => Check::pass("ideal_in_ker_beta"),
                Some(i) => Check::fail("ideal_in_ker_beta", describe(sb, i), None, "β(i) ≠ 0"),
            });
        }
        Err(e) => r.push(Check::fail("ideal_in_ker_beta", b.name(), None, alloc::format!("{e}"))),
    }
    let e = |i: &Index| Vector::basis(i.clone());
    r.push(check_identity(
        "ad_well_defined",
        sb,
        &sb.tensor(p.a.space()),
        |i| p.phi.apply_at(&ad_left(b, &e(i)), 1),
        |i| p.phi.apply_at(&ad_right(b, &e(i)), 1),
        None,
    ));
    QuasiCoassocReport { kernel_basis, report: r }
}
