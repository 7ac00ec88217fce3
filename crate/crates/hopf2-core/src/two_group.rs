//! Crossed modules of finite groups, the strict 2-groups they determine,
//! and the coherent 2-group `N(G) ⋉ G` of a quasiassociative quasigroup,
//! with exhaustive verification of pentagon, naturality and interchange.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quasigroup::{EnumerationReport, FiniteQuasigroup};
use crate::report::{Check, Report};

/// A crossed module `φ: M → N` with an action `γ` of `N` on `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    /// The group `M`.
    pub m: FiniteQuasigroup,
    /// The group `N`.
    pub n: FiniteQuasigroup,
    /// `φ(m)` for each element of `M`.
    pub phi: Vec<usize>,
    /// `gamma[n][m] = γ_n(m)`.
    pub gamma: Vec<Vec<usize>>,
}

/// A failed crossed-module law with its first witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossedModuleViolation {
    /// `M` or `N` is not a group.
    NotAGroup {
        /// `"M"` or `"N"`.
        which: &'static str,
    },
    /// The tables have the wrong shape.
    Shape {
        /// What is malformed.
        detail: String,
    },
    /// `φ(mm′) ≠ φ(m)φ(m′)`.
    PhiNotHomomorphism {
        /// `m`.
        m: usize,
        /// `m′`.
        m2: usize,
    },
    /// `γ` is not an action of `N` by automorphisms of `M`.
    ActionViolation {
        /// Which law failed.
        law: &'static str,
        /// The witness tuple.
        witness: Vec<usize>,
    },
    /// `φ(γ_n(m)) ≠ nφ(m)n⁻¹`.
    Equivariance {
        /// `n`.
        n: usize,
        /// `m`.
        m: usize,
    },
    /// `γ_{φ(m)}(m′) ≠ mm′m⁻¹`.
    Peiffer {
        /// `m`.
        m: usize,
        /// `m′`.
        m2: usize,
    },
}

impl CrossedModule {
    /// The identity crossed module of a group: `M = N`, `φ = id`, `γ` = conjugation.
    pub fn identity_of(g: FiniteQuasigroup) -> Self {
        let k = g.order();
        let gamma = (0..k).map(|n| (0..k).map(|m| g.conjugate(n, m)).collect()).collect();
        Self { m: g.clone(), n: g, phi: (0..k).collect(), gamma }
    }

    /// `φ: M → 1`, `γ` trivial.
    pub fn to_trivial(m: FiniteQuasigroup) -> Result<Self> {
        let n = FiniteQuasigroup::cyclic(1)?;
        let k = m.order();
        Ok(Self { phi: alloc::vec![0; k], gamma: alloc::vec![(0..k).collect()], m, n })
    }

    /// All violated laws, one minimal witness per law; empty iff valid.
    pub fn validate(&self) -> Vec<CrossedModuleViolation> {
        let mut out = Vec::new();
        let (km, kn) = (self.m.order(), self.n.order());
        if self.phi.len() != km
            || self.phi.iter().any(|&x| x >= kn)
            || self.gamma.len() != kn
            || self.gamma.iter().any(|r| r.len() != km || r.iter().any(|&x| x >= km))
        {
            out.push(CrossedModuleViolation::Shape { detail: "φ or γ table has the wrong size".into() });
            return out;
        }
        for (which, g) in [("M", &self.m), ("N", &self.n)] {
            if !g.validate().is_empty() || !g.is_associative() {
                out.push(CrossedModuleViolation::NotAGroup { which });
            }
        }
        if !out.is_empty() {
            return out;
        }
        let (m, n) = (&self.m, &self.n);
        let pairs = |a: usize, b: usize| (0..a).flat_map(move |x| (0..b).map(move |y| (x, y)));
        if let Some((x, y)) = pairs(km, km).find(|&(x, y)| self.phi[m.mul(x, y)] != n.mul(self.phi[x], self.phi[y])) {
            out.push(CrossedModuleViolation::PhiNotHomomorphism { m: x, m2: y });
        }
        let g = &self.gamma;
        let action = (|| {
            for a in 0..kn {
                let mut seen = alloc::vec![false; km];
                for x in 0..km {
                    if core::mem::replace(&mut seen[g[a][x]], true) {
                        return Some(("bijective", alloc::vec![a, x]));
                    }
                    for y in 0..km {
                        if g[a][m.mul(x, y)] != m.mul(g[a][x], g[a][y]) {
                            return Some(("multiplicative", alloc::vec![a, x, y]));
                        }
                    }
                }
            }
            if let Some(x) = (0..km).find(|&x| g[n.unit()][x] != x) {
                return Some(("unital", alloc::vec![x]));
            }
            for a in 0..kn {
                for b in 0..kn {
                    for x in 0..km {
                        if g[n.mul(a, b)][x] != g[a][g[b][x]] {
                            return Some(("composition", alloc::vec![a, b, x]));
                        }
                    }
                }
            }
            None
        })();
        if let Some((law, witness)) = action {
            out.push(CrossedModuleViolation::ActionViolation { law, witness });
        }
        if let Some((a, x)) = pairs(kn, km).find(|&(a, x)| self.phi[g[a][x]] != n.conjugate(a, self.phi[x])) {
            out.push(CrossedModuleViolation::Equivariance { n: a, m: x });
        }
        if let Some((x, y)) = pairs(km, km).find(|&(x, y)| g[self.phi[x]][y] != m.conjugate(x, y)) {
            out.push(CrossedModuleViolation::Peiffer { m: x, m2: y });
        }
        out
    }
}

/// A coherent 2-group with strict unit and inverses: objects form a
/// quasigroup, morphisms form a quasigroup under `⊗`, composition is a
/// groupoid, and `α_{g,h,k}: (gh)k → g(hk)` is the associator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentTwoGroupData {
    /// Objects under `⊗`.
    pub objects: FiniteQuasigroup,
    /// Morphisms under `⊗`.
    pub morphisms: FiniteQuasigroup,
    /// Source of each morphism.
    pub source: Vec<usize>,
    /// Target of each morphism.
    pub target: Vec<usize>,
    /// `id_g` for each object.
    pub identity: Vec<usize>,
    /// `comp[(x, y)] = x ∘ y`, defined exactly when `s(x) = t(y)`.
    pub comp: BTreeMap<(usize, usize), usize>,
    /// `α_{g,h,k}`, indexed by `(g·|G| + h)·|G| + k`.
    pub alpha: Vec<usize>,
}

/// Builds the strict 2-group `M ⋊ N` of a valid crossed module, with
/// morphism `(m, n)` at index `m·|N| + n`.
pub fn strict_two_group_from_crossed_module(x: &CrossedModule) -> Result<CoherentTwoGroupData> {
    if let Some(v) = x.validate().first() {
        return Err(Error::PreconditionFailed(alloc::format!("invalid crossed module: {v:?}")));
    }
    let (m, n) = (&x.m, &x.n);
    let (km, kn) = (m.order(), n.order());
    let idx = |a: usize, b: usize| a * kn + b;
    let labels = (0..km)
        .flat_map(|a| (0..kn).map(move |b| (a, b)))
        .map(|(a, b)| alloc::format!("({},{})", m.label(a), n.label(b)))
        .collect();
    let morphisms = FiniteQuasigroup::from_fn(labels, idx(m.unit(), n.unit()), |p, q| {
        let (a, b) = (p / kn, p % kn);
        let (c, d) = (q / kn, q % kn);
        idx(m.mul(a, x.gamma[b][c]), n.mul(b, d))
    })?;
    let size = km * kn;
    let source: Vec<usize> = (0..size).map(|p| p % kn).collect();
    let target: Vec<usize> = (0..size).map(|p| n.mul(x.phi[p / kn], p % kn)).collect();
    let mut comp = BTreeMap::new();
    for p in 0..size {
        for q in 0..size {
            if source[p] == target[q] {
                comp.insert((p, q), idx(m.mul(p / kn, q / kn), q % kn));
            }
        }
    }
    let identity = (0..kn).map(|b| idx(m.unit(), b)).collect::<Vec<_>>();
    let alpha = (0..kn * kn * kn)
        .map(|t| {
            let (g, h, k) = (t / (kn * kn), t / kn % kn, t % kn);
            identity[n.mul(n.mul(g, h), k)]
        })
        .collect();
    Ok(CoherentTwoGroupData { objects: n.clone(), morphisms, source, target, identity, comp, alpha })
}

/// Builds the coherent 2-group with morphisms `N(G) ⋉ G` of a
/// quasiassociative quasigroup: `(n,g)⊗(m,h) = (n((gm)g⁻¹), gh)`,
/// `s(n,g) = g`, `t(n,g) = ng`, `(m,ng)∘(n,g) = (mn,g)`,
/// `α_{g,h,k} = (β(g,h,k), (gh)k)`. Morphism `(n_i, g)` has index
/// `i·|G| + g`, where `n_i` is the `i`-th nucleus element.
pub fn coherent_two_group_from_quasigroup(q: &FiniteQuasigroup) -> Result<CoherentTwoGroupData> {
    let qa = q.quasiassociativity()?;
    if !qa.holds() {
        return Err(Error::PreconditionFailed(alloc::format!("quasigroup is not quasiassociative: {qa:?}")));
    }
    let nucleus = q.nucleus();
    let pos: BTreeMap<usize, usize> = nucleus.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let kg = q.order();
    let idx = |ni: usize, g: usize| ni * kg + g;
    let labels = nucleus
        .iter()
        .flat_map(|&a| (0..kg).map(move |g| (a, g)))
        .map(|(a, g)| alloc::format!("({},{})", q.label(a), q.label(g)))
        .collect();
    let unit = idx(pos[&q.unit()], q.unit());
    let morphisms = FiniteQuasigroup::from_fn(labels, unit, |x, y| {
        let (n, g) = (nucleus[x / kg], x % kg);
        let (m, h) = (nucleus[y / kg], y % kg);
        idx(pos[&q.mul(n, q.conjugate(g, m))], q.mul(g, h))
    })?;
    let size = nucleus.len() * kg;
    let source: Vec<usize> = (0..size).map(|x| x % kg).collect();
    let target: Vec<usize> = (0..size).map(|x| q.mul(nucleus[x / kg], x % kg)).collect();
    let mut comp = BTreeMap::new();
    for x in 0..size {
        for y in 0..size {
            if source[x] == target[y] {
                let mn = q.mul(nucleus[x / kg], nucleus[y / kg]);
                comp.insert((x, y), idx(pos[&mn], y % kg));
            }
        }
    }
    let identity = (0..kg).map(|g| idx(pos[&q.unit()], g)).collect();
    let assoc = q.associator()?;
    let alpha = (0..kg * kg * kg)
        .map(|t| {
            let (g, h, k) = (t / (kg * kg), t / kg % kg, t % kg);
            idx(pos[&assoc.beta(g, h, k)], q.mul(q.mul(g, h), k))
        })
        .collect();
    Ok(CoherentTwoGroupData { objects: q.clone(), morphisms, source, target, identity, comp, alpha })
}

fn fail(checked: usize, witness: Vec<usize>) -> EnumerationReport {
    EnumerationReport { holds: false, checked, first_failure: Some(witness) }
}

fn pass(checked: usize) -> EnumerationReport {
    EnumerationReport { holds: true, checked, first_failure: None }
}

impl CoherentTwoGroupData {
    /// `α_{g,h,k}`.
    pub fn alpha(&self, g: usize, h: usize, k: usize) -> usize {
        let n = self.objects.order();
        self.alpha[(g * n + h) * n + k]
    }

    /// A copy with `α_{g,h,k}` replaced by `morphism`.
    pub fn with_alpha(&self, g: usize, h: usize, k: usize, morphism: usize) -> Self {
        let n = self.objects.order();
        let mut out = self.clone();
        out.alpha[(g * n + h) * n + k] = morphism;
        out
    }

    /// `x ∘ y`, when composable.
    pub fn compose(&self, x: usize, y: usize) -> Option<usize> {
        self.comp.get(&(x, y)).copied()
    }

    /// `x ⊗ y`.
    pub fn tensor(&self, x: usize, y: usize) -> usize {
        self.morphisms.mul(x, y)
    }

    fn compose_all(&self, chain: &[usize]) -> Option<usize> {
        let mut acc = *chain.last()?;
        for &x in chain.iter().rev().skip(1) {
            acc = self.compose(x, acc)?;
        }
        Some(acc)
    }

    /// The pentagon
    /// `(id_g ⊗ α_{h,k,l}) ∘ α_{g,hk,l} ∘ (α_{g,h,k} ⊗ id_l) = α_{g,h,kl} ∘ α_{gh,k,l}`
    /// over all object quadruples.
    pub fn verify_pentagon(&self) -> EnumerationReport {
        let q = &self.objects;
        let n = q.order();
        let id = &self.identity;
        let mut checked = 0;
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        checked += 1;
                        let lhs = self.compose_all(&[
                            self.tensor(id[g], self.alpha(h, k, l)),
                            self.alpha(g, q.mul(h, k), l),
                            self.tensor(self.alpha(g, h, k), id[l]),
                        ]);
                        let rhs = self.compose_all(&[self.alpha(g, h, q.mul(k, l)), self.alpha(q.mul(g, h), k, l)]);
                        if lhs.is_none() || lhs != rhs {
                            return fail(checked, alloc::vec![g, h, k, l]);
                        }
                    }
                }
            }
        }
        pass(checked)
    }

    /// Naturality of `α`:
    /// `α_{t(x),t(y),t(z)} ∘ ((x⊗y)⊗z) = (x⊗(y⊗z)) ∘ α_{s(x),s(y),s(z)}`
    /// over all morphism triples.
    pub fn verify_naturality(&self) -> EnumerationReport {
        let size = self.morphisms.order();
        let (s, t) = (&self.source, &self.target);
        let mut checked = 0;
        for x in 0..size {
            for y in 0..size {
                let xy = self.tensor(x, y);
                for z in 0..size {
                    checked += 1;
                    let lhs = self.compose(self.alpha(t[x], t[y], t[z]), self.tensor(xy, z));
                    let rhs = self.compose(self.tensor(x, self.tensor(y, z)), self.alpha(s[x], s[y], s[z]));
                    if lhs.is_none() || lhs != rhs {
                        return fail(checked, alloc::vec![x, y, z]);
                    }
                }
            }
        }
        pass(checked)
    }

    fn composable_pairs(&self) -> Vec<(usize, usize)> {
        self.comp.keys().copied().collect()
    }

    /// The interchange law `(a∘b)⊗(c∘d) = (a⊗c)∘(b⊗d)` over all
    /// composable pairs `(a,b)`, `(c,d)`.
    pub fn verify_interchange(&self) -> EnumerationReport {
        let pairs = self.composable_pairs();
        let mut checked = 0;
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                checked += 1;
                let lhs = self.tensor(self.comp[&(a, b)], self.comp[&(c, d)]);
                if self.compose(self.tensor(a, c), self.tensor(b, d)) != Some(lhs) {
                    return fail(checked, alloc::vec![a, b, c, d]);
                }
            }
        }
        pass(checked)
    }

    /// Source, target and identity preserve `⊗`.
    pub fn verify_functoriality(&self) -> EnumerationReport {
        let (q, size) = (&self.objects, self.morphisms.order());
        let mut checked = 0;
        for x in 0..size {
            for y in 0..size {
                checked += 1;
                let xy = self.tensor(x, y);
                if self.source[xy] != q.mul(self.source[x], self.source[y])
                    || self.target[xy] != q.mul(self.target[x], self.target[y])
                {
                    return fail(checked, alloc::vec![x, y]);
                }
            }
        }
        for g in 0..q.order() {
            for h in 0..q.order() {
                checked += 1;
                if self.tensor(self.identity[g], self.identity[h]) != self.identity[q.mul(g, h)] {
                    return fail(checked, alloc::vec![g, h]);
                }
            }
        }
        pass(checked)
    }

    /// Composition is a groupoid: well-typed, associative, unital, invertible.
    pub fn verify_groupoid(&self) -> EnumerationReport {
        let size = self.morphisms.order();
        let (s, t, id) = (&self.source, &self.target, &self.identity);
        let mut checked = 0;
        for (&(x, y), &xy) in &self.comp {
            checked += 1;
            if s[xy] != s[y] || t[xy] != t[x] {
                return fail(checked, alloc::vec![x, y]);
            }
        }
        for (g, &i) in id.iter().enumerate() {
            checked += 1;
            if s[i] != g || t[i] != g {
                return fail(checked, alloc::vec![g]);
            }
        }
        for x in 0..size {
            checked += 1;
            if self.compose(x, id[s[x]]) != Some(x) || self.compose(id[t[x]], x) != Some(x) {
                return fail(checked, alloc::vec![x]);
            }
            let inverse = (0..size).find(|&y| self.compose(y, x) == Some(id[s[x]]) && self.compose(x, y) == Some(id[t[x]]));
            if inverse.is_none() {
                return fail(checked, alloc::vec![x]);
            }
        }
        for (&(x, y), &xy) in &self.comp {
            for z in (0..size).filter(|&z| t[z] == s[y]) {
                checked += 1;
                if self.compose(xy, z) != self.compose(x, self.comp[&(y, z)]) {
                    return fail(checked, alloc::vec![x, y, z]);
                }
            }
        }
        pass(checked)
    }

    /// `α_{1,g,h} = α_{g,1,h} = α_{g,h,1} = id_{gh}` and
    /// `α_{g,g⁻¹,h} = α_{g⁻¹,g,h} = id_h = α_{h,g,g⁻¹} = α_{h,g⁻¹,g}`.
    pub fn verify_unit_identities(&self) -> EnumerationReport {
        let q = &self.objects;
        let (n, e, id) = (q.order(), q.unit(), &self.identity);
        let mut checked = 0;
        for g in 0..n {
            for h in 0..n {
                checked += 1;
                let gi = q.inv(g);
                let ok = self.alpha(e, g, h) == id[q.mul(g, h)]
                    && self.alpha(g, e, h) == id[q.mul(g, h)]
                    && self.alpha(g, h, e) == id[q.mul(g, h)]
                    && self.alpha(g, gi, h) == id[h]
                    && self.alpha(gi, g, h) == id[h]
                    && self.alpha(h, g, gi) == id[h]
                    && self.alpha(h, gi, g) == id[h];
                if !ok {
                    return fail(checked, alloc::vec![g, h]);
                }
            }
        }
        pass(checked)
    }

    /// `α_{g,h,k}` is a morphism `(gh)k → g(hk)`.
    pub fn verify_alpha_typing(&self) -> EnumerationReport {
        let q = &self.objects;
        let n = q.order();
        let mut checked = 0;
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    checked += 1;
                    let a = self.alpha(g, h, k);
                    if self.source[a] != q.mul(q.mul(g, h), k) || self.target[a] != q.mul(g, q.mul(h, k)) {
                        return fail(checked, alloc::vec![g, h, k]);
                    }
                }
            }
        }
        pass(checked)
    }

    /// Whether `α` consists of identities.
    pub fn is_strict(&self) -> bool {
        let n = self.objects.order();
        (0..n * n * n).all(|t| {
            let a = self.alpha[t];
            self.identity[self.source[a]] == a
        })
    }

    /// Every verifier, as one report with enumeration counts in the notes.
    pub fn verify_all(&self) -> Report {
        let mut report = Report::new("coherent 2-group");
        let results = [
            ("pentagon", self.verify_pentagon()),
            ("naturality", self.verify_naturality()),
            ("interchange", self.verify_interchange()),
            ("functoriality", self.verify_functoriality()),
            ("groupoid", self.verify_groupoid()),
            ("unit_identities", self.verify_unit_identities()),
            ("alpha_typing", self.verify_alpha_typing()),
        ];
        for (name, r) in results {
            report.note(alloc::format!("{name}: {} cases", r.checked));
            report.push(enumeration_check(name, &r));
        }
        let violations = self.morphisms.validate();
        report.push(Check::from_bool(
            "morphism_quasigroup",
            violations.is_empty(),
            "morphism table",
            alloc::format!("{violations:?}"),
        ));
        report.note(alloc::format!(
            "{} objects, {} morphisms, strict: {}",
            self.objects.order(),
            self.morphisms.order(),
            self.is_strict()
        ));
        report
    }

    /// The crossed module `(ker s, objects, t|ker s, γ)` with
    /// `γ_g(x) = id_g ⊗ x ⊗ id_{g⁻¹}`. Requires the objects to form a group.
    pub fn crossed_module_of_kernel(&self) -> Result<(CrossedModule, Vec<usize>)> {
        let q = &self.objects;
        if !q.is_associative() {
            return Err(Error::PreconditionFailed("objects do not form a group".into()));
        }
        let kernel: Vec<usize> = (0..self.morphisms.order()).filter(|&x| self.source[x] == q.unit()).collect();
        let pos: BTreeMap<usize, usize> = kernel.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let lookup = |x: usize| {
            pos.get(&x)
                .copied()
                .ok_or_else(|| Error::PreconditionFailed(alloc::format!("ker s is not closed at morphism {x}")))
        };
        let labels = kernel.iter().map(|&x| String::from(self.morphisms.label(x))).collect();
        let mut table = Vec::new();
        for &x in &kernel {
            let mut row = Vec::new();
            for &y in &kernel {
                row.push(lookup(self.tensor(x, y))?);
            }
            table.push(row);
        }
        let unit = lookup(self.identity[q.unit()])?;
        let inv = kernel.iter().map(|&x| lookup(self.morphisms.inv(x))).collect::<Result<Vec<_>>>()?;
        let m = FiniteQuasigroup::new(labels, table, unit, inv)?;
        let phi = kernel.iter().map(|&x| self.target[x]).collect();
        let mut gamma = Vec::new();
        for g in 0..q.order() {
            let mut row = Vec::new();
            for &x in &kernel {
                let conj = self.tensor(self.tensor(self.identity[g], x), self.identity[q.inv(g)]);
                row.push(lookup(conj)?);
            }
            gamma.push(row);
        }
        Ok((CrossedModule { m, n: q.clone(), phi, gamma }, kernel))
    }
}

/// Converts an enumeration outcome into a named check.
pub fn enumeration_check(name: &str, r: &EnumerationReport) -> Check {
    match &r.first_failure {
        None if r.holds => Check::pass(name),
        w => Check::fail(name, alloc::format!("{:?}", w.clone().unwrap_or_default()), None, "identity fails"),
    }
}

/// Crossed module → strict 2-group → `ker s` crossed module. Checks that
/// `m ↦ (m, 1)` is an isomorphism carrying `φ` and `γ` to the recovered ones.
pub fn crossed_module_round_trip(x: &CrossedModule) -> Result<Report> {
    let t = strict_two_group_from_crossed_module(x)?;
    let (y, kernel) = t.crossed_module_of_kernel()?;
    let kn = x.n.order();
    let mut report = Report::new("crossed module round trip");
    let embed: Vec<usize> = (0..x.m.order()).map(|m| m * kn + x.n.unit()).collect();
    report.push(Check::from_bool(
        "kernel_is_image_of_m",
        kernel == embed,
        "ker s",
        alloc::format!("kernel {kernel:?} vs {embed:?}"),
    ));
    if kernel == embed {
        let same_table = (0..x.m.order()).all(|a| (0..x.m.order()).all(|b| y.m.mul(a, b) == x.m.mul(a, b)));
        report.push(Check::from_bool("group_isomorphism", same_table, "M", "tables differ"));
        report.push(Check::from_bool("phi_recovered", y.phi == x.phi, "φ", "φ differs"));
        report.push(Check::from_bool("gamma_recovered", y.gamma == x.gamma, "γ", "γ differs"));
    }
    report.push(Check::from_bool(
        "recovered_is_crossed_module",
        y.validate().is_empty(),
        "ker s crossed module",
        alloc::format!("{:?}", y.validate()),
    ));
    report.absorb("strict", t.verify_all());
    Ok(report)
}
