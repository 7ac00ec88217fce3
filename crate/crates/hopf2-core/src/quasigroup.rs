//! Finite quasigroups: validation, nucleus, associator, quasiassociativity,
//! the 3-cocycle condition, and bracket (product) trees.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A finite unital magma given by its Cayley table, unit and inverse map.
///
/// Construction only checks the shape of the data; the quasigroup laws
/// (Latin square, unit, inverse property) are checked by
/// [`FiniteQuasigroup::validate`] and reported as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuasigroup {
    elements: Vec<String>,
    lookup: BTreeMap<String, usize>,
    table: Vec<usize>,
    unit: usize,
    inv: Vec<usize>,
    /// `right_div[c * n + d]` is the unique `x` with `x · c = d`, when column
    /// `c` is a permutation.
    right_div: Vec<Option<usize>>,
}

/// A failed quasigroup law, with its first witness in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Row `row` repeats the value `value` (the row is not a permutation).
    LatinSquareRow {
        /// Offending row element.
        row: usize,
        /// Repeated product.
        value: usize,
    },
    /// Column `col` repeats the value `value`.
    LatinSquareColumn {
        /// Offending column element.
        col: usize,
        /// Repeated product.
        value: usize,
    },
    /// `1·g = g = g·1` fails for `element`.
    UnitLaw {
        /// Offending element.
        element: usize,
    },
    /// `g⁻¹(gh) = h` fails.
    LeftInverseLaw {
        /// `g`.
        g: usize,
        /// `h`.
        h: usize,
    },
    /// `(hg⁻¹)g = h` fails.
    RightInverseLaw {
        /// `g`.
        g: usize,
        /// `h`.
        h: usize,
    },
}

impl Violation {
    /// Name of the violated identity.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::LatinSquareRow { .. } | Violation::LatinSquareColumn { .. } => "latin_square",
            Violation::UnitLaw { .. } => "unit",
            Violation::LeftInverseLaw { .. } => "left_inverse",
            Violation::RightInverseLaw { .. } => "right_inverse",
        }
    }
}

/// The multiplicative associator `β(g,h,k)`, defined by `g(hk) = β·((gh)k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatorReport {
    order: usize,
    beta: Vec<usize>,
    /// Distinct values of β, sorted.
    pub image: Vec<usize>,
    /// Whether the image lies in the nucleus.
    pub in_nucleus: bool,
}

impl AssociatorReport {
    /// `β(g,h,k)`.
    pub fn beta(&self, g: usize, h: usize, k: usize) -> usize {
        self.beta[(g * self.order + h) * self.order + k]
    }
}

/// Outcome of the quasiassociativity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiAssociativity {
    /// `image(β) ⊆ N(G)`.
    pub image_in_nucleus: bool,
    /// `(ua)u⁻¹ ∈ N(G)` for all `u ∈ G`, `a ∈ N(G)`.
    pub conjugation_stable: bool,
    /// First `(u, a)` with `(ua)u⁻¹ ≠ u(au⁻¹)`, if any; reported, never resolved.
    pub bracketing_mismatch: Option<(usize, usize)>,
}

impl QuasiAssociativity {
    /// All three conditions hold.
    pub fn holds(&self) -> bool {
        self.image_in_nucleus && self.conjugation_stable && self.bracketing_mismatch.is_none()
    }
}

/// Outcome of an exhaustive identity check over tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    /// Whether the identity held for every tuple.
    pub holds: bool,
    /// Number of tuples evaluated.
    pub checked: usize,
    /// First failing tuple in lexicographic order.
    pub first_failure: Option<Vec<usize>>,
}

impl FiniteQuasigroup {
    /// Builds a quasigroup from element labels, a row-major table of
    /// indices, the unit index and the inverse map. Only shape is checked.
    pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>, unit: usize, inv: Vec<usize>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidInput("a quasigroup needs at least one element".into()));
        }
        let mut lookup = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if lookup.insert(e.clone(), i).is_some() {
                return Err(Error::InvalidInput(alloc::format!("duplicate element label {e:?}")));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(alloc::format!("table must be {n}×{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) || unit >= n || inv.len() != n || inv.iter().any(|&x| x >= n) {
            return Err(Error::InvalidInput("table, unit or inverse refers to a missing element".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mut right_div = alloc::vec![None; n * n];
        for c in 0..n {
            for x in 0..n {
                let d = flat[x * n + c];
                right_div[c * n + d] = match right_div[c * n + d] {
                    None => Some(x),
                    Some(_) => Some(usize::MAX),
                };
            }
        }
        let right_div = right_div.into_iter().map(|v| v.filter(|&x| x != usize::MAX)).collect();
        Ok(Self { elements, lookup, table: flat, unit, inv, right_div })
    }

    /// Builds a quasigroup from labels only (table entries, unit and inverses as labels).
    pub fn from_labels(elements: Vec<String>, table: &[Vec<String>], unit: &str, inv: &[String]) -> Result<Self> {
        let pos: BTreeMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let find = |s: &str| {
            pos.get(s)
                .copied()
                .ok_or_else(|| Error::InvalidInput(alloc::format!("unknown element label {s:?}")))
        };
        let table = table
            .iter()
            .map(|row| row.iter().map(|s| find(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let unit = find(unit)?;
        let inv = inv.iter().map(|s| find(s)).collect::<Result<Vec<_>>>()?;
        Self::new(elements, table, unit, inv)
    }

    /// Builds a unital magma from a product function, computing two-sided
    /// inverses by search (elements without one map to themselves and will
    /// fail validation).
    pub fn from_fn(elements: Vec<String>, unit: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = elements.len();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == unit && table[b][a] == unit).unwrap_or(a))
            .collect();
        Self::new(elements, table, unit, inv)
    }

    /// The cyclic group `Z_n` with labels `"0" .. "n-1"`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let elements = (0..n).map(|i| alloc::format!("{i}")).collect();
        Self::from_fn(elements, 0, |a, b| (a + b) % n)
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Element labels.
    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    /// Label of element `a`.
    pub fn label(&self, a: usize) -> &str {
        &self.elements[a]
    }

    /// Index of the element labelled `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    /// The product `ab`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    /// The unit.
    pub fn unit(&self) -> usize {
        self.unit
    }

    /// The declared inverse of `a`.
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// The table as rows of indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    /// The unique `x` with `x · c = d`, when column `c` is a permutation.
    pub fn solve_left(&self, c: usize, d: usize) -> Option<usize> {
        self.right_div[c * self.order() + d]
    }

    /// All violated quasigroup laws (one minimal witness per law); empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.order();
        let mut out = Vec::new();
        'rows: for a in 0..n {
            let mut seen = alloc::vec![false; n];
            for b in 0..n {
                let v = self.mul(a, b);
                if seen[v] {
                    out.push(Violation::LatinSquareRow { row: a, value: v });
                    break 'rows;
                }
                seen[v] = true;
            }
        }
        'cols: for b in 0..n {
            let mut seen = alloc::vec![false; n];
            for a in 0..n {
                let v = self.mul(a, b);
                if seen[v] {
                    out.push(Violation::LatinSquareColumn { col: b, value: v });
                    break 'cols;
                }
                seen[v] = true;
            }
        }
        if let Some(g) = (0..n).find(|&g| self.mul(self.unit, g) != g || self.mul(g, self.unit) != g) {
            out.push(Violation::UnitLaw { element: g });
        }
        let pairs = || (0..n).flat_map(move |g| (0..n).map(move |h| (g, h)));
        if let Some((g, h)) = pairs().find(|&(g, h)| self.mul(self.inv(g), self.mul(g, h)) != h) {
            out.push(Violation::LeftInverseLaw { g, h });
        }
        if let Some((g, h)) = pairs().find(|&(g, h)| self.mul(self.mul(h, self.inv(g)), g) != h) {
            out.push(Violation::RightInverseLaw { g, h });
        }
        out
    }

    /// Whether the product is associative.
    pub fn is_associative(&self) -> bool {
        self.first_non_associative().is_none()
    }

    /// The first triple with `(gh)k ≠ g(hk)`.
    pub fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for g in 0..n {
            for h in 0..n {
                let gh = self.mul(g, h);
                for k in 0..n {
                    if self.mul(gh, k) != self.mul(g, self.mul(h, k)) {
                        return Some((g, h, k));
                    }
                }
            }
        }
        None
    }

    /// Whether `a` associates with all pairs in all three positions.
    pub fn is_nuclear(&self, a: usize) -> bool {
        let n = self.order();
        (0..n).all(|g| {
            (0..n).all(|h| {
                self.mul(self.mul(a, g), h) == self.mul(a, self.mul(g, h))
                    && self.mul(g, self.mul(a, h)) == self.mul(self.mul(g, a), h)
                    && self.mul(self.mul(g, h), a) == self.mul(g, self.mul(h, a))
            })
        })
    }

    /// The nucleus `N(G)`, by brute-force enumeration, in index order.
    pub fn nucleus(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.is_nuclear(a)).collect()
    }

    /// The associator table. Requires every column to be a permutation.
    pub fn associator(&self) -> Result<AssociatorReport> {
        let n = self.order();
        let mut beta = Vec::with_capacity(n * n * n);
        for g in 0..n {
            for h in 0..n {
                let gh = self.mul(g, h);
                for k in 0..n {
                    let rhs = self.mul(gh, k);
                    let lhs = self.mul(g, self.mul(h, k));
                    let x = self.solve_left(rhs, lhs).ok_or_else(|| {
                        Error::PreconditionFailed(alloc::format!(
                            "column {} is not a permutation",
                            self.label(rhs)
                        ))
                    })?;
                    beta.push(x);
                }
            }
        }
        let mut image = beta.clone();
        image.sort_unstable();
        image.dedup();
        let nucleus = self.nucleus();
        let in_nucleus = image.iter().all(|x| nucleus.contains(x));
        Ok(AssociatorReport { order: n, beta, image, in_nucleus })
    }

    /// `(ua)u⁻¹`.
    pub fn conjugate(&self, u: usize, a: usize) -> usize {
        self.mul(self.mul(u, a), self.inv(u))
    }

    /// Evaluates the quasiassociativity conditions.
    pub fn quasiassociativity(&self) -> Result<QuasiAssociativity> {
        let report = self.associator()?;
        let nucleus = self.nucleus();
        let mut conjugation_stable = true;
        let mut bracketing_mismatch = None;
        for u in 0..self.order() {
            for &a in &nucleus {
                let left = self.conjugate(u, a);
                let right = self.mul(u, self.mul(a, self.inv(u)));
                if !nucleus.contains(&left) {
                    conjugation_stable = false;
                }
                if left != right && bracketing_mismatch.is_none() {
                    bracketing_mismatch = Some((u, a));
                }
            }
        }
        Ok(QuasiAssociativity {
            image_in_nucleus: report.in_nucleus,
            conjugation_stable,
            bracketing_mismatch,
        })
    }

    /// Whether the associator lands in the nucleus and the nucleus is
    /// conjugation-stable (with both bracketings agreeing).
    pub fn is_quasiassociative(&self) -> bool {
        self.quasiassociativity().map(|q| q.holds()).unwrap_or(false)
    }

    /// The 3-cocycle condition
    /// `(gβ(h,k,l)g⁻¹)β(g,hk,l)β(g,h,k) = β(g,h,kl)β(gh,k,l)` over all
    /// quadruples, products evaluated left to right.
    pub fn cocycle_check(&self) -> Result<EnumerationReport> {
        if !self.is_quasiassociative() {
            return Err(Error::PreconditionFailed("quasigroup is not quasiassociative".into()));
        }
        let a = self.associator()?;
        let n = self.order();
        let mut checked = 0;
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        checked += 1;
                        let lhs = self.mul(
                            self.mul(self.conjugate(g, a.beta(h, k, l)), a.beta(g, self.mul(h, k), l)),
                            a.beta(g, h, k),
                        );
                        let rhs = self.mul(a.beta(g, h, self.mul(k, l)), a.beta(self.mul(g, h), k, l));
                        if lhs != rhs {
                            return Ok(EnumerationReport {
                                holds: false,
                                checked,
                                first_failure: Some(alloc::vec![g, h, k, l]),
                            });
                        }
                    }
                }
            }
        }
        Ok(EnumerationReport { holds: true, checked, first_failure: None })
    }

    /// Nucleus pass-through for `n`-th iterated products: whenever two
    /// bracketings agree with the unit inserted at slot `m`, they agree with
    /// every nucleus element inserted there.
    pub fn nucleus_passthrough_check(&self, n: usize) -> Result<PassthroughReport> {
        if n > 3 {
            return Err(Error::SizeLimit(alloc::format!("nucleus pass-through supports n ≤ 3, got {n}")));
        }
        let trees = product_trees(n)?;
        let nucleus = self.nucleus();
        let q = self.order();
        let tuples: Vec<Vec<usize>> = tuples(q, n);
        let mut report = PassthroughReport { holds: true, hypotheses: 0, pairs: 0, first_failure: None };
        let mul = |a: usize, b: usize| self.mul(a, b);
        for slot in 0..=n {
            for i in 0..trees.len() {
                for j in (i + 1)..trees.len() {
                    report.pairs += 1;
                    let agree_with = |x: usize| {
                        tuples.iter().all(|g| {
                            let args = insert_at(g, slot, x);
                            trees[i].eval(&args, &mul) == trees[j].eval(&args, &mul)
                        })
                    };
                    if !agree_with(self.unit) {
                        continue;
                    }
                    report.hypotheses += 1;
                    if let Some(&x) = nucleus.iter().find(|&&x| !agree_with(x)) {
                        report.holds = false;
                        if report.first_failure.is_none() {
                            report.first_failure = Some((i, j, slot, x));
                        }
                    }
                }
            }
        }
        Ok(report)
    }
}

/// Outcome of [`FiniteQuasigroup::nucleus_passthrough_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PassthroughReport {
    /// Whether the pass-through property held.
    pub holds: bool,
    /// Tree pairs × slots whose unit hypothesis held.
    pub hypotheses: usize,
    /// Tree pairs × slots examined.
    pub pairs: usize,
    /// First failure as (tree i, tree j, slot, nucleus element).
    pub first_failure: Option<(usize, usize, usize, usize)>,
}

fn tuples(q: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..q).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn insert_at(g: &[usize], slot: usize, x: usize) -> Vec<usize> {
    let mut args = g.to_vec();
    args.insert(slot, x);
    args
}

/// A full binary tree: one parenthesization of an iterated binary operation
/// (a product `m_I^n`, or dually an iterated coproduct `Δ_I^n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductTree {
    /// A single argument.
    Leaf,
    /// The operation applied to two subtrees.
    Node(Box<ProductTree>, Box<ProductTree>),
}

impl ProductTree {
    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        match self {
            ProductTree::Leaf => 1,
            ProductTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Evaluates the bracketing on `args` (one per leaf, left to right).
    pub fn eval<T: Copy>(&self, args: &[T], mul: &impl Fn(T, T) -> T) -> T {
        match self {
            ProductTree::Leaf => args[0],
            ProductTree::Node(l, r) => {
                let k = l.leaves();
                mul(l.eval(&args[..k], mul), r.eval(&args[k..], mul))
            }
        }
    }
}

impl fmt::Display for ProductTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductTree::Leaf => f.write_str("x"),
            ProductTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// All Catalan(n) bracketings of an `(n+1)`-fold product, `0 ≤ n ≤ 5`.
pub fn product_trees(n: usize) -> Result<Vec<ProductTree>> {
    if n > 5 {
        return Err(Error::SizeLimit(alloc::format!("product trees support n ≤ 5, got {n}")));
    }
    Ok(trees_with_leaves(n + 1))
}

fn trees_with_leaves(leaves: usize) -> Vec<ProductTree> {
    if leaves == 1 {
        return alloc::vec![ProductTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..leaves {
        for l in trees_with_leaves(k) {
            for r in trees_with_leaves(leaves - k) {
                out.push(ProductTree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}
