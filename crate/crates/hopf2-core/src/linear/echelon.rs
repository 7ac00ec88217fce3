//! Exact Gaussian elimination: echelon bases, subspaces, quotients, kernels.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::map::LinearMap;
use super::space::{Index, Space};
use super::vector::Vector;
use crate::scalar::Scalar;

/// A row-echelon basis of a subspace: every row is keyed by its pivot (its
/// smallest index), carries coefficient 1 there, and is zero at every other
/// pivot once [`Echelon::into_reduced`] has run.
///
/// [`Echelon::reduce`] eliminates pivot coordinates in increasing order,
/// which yields the same unique normal form whether or not the rows are
/// fully inter-reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    rows: BTreeMap<Index, Vector>,
}

impl Echelon {
    /// The zero subspace.
    pub fn new() -> Self {
        Self::default()
    }

    /// Echelon basis of the span of `vectors`.
    pub fn from_vectors<'a>(vectors: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows keyed by pivot, in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&Index, &Vector)> {
        self.rows.iter()
    }

    /// Whether `idx` is a pivot position.
    pub fn is_pivot(&self, idx: &[u16]) -> bool {
        self.rows.contains_key(idx)
    }

    /// Normal form of `v`: `v` minus the unique combination of rows that
    /// clears every pivot coordinate.
    pub fn reduce(&self, v: &Vector) -> Vector {
        if self.rows.is_empty() {
            return v.clone();
        }
        let mut work = v.clone().into_terms();
        let mut out = Vector::zero();
        while let Some((idx, c)) = work.pop_first() {
            match self.rows.get(&idx) {
                Some(row) => {
                    for (j, d) in row.iter().skip(1) {
                        let delta = -(&c * d);
                        match work.get_mut(j) {
                            Some(x) => {
                                *x += delta;
                                if x.is_zero() {
                                    work.remove(j);
                                }
                            }
                            None => {
                                work.insert(j.clone(), delta);
                            }
                        }
                    }
                }
                None => out.add_term(idx, c),
            }
        }
        out
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let pivot = pivot.clone();
        let inv = Scalar::one() / lead;
        let row = r.scaled(&inv);
        self.rows.insert(pivot, row);
        true
    }

    /// Back-substitutes so every row vanishes at every other pivot.
    pub fn into_reduced(self) -> Self {
        let mut done = Self::new();
        for (pivot, row) in self.rows.into_iter().rev() {
            let mut tail = row.clone();
            let lead = tail.coefficient(&pivot);
            tail.add_term(pivot.clone(), -lead);
            let mut reduced = done.reduce(&tail);
            reduced.add_term(pivot.clone(), Scalar::one());
            done.rows.insert(pivot, reduced);
        }
        done
    }

    /// Whether the rows are in reduced row-echelon form.
    pub fn is_reduced(&self) -> bool {
        self.rows.iter().all(|(p, row)| {
            row.leading().map(|(i, c)| i == p && c.is_one()).unwrap_or(false)
                && row.iter().skip(1).all(|(j, _)| !self.rows.contains_key(j))
        })
    }
}

/// A subspace of a labeled space, with the spanning vectors it was built from.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: Space,
    basis: Vec<Vector>,
    echelon: Echelon,
}

impl Subspace {
    /// The span of `vectors`; `basis()` keeps an independent subset.
    pub fn span(ambient: Space, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut echelon = Echelon::new();
        let mut basis = Vec::new();
        for v in vectors {
            if echelon.insert(&v) {
                basis.push(v);
            }
        }
        Self { ambient, basis, echelon }
    }

    /// Ambient space.
    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    /// A basis (independent vectors in insertion order).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Membership test.
    pub fn contains(&self, v: &Vector) -> bool {
        self.echelon.contains(v)
    }

    /// The echelon form of the span.
    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Basis multi-indices `e_i` that lie in the subspace.
    pub fn basis_labels_inside(&self) -> Vec<Index> {
        self.ambient.indices().filter(|i| self.contains(&Vector::basis(i.clone()))).collect()
    }
}

/// A quotient `ambient / span(relations)` with a normal-form projection.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: Space,
    relations: Echelon,
}

impl QuotientSpace {
    /// Quotient by the span of `generators`, computed by exact elimination.
    pub fn new(ambient: Space, generators: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Echelon::new();
        for g in generators {
            e.insert(&g);
        }
        Self { ambient, relations: e.into_reduced() }
    }

    /// The ambient space.
    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    /// Reduced row-echelon basis of the relation subspace.
    pub fn relations(&self) -> &Echelon {
        &self.relations
    }

    /// Rank of the relation subspace.
    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.ambient.dim() - self.relations.rank()
    }

    /// Unique normal form of the class of `v`.
    pub fn project(&self, v: &Vector) -> Vector {
        self.relations.reduce(v)
    }

    /// Whether `v` is zero in the quotient.
    pub fn is_zero(&self, v: &Vector) -> bool {
        self.relations.contains(v)
    }

    /// The normal-form projection as an idempotent endomorphism of the ambient.
    pub fn projection_map(&self) -> LinearMap {
        LinearMap::from_fn(self.ambient.clone(), self.ambient.clone(), |i| {
            self.project(&Vector::basis(i.clone()))
        })
        .expect("projection stays in the ambient space")
    }

    /// Basis positions that survive in the quotient (the non-pivots).
    pub fn free_indices(&self) -> Vec<Index> {
        self.ambient.indices().filter(|i| !self.relations.is_pivot(i)).collect()
    }
}

/// Quotient of `ambient` by the span of `generators`.
pub fn quotient(ambient: Space, generators: impl IntoIterator<Item = Vector>) -> QuotientSpace {
    QuotientSpace::new(ambient, generators)
}

fn tagged(tag: u16, idx: &[u16]) -> Index {
    let mut out = Index::with_capacity(idx.len() + 1);
    out.push(tag);
    out.extend_from_slice(idx);
    out
}

/// Echelon of the augmented rows `(f(e_i) | e_i)`; image coordinates sort first.
fn augmented(f: &LinearMap) -> Echelon {
    let mut e = Echelon::new();
    for idx in f.domain().indices() {
        let mut row = Vector::zero();
        for (j, c) in f.image(&idx).iter() {
            row.add_term(tagged(0, j), c.clone());
        }
        row.add_term(tagged(1, &idx), Scalar::one());
        e.insert(&row);
    }
    e
}

/// A basis of `ker f`, by elimination on the augmented matrix.
pub fn kernel(f: &LinearMap) -> Vec<Vector> {
    augmented(f)
        .rows()
        .filter(|(p, _)| p[0] == 1)
        .map(|(_, row)| Vector::from_terms(row.iter().map(|(i, c)| (i[1..].into(), c.clone()))))
        .collect()
}

/// Rank of `f`.
pub fn rank(f: &LinearMap) -> usize {
    let e = Echelon::from_vectors(f.columns().map(|(_, v)| v));
    e.rank()
}

/// Some `x` with `f(x) = target`, if one exists.
pub fn preimage(f: &LinearMap, target: &Vector) -> Option<Vector> {
    let e = augmented(f);
    let mut row = Vector::zero();
    for (j, c) in target.iter() {
        row.add_term(tagged(0, j), c.clone());
    }
    let r = e.reduce(&row);
    if r.iter().any(|(i, _)| i[0] == 0) {
        return None;
    }
    Some(Vector::from_terms(r.iter().map(|(i, c)| (i[1..].into(), -c.clone()))))
}

/// Writes a tensor as `Σ_k u_k ⊗ w_k` with the fewest terms, where `u_k`
/// carries legs `0..split` and `w_k` the remaining legs.
///
/// The `w_k` are the reduced echelon basis of the slices `v(i, ·)`, and
/// `u_k` collects each slice's coordinate at the `k`-th pivot.
pub fn pure_decomposition(v: &Vector, split: usize) -> Vec<(Vector, Vector)> {
    let mut slices: BTreeMap<Index, Vector> = BTreeMap::new();
    for (idx, c) in v.iter() {
        slices.entry(idx[..split].into()).or_default().add_term(idx[split..].into(), c.clone());
    }
    let e = Echelon::from_vectors(slices.values()).into_reduced();
    e.rows()
        .map(|(pivot, row)| {
            let u = Vector::from_terms(slices.iter().map(|(i, s)| (i.clone(), s.coefficient(pivot))));
            (u, row.clone())
        })
        .collect()
}
