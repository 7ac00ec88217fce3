//! Sparse vectors keyed by basis multi-indices.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::space::Index;
use crate::scalar::Scalar;

/// A sparse vector: a finite map from basis multi-indices to nonzero
/// scalars. The ambient space is implied by context (the domain or codomain
/// of the map that produced it). Zero coefficients are never stored, so
/// equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    terms: BTreeMap<Index, Scalar>,
}

impl Vector {
    /// The zero vector.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector at `idx`.
    pub fn basis(idx: Index) -> Self {
        let mut v = Self::zero();
        v.terms.insert(idx, Scalar::one());
        v
    }

    /// `c` times the basis vector at `idx`.
    pub fn term(idx: Index, c: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(idx, c);
        v
    }

    /// Builds a vector from (index, coefficient) pairs, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (Index, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (idx, c) in terms {
            v.add_term(idx, c);
        }
        v
    }

    /// Adds `c` to the coefficient at `idx`.
    pub fn add_term(&mut self, idx: Index, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient at `idx` (zero when absent).
    pub fn coefficient(&self, idx: &[u16]) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms in increasing index order.
    pub fn iter(&self) -> btree_map::Iter<'_, Index, Scalar> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The underlying sorted term map.
    pub fn terms(&self) -> &BTreeMap<Index, Scalar> {
        &self.terms
    }

    /// Consumes the vector, returning the term map.
    pub fn into_terms(self) -> BTreeMap<Index, Scalar> {
        self.terms
    }

    /// The smallest index with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Index, &Scalar)> {
        self.terms.iter().next()
    }

    /// `c · self`.
    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(i, v)| (i.clone(), v * c)).collect() }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Vector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, v) in &other.terms {
            self.add_term(i.clone(), v * c);
        }
    }

    /// `self += other`.
    pub fn add_assign(&mut self, other: &Vector) {
        for (i, v) in &other.terms {
            self.add_term(i.clone(), v.clone());
        }
    }

    /// `self − other`.
    pub fn sub(&self, other: &Vector) -> Self {
        let mut out = self.clone();
        for (i, v) in &other.terms {
            out.add_term(i.clone(), -v.clone());
        }
        out
    }

    /// `−self`.
    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(i, v)| (i.clone(), -v.clone())).collect() }
    }

    /// The tensor product `self ⊗ other` (multi-indices concatenated).
    pub fn tensor(&self, other: &Vector) -> Self {
        let mut terms = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                terms.insert(idx, a * b);
            }
        }
        Self { terms }
    }

    /// Reorders tensor legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(i, v)| (perm.iter().map(|&p| i[p]).collect(), v.clone()))
                .collect(),
        }
    }

    /// Maps every index through `f`, merging collisions.
    pub fn map_indices(&self, mut f: impl FnMut(&Index) -> Index) -> Self {
        Self::from_terms(self.terms.iter().map(|(i, v)| (f(i), v.clone())))
    }

    /// Sum of coefficients times `weight(index)`; used for pairings and counits.
    pub fn contract(&self, mut weight: impl FnMut(&Index) -> Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, v) in &self.terms {
            let w = weight(i);
            if !w.is_zero() {
                acc += v * w;
            }
        }
        acc
    }

    /// Keeps only the terms whose index satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&Index) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, v)| (i.clone(), v.clone()))
                .collect(),
        }
    }

    /// All distinct values of leg `k` that occur in the support.
    pub fn leg_support(&self, k: usize) -> Vec<u16> {
        let mut out: Vec<u16> = self.terms.keys().map(|i| i[k]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl FromIterator<(Index, Scalar)> for Vector {
    fn from_iter<T: IntoIterator<Item = (Index, Scalar)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}
