//! Sparse linear maps between labeled spaces.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::echelon::QuotientSpace;
use super::space::{Index, Space};
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear map stored column-wise: for each domain basis multi-index with a
/// nonzero image, the sparse image vector. Zero columns and zero entries are
/// never stored, so `==` is exact map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: Space,
    codomain: Space,
    cols: BTreeMap<Index, Vector>,
}

impl LinearMap {
    /// The zero map.
    pub fn zero(domain: Space, codomain: Space) -> Self {
        Self { domain, codomain, cols: BTreeMap::new() }
    }

    /// The identity on `space`.
    pub fn identity(space: Space) -> Self {
        let cols = space.indices().map(|i| (i.clone(), Vector::basis(i))).collect();
        Self { domain: space.clone(), codomain: space, cols }
    }

    /// Builds a map by evaluating `f` on every domain basis vector.
    ///
    /// The closure must return vectors on `codomain`; this is checked.
    pub fn from_fn(
        domain: Space,
        codomain: Space,
        mut f: impl FnMut(&Index) -> Vector,
    ) -> Result<Self> {
        let mut cols = BTreeMap::new();
        for idx in domain.indices() {
            let col = f(&idx);
            if !col.is_zero() {
                check_vector(&codomain, &col)?;
                cols.insert(idx, col);
            }
        }
        Ok(Self { domain, codomain, cols })
    }

    /// Builds a map from explicit (domain index, image) columns.
    pub fn from_columns(
        domain: Space,
        codomain: Space,
        columns: impl IntoIterator<Item = (Index, Vector)>,
    ) -> Result<Self> {
        let mut cols: BTreeMap<Index, Vector> = BTreeMap::new();
        for (idx, col) in columns {
            if !domain.contains(&idx) {
                return Err(Error::InvalidInput(alloc::format!(
                    "column index {idx:?} outside domain {domain}"
                )));
            }
            check_vector(&codomain, &col)?;
            let entry = cols.entry(idx).or_default();
            entry.add_assign(&col);
        }
        cols.retain(|_, v| !v.is_zero());
        Ok(Self { domain, codomain, cols })
    }

    /// Builds a map from (row, column, value) triples, summing repeats.
    pub fn from_entries(
        domain: Space,
        codomain: Space,
        entries: impl IntoIterator<Item = (Index, Index, Scalar)>,
    ) -> Result<Self> {
        let mut cols: BTreeMap<Index, Vector> = BTreeMap::new();
        for (row, col, val) in entries {
            if !domain.contains(&col) || !codomain.contains(&row) {
                return Err(Error::InvalidInput(alloc::format!(
                    "entry ({row:?}, {col:?}) outside {codomain} × {domain}"
                )));
            }
            cols.entry(col).or_default().add_term(row, val);
        }
        cols.retain(|_, v| !v.is_zero());
        Ok(Self { domain, codomain, cols })
    }

    /// Domain space.
    pub fn domain(&self) -> &Space {
        &self.domain
    }

    /// Codomain space.
    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    /// Image of a basis vector, if nonzero.
    pub fn column(&self, idx: &[u16]) -> Option<&Vector> {
        self.cols.get(idx)
    }

    /// Image of a basis vector.
    pub fn image(&self, idx: &[u16]) -> Vector {
        self.cols.get(idx).cloned().unwrap_or_default()
    }

    /// Nonzero columns in domain order.
    pub fn columns(&self) -> impl Iterator<Item = (&Index, &Vector)> {
        self.cols.iter()
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.cols.values().map(Vector::len).sum()
    }

    /// Whether the map is zero.
    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    /// All nonzero entries as (row, column, value), sorted by (row, column).
    pub fn entries(&self) -> Vec<(Index, Index, Scalar)> {
        let mut out: Vec<(Index, Index, Scalar)> = self
            .cols
            .iter()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r.clone(), c.clone(), v.clone())))
            .collect();
        out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        out
    }

    /// Applies the map to a vector of the domain.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (idx, c) in v.iter() {
            if let Some(col) = self.cols.get(idx) {
                out.add_scaled(col, c);
            }
        }
        out
    }

    /// Applies `id^{⊗offset} ⊗ self ⊗ id^{⊗rest}` to a tensor whose legs
    /// `offset .. offset + rank(domain)` lie in the domain of `self`.
    pub fn apply_at(&self, v: &Vector, offset: usize) -> Vector {
        let r = self.domain.rank();
        let mut out = Vector::zero();
        for (idx, c) in v.iter() {
            let Some(col) = self.cols.get(&idx[offset..offset + r]) else {
                continue;
            };
            for (j, d) in col.iter() {
                let mut new_idx = Index::with_capacity(idx.len() - r + j.len());
                new_idx.extend_from_slice(&idx[..offset]);
                new_idx.extend_from_slice(j);
                new_idx.extend_from_slice(&idx[offset + r..]);
                out.add_term(new_idx, c * d);
            }
        }
        out
    }

    /// A copy with the entry at (row, col) replaced by `value`.
    pub fn with_entry(&self, row: &[u16], col: &[u16], value: Scalar) -> Result<Self> {
        if !self.domain.contains(col) || !self.codomain.contains(row) {
            return Err(Error::InvalidInput(alloc::format!("entry ({row:?}, {col:?}) out of range")));
        }
        let mut out = self.clone();
        let column = out.cols.entry(col.into()).or_default();
        let current = column.coefficient(row);
        column.add_term(row.into(), value - current);
        if column.is_zero() {
            out.cols.remove(col);
        }
        Ok(out)
    }

    /// The first domain basis vector (in canonical order) on which the two
    /// maps differ, with the difference `self(x) − other(x)`.
    pub fn first_difference(&self, other: &LinearMap) -> Option<(Index, Vector)> {
        let mut keys: Vec<&Index> = self.cols.keys().chain(other.cols.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.cols.get(k).cloned().unwrap_or_default();
            let b = other.cols.get(k).cloned().unwrap_or_default();
            if a != b {
                return Some((k.clone(), a.sub(&b)));
            }
        }
        None
    }
}

fn check_vector(space: &Space, v: &Vector) -> Result<()> {
    for (idx, _) in v.iter() {
        if !space.contains(idx) {
            return Err(Error::InvalidInput(alloc::format!("index {idx:?} outside space {space}")));
        }
    }
    Ok(())
}

/// `f ∘ g`. Fails with [`Error::DomainMismatch`] unless `codomain(g) = domain(f)`.
pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    if g.codomain != f.domain {
        return Err(Error::DomainMismatch(alloc::format!(
            "cannot compose: codomain {} vs domain {}",
            g.codomain, f.domain
        )));
    }
    let cols = g
        .cols
        .iter()
        .map(|(k, col)| (k.clone(), f.apply(col)))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    Ok(LinearMap { domain: g.domain.clone(), codomain: f.codomain.clone(), cols })
}

/// `f ⊗ g` on the composite spaces: `(f⊗g)(x⊗y) = f(x)⊗g(y)`.
pub fn tensor_map(f: &LinearMap, g: &LinearMap) -> LinearMap {
    let mut cols = BTreeMap::new();
    for (i, fi) in &f.cols {
        for (j, gj) in &g.cols {
            let mut idx = i.clone();
            idx.extend_from_slice(j);
            cols.insert(idx, fi.tensor(gj));
        }
    }
    LinearMap {
        domain: f.domain.tensor(&g.domain),
        codomain: f.codomain.tensor(&g.codomain),
        cols,
    }
}

/// Whether `f` and `g` agree modulo the relations of `q` on every basis vector.
pub fn maps_equal_mod(f: &LinearMap, g: &LinearMap, q: &QuotientSpace) -> Result<bool> {
    if f.domain != g.domain {
        return Err(Error::DomainMismatch(alloc::format!(
            "domains differ: {} vs {}",
            f.domain, g.domain
        )));
    }
    if f.codomain != *q.ambient() || g.codomain != *q.ambient() {
        return Err(Error::DomainMismatch(alloc::format!(
            "codomains {} / {} are not the quotient ambient {}",
            f.codomain,
            g.codomain,
            q.ambient()
        )));
    }
    for idx in f.domain.indices() {
        let diff = f.image(&idx).sub(&g.image(&idx));
        if !diff.is_zero() && !q.project(&diff).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sum of two maps with identical spaces.
pub fn add_maps(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    if f.domain != g.domain || f.codomain != g.codomain {
        return Err(Error::DomainMismatch(alloc::format!(
            "cannot add maps {} → {} and {} → {}",
            f.domain, f.codomain, g.domain, g.codomain
        )));
    }
    let mut cols = f.cols.clone();
    for (k, v) in &g.cols {
        cols.entry(k.clone()).or_default().add_assign(v);
    }
    cols.retain(|_, v| !v.is_zero());
    Ok(LinearMap { domain: f.domain.clone(), codomain: f.codomain.clone(), cols })
}

/// `c · f`.
pub fn scale_map(f: &LinearMap, c: &Scalar) -> LinearMap {
    if c.is_zero() {
        return LinearMap::zero(f.domain.clone(), f.codomain.clone());
    }
    LinearMap {
        domain: f.domain.clone(),
        codomain: f.codomain.clone(),
        cols: f.cols.iter().map(|(k, v)| (k.clone(), v.scaled(c))).collect(),
    }
}
