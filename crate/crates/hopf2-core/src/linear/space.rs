//! Labeled bases and their tensor products.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A multi-index: one basis position per tensor factor.
pub type Index = SmallVec<[u16; 6]>;

/// Separator placed between factor labels of a tensor-product label.
pub const TENSOR_SEP: &str = "⊗";

/// Label of the single basis vector of the ground field (the empty tensor).
pub const SCALAR_LABEL: &str = "1";

/// Largest dimension of a single tensor factor (indices are `u16`).
pub const MAX_FACTOR_DIM: usize = u16::MAX as usize;

/// An ordered list of unique basis labels.
#[derive(Debug, PartialEq, Eq)]
pub struct Basis {
    name: String,
    labels: Vec<String>,
    lookup: BTreeMap<String, u16>,
}

impl Basis {
    /// Builds a basis; labels must be unique and non-empty in number.
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Arc<Self>> {
        let name = name.into();
        if labels.is_empty() {
            return Err(Error::InvalidInput(alloc::format!("basis {name} has no labels")));
        }
        if labels.len() > MAX_FACTOR_DIM {
            return Err(Error::SizeLimit(alloc::format!(
                "basis {name} has {} labels (max {MAX_FACTOR_DIM})",
                labels.len()
            )));
        }
        let mut lookup = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            if lookup.insert(label.clone(), i as u16).is_some() {
                return Err(Error::InvalidInput(alloc::format!(
                    "duplicate label {label:?} in basis {name}"
                )));
            }
        }
        Ok(Arc::new(Self { name, labels, lookup }))
    }

    /// Human-readable name of the space (e.g. `"k[G_3]"`).
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of basis vectors.
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Label of basis vector `i`.
    pub fn label(&self, i: u16) -> &str {
        &self.labels[i as usize]
    }

    /// All labels in basis order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Position of `label`, if present.
    pub fn position(&self, label: &str) -> Option<u16> {
        self.lookup.get(label).copied()
    }
}

/// A tensor product of labeled bases. Rank 0 is the ground field.
///
/// Basis vectors of a rank-`r` space are multi-indices of length `r`,
/// ordered lexicographically (first factor most significant), which is the
/// canonical ordering of every sparse structure in this crate.
#[derive(Clone)]
pub struct Space {
    factors: Vec<Arc<Basis>>,
}

impl Space {
    /// The ground field, with the single basis label `"1"`.
    pub fn scalars() -> Self {
        Self { factors: Vec::new() }
    }

    /// A rank-one space on fresh labels.
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        Ok(Self::from_basis(Basis::new(name, labels)?))
    }

    /// A rank-one space on an existing basis.
    pub fn from_basis(basis: Arc<Basis>) -> Self {
        Self { factors: alloc::vec![basis] }
    }

    /// The tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &Space) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self { factors }
    }

    /// The `k`-fold tensor power.
    pub fn power(&self, k: usize) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() * k);
        for _ in 0..k {
            factors.extend(self.factors.iter().cloned());
        }
        Self { factors }
    }

    /// Number of tensor factors.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The tensor factors.
    pub fn factors(&self) -> &[Arc<Basis>] {
        &self.factors
    }

    /// Factor `i`.
    pub fn factor(&self, i: usize) -> &Arc<Basis> {
        &self.factors[i]
    }

    /// The space spanned by factors `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        Self { factors: self.factors[start..end].to_vec() }
    }

    /// Total dimension (product of factor dimensions).
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|b| b.dim()).product()
    }

    /// Whether `idx` is a valid basis multi-index of this space.
    pub fn contains(&self, idx: &[u16]) -> bool {
        idx.len() == self.factors.len()
            && idx.iter().zip(&self.factors).all(|(&i, b)| (i as usize) < b.dim())
    }

    /// All basis multi-indices in lexicographic order.
    pub fn indices(&self) -> Indices<'_> {
        Indices { space: self, next: Some(SmallVec::from_elem(0, self.rank())) }
    }

    /// Composite label of a basis multi-index.
    pub fn label_of(&self, idx: &[u16]) -> String {
        if idx.is_empty() {
            return String::from(SCALAR_LABEL);
        }
        let mut out = String::new();
        for (k, (&i, b)) in idx.iter().zip(&self.factors).enumerate() {
            if k > 0 {
                out.push_str(TENSOR_SEP);
            }
            out.push_str(b.label(i));
        }
        out
    }

    /// All composite labels in basis order.
    pub fn labels(&self) -> Vec<String> {
        self.indices().map(|i| self.label_of(&i)).collect()
    }

    /// Inverse of [`Space::label_of`]. Factor labels may themselves contain
    /// the tensor separator inside brackets or parentheses.
    pub fn index_of(&self, label: &str) -> Option<Index> {
        if self.factors.is_empty() {
            return (label == SCALAR_LABEL).then(Index::new);
        }
        let parts = split_top_level(label);
        if parts.len() != self.factors.len() {
            return None;
        }
        parts.iter().zip(&self.factors).map(|(p, b)| b.position(p)).collect()
    }
}

/// Splits a composite label at separators that are not nested in brackets.
fn split_top_level(label: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (pos, ch) in label.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if depth == 0 && label[pos..].starts_with(TENSOR_SEP) && pos >= start {
            parts.push(&label[start..pos]);
            start = pos + TENSOR_SEP.len();
        }
    }
    parts.push(&label[start..]);
    parts
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| Arc::ptr_eq(a, b) || a.labels == b.labels)
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("k");
        }
        for (k, b) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(TENSOR_SEP)?;
            }
            write!(f, "{}", b.name)?;
        }
        Ok(())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Iterator over the basis multi-indices of a [`Space`].
pub struct Indices<'a> {
    space: &'a Space,
    next: Option<Index>,
}

impl Iterator for Indices<'_> {
    type Item = Index;

    fn next(&mut self) -> Option<Index> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut k = succ.len();
        let mut advanced = false;
        while k > 0 {
            k -= 1;
            if (succ[k] as usize) + 1 < self.space.factors[k].dim() {
                succ[k] += 1;
                advanced = true;
                break;
            }
            succ[k] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(current)
    }
}
