//! Finite-dimensional unital algebras given by structure constants, with a
//! fast componentwise product on tensor powers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linear::{ix, Index, LinearMap, Space, Vector};
use crate::scalar::Scalar;

/// A unital (possibly nonassociative) algebra on a single labeled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    space: Space,
    m: LinearMap,
    unit: Vector,
    /// `table[i * dim + j]` is the product `e_i e_j` as sparse terms.
    table: Vec<Vec<(u16, Scalar)>>,
    /// `partners[i]` lists the `j` with `e_i e_j ≠ 0`.
    partners: Vec<Vec<u16>>,
}

impl Algebra {
    /// An algebra from its multiplication map `space ⊗ space → space` and unit.
    pub fn new(m: LinearMap, unit: Vector) -> Result<Self> {
        let space = m.codomain().clone();
        if space.rank() != 1 {
            return Err(Error::DomainMismatch(alloc::format!("algebra space {space} must be a single basis")));
        }
        if *m.domain() != space.tensor(&space) {
            return Err(Error::DomainMismatch(alloc::format!(
                "multiplication must map {space}⊗{space} → {space}, got {} → {}",
                m.domain(),
                m.codomain()
            )));
        }
        if unit.iter().any(|(i, _)| !space.contains(i)) {
            return Err(Error::DomainMismatch(alloc::format!("unit is not a vector of {space}")));
        }
        let dim = space.dim();
        let mut table = alloc::vec![Vec::new(); dim * dim];
        let mut partners = alloc::vec![Vec::new(); dim];
        for (idx, col) in m.columns() {
            let (i, j) = (idx[0] as usize, idx[1] as usize);
            table[i * dim + j] = col.iter().map(|(k, c)| (k[0], c.clone())).collect();
            partners[i].push(idx[1]);
        }
        Ok(Self { space, m, unit, table, partners })
    }

    /// An algebra from the product of basis elements.
    pub fn from_fn(space: Space, unit: Vector, mut f: impl FnMut(u16, u16) -> Vector) -> Result<Self> {
        let m = LinearMap::from_fn(space.tensor(&space), space.clone(), |idx| f(idx[0], idx[1]))?;
        Self::new(m, unit)
    }

    /// The underlying space.
    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The multiplication map.
    pub fn m(&self) -> &LinearMap {
        &self.m
    }

    /// The unit element.
    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// `e_i e_j` as sparse terms.
    pub fn product_terms(&self, i: u16, j: u16) -> &[(u16, Scalar)] {
        &self.table[i as usize * self.dim() + j as usize]
    }

    /// The `j` with `e_i e_j ≠ 0`.
    pub fn partners(&self, i: u16) -> &[u16] {
        &self.partners[i as usize]
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: u16, j: u16) -> Vector {
        Vector::from_terms(self.product_terms(i, j).iter().map(|(k, c)| (ix(&[*k]), c.clone())))
    }

    /// Product of two vectors of the algebra.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        mul_tensors(&[self], x, y)
    }

    /// Contracts legs `offset` and `offset + 1` of a tensor with the product.
    pub fn mul_at(&self, v: &Vector, offset: usize) -> Vector {
        let mut out = BTreeMap::new();
        for (idx, c) in v.iter() {
            for (k, d) in self.product_terms(idx[offset], idx[offset + 1]) {
                let mut new_idx = Index::with_capacity(idx.len() - 1);
                new_idx.extend_from_slice(&idx[..offset]);
                new_idx.push(*k);
                new_idx.extend_from_slice(&idx[offset + 2..]);
                accumulate(&mut out, new_idx, c * d);
            }
        }
        finish(out)
    }

    /// `1^{⊗k}`.
    pub fn unit_power(&self, k: usize) -> Vector {
        let mut v = Vector::basis(Index::new());
        for _ in 0..k {
            v = v.tensor(&self.unit);
        }
        v
    }

    /// Whether `e_i e_j = e_j e_i` for all basis pairs.
    pub fn is_commutative(&self) -> bool {
        let d = self.dim() as u16;
        (0..d).all(|i| (0..d).all(|j| self.product_terms(i, j) == self.product_terms(j, i)))
    }

    /// Whether `x` commutes with every basis element.
    pub fn is_central(&self, x: &Vector) -> bool {
        let d = self.dim() as u16;
        (0..d).all(|j| {
            let e = Vector::basis(ix(&[j]));
            self.mul(x, &e) == self.mul(&e, x)
        })
    }
}

fn accumulate(out: &mut BTreeMap<Index, Scalar>, idx: Index, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match out.entry(idx) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
    }
}

fn finish(out: BTreeMap<Index, Scalar>) -> Vector {
    Vector::from_terms(out.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// Componentwise product of two tensors in `A_1 ⊗ … ⊗ A_k`, leg `l`
/// multiplied in `legs[l]`.
///
/// Pairs of terms are matched by a join on the partner lists, so sparse
/// products (function algebras, grouplike bases) cost close to the size of
/// the output rather than `|x|·|y|`.
pub fn mul_tensors(legs: &[&Algebra], x: &Vector, y: &Vector) -> Vector {
    let k = legs.len();
    let mut out = BTreeMap::new();
    let y_terms = y.terms();
    let emit = |i: &Index, c: &Scalar, j: &Index, d: &Scalar, out: &mut BTreeMap<Index, Scalar>| {
        // Expand the product of the per-leg product vectors.
        let mut partial: Vec<(Index, Scalar)> = alloc::vec![(Index::new(), c * d)];
        for l in 0..k {
            let terms = legs[l].product_terms(i[l], j[l]);
            if terms.is_empty() {
                return;
            }
            if terms.len() == 1 {
                let (t, e) = &terms[0];
                for (idx, s) in partial.iter_mut() {
                    idx.push(*t);
                    *s *= e;
                }
            } else {
                let mut next = Vec::with_capacity(partial.len() * terms.len());
                for (idx, s) in &partial {
                    for (t, e) in terms {
                        let mut n = idx.clone();
                        n.push(*t);
                        next.push((n, s * e));
                    }
                }
                partial = next;
            }
        }
        for (idx, s) in partial {
            accumulate(out, idx, s);
        }
    };
    for (i, c) in x.iter() {
        let mut candidates: usize = 1;
        for l in 0..k {
            candidates = candidates.saturating_mul(legs[l].partners(i[l]).len());
        }
        if candidates == 0 {
            continue;
        }
        if candidates <= y_terms.len() {
            let lists: Vec<&[u16]> = (0..k).map(|l| legs[l].partners(i[l])).collect();
            let mut pos = alloc::vec![0usize; k];
            'outer: loop {
                let j: Index = (0..k).map(|l| lists[l][pos[l]]).collect();
                if let Some(d) = y_terms.get(&j) {
                    emit(i, c, &j, d, &mut out);
                }
                let mut l = k;
                loop {
                    if l == 0 {
                        break 'outer;
                    }
                    l -= 1;
                    pos[l] += 1;
                    if pos[l] < lists[l].len() {
                        break;
                    }
                    pos[l] = 0;
                }
            }
        } else {
            for (j, d) in y_terms {
                if (0..k).all(|l| !legs[l].product_terms(i[l], j[l]).is_empty()) {
                    emit(i, c, j, d, &mut out);
                }
            }
        }
    }
    finish(out)
}

/// The tensor product algebra `A ⊗ B` on a single basis with index
/// `a·dim(B) + b` and labels `"a⊗b"`, multiplied factorwise.
pub fn tensor_algebra(name: &str, a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let db = b.dim();
    let labels = a
        .space()
        .labels()
        .iter()
        .flat_map(|x| b.space().labels().into_iter().map(move |y| alloc::format!("{x}⊗{y}")))
        .collect();
    let space = Space::new(name, labels)?;
    let unit = flatten_pair(&a.unit().tensor(b.unit()), db);
    Algebra::from_fn(space, unit, |p, q| {
        let (ai, bi) = (p / db as u16, p % db as u16);
        let (aj, bj) = (q / db as u16, q % db as u16);
        flatten_pair(&a.mul_basis(ai, aj).tensor(&b.mul_basis(bi, bj)), db)
    })
}

/// Merges each adjacent pair of legs `(a, b)` into the single index
/// `a·db + b`, for every pair in the tensor.
pub fn flatten_pair(v: &Vector, db: usize) -> Vector {
    v.map_indices(|i| i.chunks(2).map(|p| p[0] * db as u16 + p[1]).collect())
}

/// Splits each leg `h` into the two legs `(h / db, h % db)`.
pub fn split_pair(v: &Vector, db: usize) -> Vector {
    v.map_indices(|i| i.iter().flat_map(|&h| [h / db as u16, h % db as u16]).collect())
}
