//! Sign cochains on `Z_2^n`, the Cayley–Dickson doubling that produces them,
//! the Cayley-basis quasigroups `G_n`, and the 3-cocycle of a cochain.
//!
//! Elements of `Z_2^n` are `u32` bit masks; label strings print them as
//! `n`-bit binary words, most significant bit first. The element
//! `e_a^i = (−1)^i e_a` of `G_n` has quasigroup index `2a + i`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quasigroup::{EnumerationReport, FiniteQuasigroup};

/// Largest `n` accepted by [`cayley_dickson_cochain`].
pub const MAX_CAYLEY_N: usize = 4;

/// A normalized 2-cochain `F: Z_2^n × Z_2^n → {±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    n: usize,
    values: Vec<i8>,
}

impl Cochain2 {
    /// Builds a cochain from its row-major value table (`a` then `b`).
    ///
    /// Fails with [`Error::InvalidCochain`] unless every value is `±1` and
    /// `F(0,b) = F(a,0) = 1`.
    pub fn new(n: usize, values: Vec<i8>) -> Result<Self> {
        if n > 16 {
            return Err(Error::SizeLimit(alloc::format!("cochain rank {n} too large")));
        }
        let size = 1usize << n;
        if values.len() != size * size {
            return Err(Error::InvalidCochain(alloc::format!(
                "expected {} values for n = {n}, got {}",
                size * size,
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|&v| v != 1 && v != -1) {
            return Err(Error::InvalidCochain(alloc::format!(
                "F({},{}) = {} is not ±1",
                pos / size,
                pos % size,
                values[pos]
            )));
        }
        let f = Self { n, values };
        for a in 0..size as u32 {
            if f.value(0, a) != 1 || f.value(a, 0) != 1 {
                return Err(Error::InvalidCochain(alloc::format!(
                    "not normalized: F(0,{a}) or F({a},0) differs from 1"
                )));
            }
        }
        Ok(f)
    }

    /// Builds a cochain from a function.
    pub fn from_fn(n: usize, f: impl Fn(u32, u32) -> i8) -> Result<Self> {
        let size = 1u32 << n;
        let values = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect();
        Self::new(n, values)
    }

    /// The trivial cochain `F ≡ 1` (the untwisted group `Z_2^{n+1}`).
    pub fn trivial(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| 1)
    }

    /// The rank `n` of `Z_2^n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|Z_2^n| = 2^n`.
    pub fn size(&self) -> usize {
        1 << self.n
    }

    /// `F(a, b)`.
    #[inline]
    pub fn value(&self, a: u32, b: u32) -> i8 {
        self.values[a as usize * self.size() + b as usize]
    }

    /// The row-major value table.
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.values.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    /// The `Z_2` exponent of `F(a,b)`: 0 for `+1`, 1 for `−1`.
    #[inline]
    pub fn exponent(&self, a: u32, b: u32) -> usize {
        usize::from(self.value(a, b) < 0)
    }
}

/// Binary word for `a ∈ Z_2^n`, most significant bit first (width `max(n,1)`).
pub fn bits(a: u32, n: usize) -> String {
    let width = n.max(1);
    (0..width).rev().map(|k| if a >> k & 1 == 1 { '1' } else { '0' }).collect()
}

/// Label of the quasigroup element `e_a^i`.
pub fn element_label(a: u32, i: usize, n: usize) -> String {
    alloc::format!("e[a={},i={i}]", bits(a, n))
}

/// Label of the delta function `f_a^i` on `e_a^i`.
pub fn function_label(a: u32, i: usize, n: usize) -> String {
    alloc::format!("f[a={},i={i}]", bits(a, n))
}

/// An element of the Cayley–Dickson algebra of dimension `2^n` with
/// integer coordinates on the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Cd(Vec<i64>);

impl Cd {
    fn basis(a: usize, dim: usize) -> Self {
        let mut v = alloc::vec![0; dim];
        v[a] = 1;
        Cd(v)
    }

    fn halves(&self) -> (Cd, Cd) {
        let h = self.0.len() / 2;
        (Cd(self.0[..h].to_vec()), Cd(self.0[h..].to_vec()))
    }

    fn join(a: Cd, b: Cd) -> Cd {
        let mut v = a.0;
        v.extend(b.0);
        Cd(v)
    }

    fn add(&self, o: &Cd) -> Cd {
        Cd(self.0.iter().zip(&o.0).map(|(x, y)| x + y).collect())
    }

    fn neg(&self) -> Cd {
        Cd(self.0.iter().map(|x| -x).collect())
    }

    /// `(a, b)* = (a*, −b)`; the identity on ℝ.
    fn conj(&self) -> Cd {
        if self.0.len() == 1 {
            return self.clone();
        }
        let (a, b) = self.halves();
        Cd::join(a.conj(), b.neg())
    }

    /// `(a,b)(c,d) = (ac − d*b, da + bc*)`.
    fn mul(&self, o: &Cd) -> Cd {
        if self.0.len() == 1 {
            return Cd(alloc::vec![self.0[0] * o.0[0]]);
        }
        let (a, b) = self.halves();
        let (c, d) = o.halves();
        let first = a.mul(&c).add(&d.conj().mul(&b).neg());
        let second = d.mul(&a).add(&b.mul(&c.conj()));
        Cd::join(first, second)
    }
}

/// The sign cochain of the `2^n`-dimensional Cayley–Dickson algebra,
/// obtained by iterated doubling from ℝ with
/// `(a,b)(c,d) = (ac − d̄b, da + b c̄)`; bit `n−1` of a basis index selects
/// the second half. Reads `e_a e_b = F(a,b) e_{a+b}` off the basis products.
///
/// `n = 0` gives the trivial cochain on the one-element group.
pub fn cayley_dickson_cochain(n: usize) -> Result<Cochain2> {
    if n > MAX_CAYLEY_N {
        return Err(Error::SizeLimit(alloc::format!(
            "Cayley–Dickson cochains are supported for n ≤ {MAX_CAYLEY_N}, got {n}"
        )));
    }
    let dim = 1usize << n;
    let mut values = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let p = Cd::basis(a, dim).mul(&Cd::basis(b, dim));
            let support: Vec<(usize, i64)> = p.0.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
            match support.as_slice() {
                [(c, s)] if *c == a ^ b && s.abs() == 1 => values.push(*s as i8),
                _ => {
                    return Err(Error::InvalidCochain(alloc::format!(
                        "basis product e_{a} e_{b} is not a signed basis vector"
                    )))
                }
            }
        }
    }
    Cochain2::new(n, values)
}

/// The quasigroup `G_n = {e_a^i}` with `e_a^i e_b^j = F(a,b) e_{a+b}^{i+j}`,
/// the sign folded into the `Z_2` exponent. Element `e_a^i` has index `2a+i`.
pub fn build_gn(f: &Cochain2) -> Result<FiniteQuasigroup> {
    let n = f.n();
    let labels = (0..f.size() as u32)
        .flat_map(|a| (0..2).map(move |i| element_label(a, i, n)))
        .collect();
    let q = FiniteQuasigroup::from_fn(labels, 0, |x, y| {
        let (a, i) = ((x / 2) as u32, x % 2);
        let (b, j) = ((y / 2) as u32, y % 2);
        2 * (a ^ b) as usize + (i + j + f.exponent(a, b)) % 2
    })?;
    let violations = q.validate();
    if let Some(v) = violations.first() {
        return Err(Error::InvalidCochain(alloc::format!("G_n fails the {} law: {v:?}", v.name())));
    }
    Ok(q)
}

/// A sign-valued 3-cochain `ψ: (Z_2^n)^3 → {±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    n: usize,
    values: Vec<i8>,
}

impl Cocycle3 {
    /// Builds `ψ` from a function.
    pub fn from_fn(n: usize, f: impl Fn(u32, u32, u32) -> i8) -> Self {
        let size = 1u32 << n;
        let mut values = Vec::with_capacity((size as usize).pow(3));
        for b in 0..size {
            for c in 0..size {
                for d in 0..size {
                    values.push(f(b, c, d));
                }
            }
        }
        Self { n, values }
    }

    /// The rank `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `ψ(b, c, d)`.
    #[inline]
    pub fn value(&self, b: u32, c: u32, d: u32) -> i8 {
        let s = 1usize << self.n;
        self.values[(b as usize * s + c as usize) * s + d as usize]
    }

    /// Whether `ψ ≡ 1`.
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    /// Number of triples with `ψ = −1`.
    pub fn negative_count(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }

    /// The multiplicative group 3-cocycle identity
    /// `ψ(c,d,e)ψ(b,c+d,e)ψ(b,c,d) = ψ(b+c,d,e)ψ(b,c,d+e)` over all
    /// quadruples, with the first failure in lexicographic order.
    pub fn cocycle_identity(&self) -> EnumerationReport {
        let size = 1u32 << self.n;
        let mut checked = 0;
        for b in 0..size {
            for c in 0..size {
                for d in 0..size {
                    for e in 0..size {
                        checked += 1;
                        let lhs = self.value(c, d, e) * self.value(b, c ^ d, e) * self.value(b, c, d);
                        let rhs = self.value(b ^ c, d, e) * self.value(b, c, d ^ e);
                        if lhs != rhs {
                            return EnumerationReport {
                                holds: false,
                                checked,
                                first_failure: Some(alloc::vec![b as usize, c as usize, d as usize, e as usize]),
                            };
                        }
                    }
                }
            }
        }
        EnumerationReport { holds: true, checked, first_failure: None }
    }
}

/// The 3-cocycle determined by `F`: its group coboundary
/// `ψ(b,c,d) = F(b,c+d) F(c,d) F(b,c) F(b+c,d)`
/// (signs, so division is multiplication). This is the sign of the
/// associator: `e_b(e_c e_d) = ψ(b,c,d) (e_b e_c) e_d`.
pub fn coboundary_3cocycle(f: &Cochain2) -> Cocycle3 {
    Cocycle3::from_fn(f.n(), |b, c, d| f.value(b, c ^ d) * f.value(c, d) * f.value(b, c) * f.value(b ^ c, d))
}

/// The four-factor expression `F(b,c+d) F(c,d) F(d,c+b) F(c,b)` taken
/// literally. It is not a cocycle in general; together with the diagonal
/// factors of [`beta_coefficient_sign`] it reproduces the coboundary.
pub fn displayed_psi(f: &Cochain2) -> Cocycle3 {
    Cocycle3::from_fn(f.n(), |b, c, d| f.value(b, c ^ d) * f.value(c, d) * f.value(d, c ^ b) * f.value(c, b))
}

/// The full coefficient sign of `f_b^j ⊗ f_c^k ⊗ f_d^l` in the coassociator
/// of `f_0^i`: `F(x,x) · [F(b,c+d)F(c,d)F(d,c+b)F(c,b)] · F(d,d)F(c,c)F(b,b)`
/// with `x = b+c+d`.
pub fn beta_coefficient_sign(f: &Cochain2) -> Cocycle3 {
    let disp = displayed_psi(f);
    Cocycle3::from_fn(f.n(), |b, c, d| {
        let x = b ^ c ^ d;
        f.value(x, x) * disp.value(b, c, d) * f.value(d, d) * f.value(c, c) * f.value(b, b)
    })
}

/// Compares `ψ` with the quasigroup associator of `G_n`: for every triple
/// of unsigned elements, `β(e_a, e_b, e_c)` must be `e_0^0` when
/// `ψ(a,b,c) = 1` and `e_0^1` when `ψ(a,b,c) = −1`.
pub fn psi_matches_quasigroup_associator_report(f: &Cochain2, psi: &Cocycle3) -> Result<EnumerationReport> {
    let q = build_gn(f)?;
    let assoc = q.associator()?;
    let size = f.size() as u32;
    let mut checked = 0;
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                checked += 1;
                let beta = assoc.beta(2 * a as usize, 2 * b as usize, 2 * c as usize);
                let expected = usize::from(psi.value(a, b, c) < 0);
                if beta != expected {
                    return Ok(EnumerationReport {
                        holds: false,
                        checked,
                        first_failure: Some(alloc::vec![a as usize, b as usize, c as usize]),
                    });
                }
            }
        }
    }
    Ok(EnumerationReport { holds: true, checked, first_failure: None })
}

/// Whether the coboundary 3-cocycle of `F` matches the associator of `G_n`.
pub fn psi_matches_quasigroup_associator(f: &Cochain2) -> Result<bool> {
    Ok(psi_matches_quasigroup_associator_report(f, &coboundary_3cocycle(f))?.holds)
}
