//! JSON wire formats for every constructed object.
//!
//! Each document carries a `bases` table mapping a basis name to its ordered
//! labels. Spaces are lists of basis names (one per tensor factor; the empty
//! list is the ground field), and tensors list their nonzero entries with
//! one label per factor, so that labels containing `⊗` stay unambiguous.
//! Coefficients are exact rationals written `"p/q"` (or `"p"`). Entries are
//! sorted by their multi-indices.

use std::collections::BTreeMap;
use std::sync::Arc;

use hopf2_core::algebroid::CentralHopfAlgebroidData;
use hopf2_core::cayley::Cochain2;
use hopf2_core::hopf::{Algebra, Claim, CoassociativePairData, HopfStructure};
use hopf2_core::hopf2::CoherentHopf2Bundle;
use hopf2_core::linear::{Basis, Index, LinearMap, Space, Vector};
use hopf2_core::quasigroup::FiniteQuasigroup;
use hopf2_core::scalar;
use serde::{Deserialize, Serialize};

/// Errors raised while decoding a document.
#[derive(Debug, thiserror::Error)]
pub enum WireError {
    /// The text is not valid JSON for the expected document shape.
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// The document parses but references unknown bases or labels, or
    /// describes an object the core library rejects.
    #[error("invalid document: {0}")]
    Invalid(String),
}

impl From<hopf2_core::Error> for WireError {
    fn from(e: hopf2_core::Error) -> Self {
        WireError::Invalid(e.to_string())
    }
}

/// Decoding result.
pub type WireResult<T> = Result<T, WireError>;

fn invalid<T>(msg: impl Into<String>) -> WireResult<T> {
    Err(WireError::Invalid(msg.into()))
}

/// A sparse tensor entry: row labels, column labels, coefficient.
pub type EntryJson = (Vec<String>, Vec<String>, String);

/// A linear map between spaces named by their factor bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMapJson {
    /// Domain factors (basis names).
    pub domain: Vec<String>,
    /// Codomain factors (basis names).
    pub codomain: Vec<String>,
    /// Nonzero entries `[row, column, "p/q"]`.
    pub entries: Vec<EntryJson>,
}

/// A vector: its space and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    /// Factors (basis names).
    pub space: Vec<String>,
    /// Nonzero terms `[labels, "p/q"]`.
    pub terms: Vec<(Vec<String>, String)>,
}

/// A Hopf structure `(m, 1, Δ, ε, S)` with its claimed axiom system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    /// Display name.
    pub name: String,
    /// `HopfAlgebra`, `HopfCoquasigroup` or `HopfQuasigroup`.
    pub claim: String,
    /// Multiplication.
    pub m: LinearMapJson,
    /// Unit.
    pub unit: VectorJson,
    /// Coproduct.
    pub delta: LinearMapJson,
    /// Counit.
    pub counit: LinearMapJson,
    /// Antipode.
    pub antipode: LinearMapJson,
}

/// A finite quasigroup by labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasigroupJson {
    /// Element labels in order.
    pub elements: Vec<String>,
    /// `table[g][h]` is the label of `gh`.
    pub table: Vec<Vec<String>>,
    /// The unit.
    pub unit: String,
    /// `inverse[g]` is the label of `g⁻¹`.
    pub inverse: Vec<String>,
}

/// A normalized 2-cochain `F` on `Z_2^n`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    /// Rank of `Z_2^n`.
    pub n: usize,
    /// `values[a][b] = F(a, b) ∈ {1, -1}`.
    pub values: Vec<Vec<i8>>,
}

/// The central-Hopf-algebroid maps on an algebra `H` over a base `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebroidMapsJson {
    /// Source `B → H`.
    pub s: LinearMapJson,
    /// Target `B → H`.
    pub t: LinearMapJson,
    /// Coproduct `H → H⊗H` (a representative of the `H⊗_B H` value).
    pub delta: LinearMapJson,
    /// Counit `H → B`.
    pub eps: LinearMapJson,
    /// Antipode `H → H`.
    pub antipode: LinearMapJson,
}

/// The body of a document, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Body {
    /// A finite quasigroup, optionally with the cochain it came from.
    Quasigroup {
        /// The quasigroup.
        quasigroup: QuasigroupJson,
        /// The generating 2-cochain, for Cayley-basis quasigroups.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cochain: Option<CochainJson>,
    },
    /// A Hopf (co)quasigroup or Hopf algebra.
    Hopf {
        /// The structure.
        hopf: HopfJson,
    },
    /// A coassociative pair `(A, B, φ)`.
    Pair {
        /// The Hopf algebra `A`.
        a: HopfJson,
        /// The Hopf coquasigroup `B`.
        b: HopfJson,
        /// `φ: B → A`.
        phi: LinearMapJson,
    },
    /// A central Hopf algebroid `H` over `B`.
    Algebroid {
        /// `H` as an algebra, named.
        h_name: String,
        /// Multiplication of `H`.
        h_m: LinearMapJson,
        /// Unit of `H`.
        h_unit: VectorJson,
        /// The base `B`.
        b: HopfJson,
        /// `s, t, Δ, ε, S`.
        maps: AlgebroidMapsJson,
    },
    /// A coherent Hopf 2-algebra bundle.
    Hopf2 {
        /// The base `B`.
        b: HopfJson,
        /// `H` with `▲, ε_H, S_H`.
        hopf: HopfJson,
        /// `s, t, Δ, ε, S` on `H` over `B`.
        algebroid: AlgebroidMapsJson,
        /// The coassociator `H → B⊗B⊗B`, if present.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<LinearMapJson>,
    },
}

/// A complete document: basis table plus body.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    /// Basis name → labels.
    pub bases: BTreeMap<String, Vec<String>>,
    /// The object.
    #[serde(flatten)]
    pub body: Body,
}

impl Document {
    /// The `kind` tag of the body.
    pub fn kind(&self) -> &'static str {
        match self.body {
            Body::Quasigroup { .. } => "quasigroup",
            Body::Hopf { .. } => "hopf",
            Body::Pair { .. } => "pair",
            Body::Algebroid { .. } => "algebroid",
            Body::Hopf2 { .. } => "hopf2",
        }
    }

    /// Pretty JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Parses JSON text.
    pub fn from_json(text: &str) -> WireResult<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

// ---------------------------------------------------------------- encoding

/// Collects the bases referenced while encoding.
#[derive(Default)]
struct Encoder {
    bases: BTreeMap<String, Vec<String>>,
}

impl Encoder {
    fn space(&mut self, s: &Space) -> Vec<String> {
        s.factors()
            .iter()
            .map(|b| {
                self.bases.entry(b.name().to_string()).or_insert_with(|| b.labels().to_vec());
                b.name().to_string()
            })
            .collect()
    }

    fn labels(s: &Space, idx: &Index) -> Vec<String> {
        idx.iter().zip(s.factors()).map(|(&i, b)| b.label(i).to_string()).collect()
    }

    fn map(&mut self, f: &LinearMap) -> LinearMapJson {
        let (d, c) = (f.domain(), f.codomain());
        LinearMapJson {
            domain: self.space(d),
            codomain: self.space(c),
            entries: f
                .entries()
                .into_iter()
                .map(|(row, col, v)| (Self::labels(c, &row), Self::labels(d, &col), scalar::format(&v)))
                .collect(),
        }
    }

    fn vector(&mut self, s: &Space, v: &Vector) -> VectorJson {
        VectorJson {
            space: self.space(s),
            terms: v.iter().map(|(i, c)| (Self::labels(s, i), scalar::format(c))).collect(),
        }
    }

    fn hopf(&mut self, h: &HopfStructure) -> HopfJson {
        HopfJson {
            name: h.name().to_string(),
            claim: h.claim().name().to_string(),
            m: self.map(h.m()),
            unit: self.vector(h.space(), h.unit()),
            delta: self.map(h.delta()),
            counit: self.map(h.counit()),
            antipode: self.map(h.antipode()),
        }
    }

    fn algebroid_maps(&mut self, d: &CentralHopfAlgebroidData) -> AlgebroidMapsJson {
        AlgebroidMapsJson {
            s: self.map(&d.s),
            t: self.map(&d.t),
            delta: self.map(&d.delta),
            eps: self.map(&d.eps),
            antipode: self.map(&d.antipode),
        }
    }

    fn finish(self, body: Body) -> Document {
        Document { bases: self.bases, body }
    }
}

fn quasigroup_json(q: &FiniteQuasigroup) -> QuasigroupJson {
    let n = q.order();
    QuasigroupJson {
        elements: q.labels().to_vec(),
        table: (0..n).map(|g| (0..n).map(|h| q.label(q.mul(g, h)).to_string()).collect()).collect(),
        unit: q.label(q.unit()).to_string(),
        inverse: (0..n).map(|g| q.label(q.inv(g)).to_string()).collect(),
    }
}

/// Encodes a 2-cochain.
pub fn cochain_json(f: &Cochain2) -> CochainJson {
    CochainJson { n: f.n(), values: f.rows() }
}

/// Encodes a quasigroup, with its cochain if given.
pub fn encode_quasigroup(q: &FiniteQuasigroup, cochain: Option<&Cochain2>) -> Document {
    Document {
        bases: BTreeMap::new(),
        body: Body::Quasigroup { quasigroup: quasigroup_json(q), cochain: cochain.map(cochain_json) },
    }
}

/// Encodes a Hopf structure.
pub fn encode_hopf(h: &HopfStructure) -> Document {
    let mut e = Encoder::default();
    let hopf = e.hopf(h);
    e.finish(Body::Hopf { hopf })
}

/// Encodes a coassociative pair.
pub fn encode_pair(p: &CoassociativePairData) -> Document {
    let mut e = Encoder::default();
    let (a, b, phi) = (e.hopf(&p.a), e.hopf(&p.b), e.map(&p.phi));
    e.finish(Body::Pair { a, b, phi })
}

/// Encodes a central Hopf algebroid.
pub fn encode_algebroid(d: &CentralHopfAlgebroidData) -> Document {
    let mut e = Encoder::default();
    let h_m = e.map(d.h.m());
    let h_unit = e.vector(d.h.space(), d.h.unit());
    let h_name = d.h.space().factor(0).name().to_string();
    let b = e.hopf(&d.b);
    let maps = e.algebroid_maps(d);
    e.finish(Body::Algebroid { h_name, h_m, h_unit, b, maps })
}

/// Encodes a coherent Hopf 2-algebra bundle.
pub fn encode_hopf2(x: &CoherentHopf2Bundle) -> Document {
    let mut e = Encoder::default();
    let b = e.hopf(&x.b);
    let hopf = e.hopf(&x.hopf);
    let algebroid = e.algebroid_maps(&x.algebroid);
    let alpha = x.alpha.as_ref().map(|a| e.map(a));
    e.finish(Body::Hopf2 { b, hopf, algebroid, alpha })
}

// ---------------------------------------------------------------- decoding

/// Resolves basis names against a document's table, sharing one
/// `Arc<Basis>` per name.
struct Decoder {
    bases: BTreeMap<String, Arc<Basis>>,
}

impl Decoder {
    fn new(table: &BTreeMap<String, Vec<String>>) -> WireResult<Self> {
        let mut bases = BTreeMap::new();
        for (name, labels) in table {
            bases.insert(name.clone(), Basis::new(name.clone(), labels.clone())?);
        }
        Ok(Self { bases })
    }

    fn space(&self, names: &[String]) -> WireResult<Space> {
        let mut s = Space::scalars();
        for n in names {
            match self.bases.get(n) {
                Some(b) => s = s.tensor(&Space::from_basis(b.clone())),
                None => return invalid(format!("unknown basis {n:?}")),
            }
        }
        Ok(s)
    }

    fn index(s: &Space, labels: &[String]) -> WireResult<Index> {
        if labels.len() != s.rank() {
            return invalid(format!("{} labels given for a rank-{} space {s}", labels.len(), s.rank()));
        }
        labels
            .iter()
            .zip(s.factors())
            .map(|(l, b)| b.position(l).ok_or_else(|| WireError::Invalid(format!("unknown label {l:?} in {}", b.name()))))
            .collect()
    }

    fn map(&self, f: &LinearMapJson) -> WireResult<LinearMap> {
        let (d, c) = (self.space(&f.domain)?, self.space(&f.codomain)?);
        let mut entries = Vec::with_capacity(f.entries.len());
        for (row, col, v) in &f.entries {
            entries.push((Self::index(&c, row)?, Self::index(&d, col)?, scalar::parse(v)?));
        }
        Ok(LinearMap::from_entries(d, c, entries)?)
    }

    fn vector(&self, v: &VectorJson) -> WireResult<(Space, Vector)> {
        let s = self.space(&v.space)?;
        let mut terms = Vec::with_capacity(v.terms.len());
        for (labels, c) in &v.terms {
            terms.push((Self::index(&s, labels)?, scalar::parse(c)?));
        }
        Ok((s, Vector::from_terms(terms)))
    }

    fn algebra(&self, m: &LinearMapJson, unit: &VectorJson) -> WireResult<Algebra> {
        let m = self.map(m)?;
        let (s, u) = self.vector(unit)?;
        if s != *m.codomain() {
            return invalid("unit and multiplication live on different spaces");
        }
        Ok(Algebra::new(m, u)?)
    }

    fn hopf(&self, h: &HopfJson) -> WireResult<HopfStructure> {
        let claim = Claim::from_name(&h.claim).ok_or_else(|| WireError::Invalid(format!("unknown claim {:?}", h.claim)))?;
        let algebra = self.algebra(&h.m, &h.unit)?;
        Ok(HopfStructure::new(
            h.name.clone(),
            algebra,
            self.map(&h.delta)?,
            self.map(&h.counit)?,
            self.map(&h.antipode)?,
            claim,
        )?)
    }

    fn algebroid(&self, h: Algebra, b: HopfStructure, maps: &AlgebroidMapsJson) -> WireResult<CentralHopfAlgebroidData> {
        Ok(CentralHopfAlgebroidData::new(
            h,
            b,
            self.map(&maps.s)?,
            self.map(&maps.t)?,
            self.map(&maps.delta)?,
            self.map(&maps.eps)?,
            self.map(&maps.antipode)?,
        )?)
    }
}

/// Decodes a quasigroup document, returning the cochain too if present.
pub fn decode_quasigroup(doc: &Document) -> WireResult<(FiniteQuasigroup, Option<Cochain2>)> {
    let Body::Quasigroup { quasigroup: q, cochain } = &doc.body else {
        return invalid(format!("expected a quasigroup document, got {}", doc.kind()));
    };
    let group = FiniteQuasigroup::from_labels(q.elements.clone(), &q.table, &q.unit, &q.inverse)?;
    let cochain = match cochain {
        Some(c) => Some(decode_cochain(c)?),
        None => None,
    };
    Ok((group, cochain))
}

/// Decodes a cochain.
pub fn decode_cochain(c: &CochainJson) -> WireResult<Cochain2> {
    Ok(Cochain2::new(c.n, c.values.concat())?)
}

/// Decodes a Hopf document.
pub fn decode_hopf(doc: &Document) -> WireResult<HopfStructure> {
    let Body::Hopf { hopf } = &doc.body else {
        return invalid(format!("expected a hopf document, got {}", doc.kind()));
    };
    Decoder::new(&doc.bases)?.hopf(hopf)
}

/// Decodes a pair document.
pub fn decode_pair(doc: &Document) -> WireResult<CoassociativePairData> {
    let Body::Pair { a, b, phi } = &doc.body else {
        return invalid(format!("expected a pair document, got {}", doc.kind()));
    };
    let d = Decoder::new(&doc.bases)?;
    Ok(CoassociativePairData::new(d.hopf(a)?, d.hopf(b)?, d.map(phi)?)?)
}

/// Decodes an algebroid document, or the algebroid layer of a hopf2
/// document.
pub fn decode_algebroid(doc: &Document) -> WireResult<CentralHopfAlgebroidData> {
    let d = Decoder::new(&doc.bases)?;
    match &doc.body {
        Body::Algebroid { h_name, h_m, h_unit, b, maps } => {
            let h = d.algebra(h_m, h_unit)?;
            if h.space().factor(0).name() != h_name {
                return invalid(format!("h_name {h_name:?} does not name the algebra's basis"));
            }
            d.algebroid(h, d.hopf(b)?, maps)
        }
        Body::Hopf2 { b, hopf, algebroid, .. } => {
            let h = d.hopf(hopf)?;
            d.algebroid(h.algebra().clone(), d.hopf(b)?, algebroid)
        }
        _ => invalid(format!("expected an algebroid or hopf2 document, got {}", doc.kind())),
    }
}

/// Decodes a hopf2 document.
pub fn decode_hopf2(doc: &Document) -> WireResult<CoherentHopf2Bundle> {
    let Body::Hopf2 { b, hopf, algebroid, alpha } = &doc.body else {
        return invalid(format!("expected a hopf2 document, got {}", doc.kind()));
    };
    let d = Decoder::new(&doc.bases)?;
    let (b, hopf) = (d.hopf(b)?, d.hopf(hopf)?);
    let algebroid = d.algebroid(hopf.algebra().clone(), b.clone(), algebroid)?;
    let alpha = match alpha {
        Some(a) => Some(d.map(a)?),
        None => None,
    };
    Ok(CoherentHopf2Bundle::new(b, hopf, algebroid, alpha)?)
}
