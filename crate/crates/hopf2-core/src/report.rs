//! Verification reports: named pass/fail checks with minimal witnesses.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::linear::{Index, Space, Vector};
use crate::scalar::{format, Scalar};

/// Evidence for a failed check: the first failing input (in canonical
/// order) and the first offending tensor entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// The failing input, e.g. a basis label or an element tuple.
    pub input: String,
    /// The offending output entry (a basis label), if the check is tensor-valued.
    pub entry: Option<String>,
    /// What went wrong, e.g. `"lhs=1 rhs=0"`.
    pub detail: String,
}

/// One named identity and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Stable identifier of the identity.
    pub name: String,
    /// Whether the identity held on every input.
    pub pass: bool,
    /// Present exactly when `pass` is false.
    pub witness: Option<Witness>,
}

impl Check {
    /// A passing check.
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), pass: true, witness: None }
    }

    /// A failing check with a witness.
    pub fn fail(
        name: impl Into<String>,
        input: impl Into<String>,
        entry: Option<String>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            pass: false,
            witness: Some(Witness { input: input.into(), entry, detail: detail.into() }),
        }
    }

    /// Pass iff `ok`; otherwise fail with the given input and detail.
    pub fn from_bool(name: impl Into<String>, ok: bool, input: impl Into<String>, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, input, None, detail)
        }
    }

    /// Same check under a new name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// A deterministic, ordered list of checks about one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    /// What was verified.
    pub subject: String,
    /// Checks in the order they were run.
    pub checks: Vec<Check>,
    /// Informational remarks (conventions used, skipped inapplicable checks).
    pub notes: Vec<String>,
}

impl Report {
    /// An empty report.
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), checks: Vec::new(), notes: Vec::new() }
    }

    /// Appends a check.
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends a note.
    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Appends every check of `other`, prefixing names with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = alloc::format!("{prefix}.{}", c.name);
            }
            self.checks.push(c);
        }
        for n in other.notes {
            self.notes.push(if prefix.is_empty() { n } else { alloc::format!("{prefix}: {n}") });
        }
    }

    /// Whether every check passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The failing checks.
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// The check called `name`.
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the check called `name` exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name).map(|c| c.pass).unwrap_or(false)
    }
}

/// Describes the first entry where `lhs` and `rhs` differ.
pub fn first_discrepancy(codomain: &Space, lhs: &Vector, rhs: &Vector) -> Option<(String, String)> {
    let diff = lhs.sub(rhs);
    let (idx, _) = diff.leading()?;
    Some((codomain.label_of(idx), describe_pair(&lhs.coefficient(idx), &rhs.coefficient(idx))))
}

fn describe_pair(l: &Scalar, r: &Scalar) -> String {
    alloc::format!("lhs={} rhs={}", format(l), format(r))
}

/// Checks `lhs(x) = rhs(x)` for every basis vector `x` of `domain`, where
/// both sides land in `codomain`. An optional normalizer (a quotient
/// projection) is applied to the difference before testing for zero.
pub fn check_identity(
    name: &str,
    domain: &Space,
    codomain: &Space,
    mut lhs: impl FnMut(&Index) -> Vector,
    mut rhs: impl FnMut(&Index) -> Vector,
    normalize: Option<&dyn Fn(&Vector) -> Vector>,
) -> Check {
    for x in domain.indices() {
        let l = lhs(&x);
        let r = rhs(&x);
        if l == r {
            continue;
        }
        match normalize {
            None => {
                let (entry, detail) =
                    first_discrepancy(codomain, &l, &r).expect("unequal vectors differ somewhere");
                return Check::fail(name, domain.label_of(&x), Some(entry), detail);
            }
            Some(norm) => {
                let d = norm(&l.sub(&r));
                if !d.is_zero() {
                    let (idx, c) = d.leading().expect("nonzero");
                    return Check::fail(
                        name,
                        domain.label_of(&x),
                        Some(codomain.label_of(idx)),
                        alloc::format!("normal form of lhs−rhs has coefficient {}", format(c)),
                    );
                }
            }
        }
    }
    Check::pass(name.to_string())
}
