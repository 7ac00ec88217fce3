//! Report serialization: JSON for machines, aligned tables for people.

use std::fmt::Write as _;

use hopf2_core::report::{Check, Report, Witness};
use serde::{Deserialize, Serialize};

/// Evidence for a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// The first failing input.
    pub input: String,
    /// The first offending output entry, if tensor-valued.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
    /// What went wrong.
    pub detail: String,
}

/// One named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    /// Stable identifier.
    pub name: String,
    /// Whether it held.
    pub pass: bool,
    /// Present exactly when `pass` is false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

/// A full report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    /// What was verified.
    pub subject: String,
    /// Whether every check passed.
    pub pass: bool,
    /// Checks in run order.
    pub checks: Vec<CheckJson>,
    /// Informational notes.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock time of the verification.
    pub timing_ms: u128,
}

fn witness_json(w: &Witness) -> WitnessJson {
    WitnessJson { input: w.input.clone(), entry: w.entry.clone(), detail: w.detail.clone() }
}

fn check_json(c: &Check) -> CheckJson {
    CheckJson { name: c.name.clone(), pass: c.pass, witness: c.witness.as_ref().map(witness_json) }
}

/// Converts a core report to its wire form.
pub fn report_json(r: &Report, timing_ms: u128) -> ReportJson {
    ReportJson {
        subject: r.subject.clone(),
        pass: r.all_pass(),
        checks: r.checks.iter().map(check_json).collect(),
        notes: r.notes.clone(),
        timing_ms,
    }
}

/// Converts a wire report back into a core report (timing is dropped).
pub fn report_from_json(r: &ReportJson) -> Report {
    let mut out = Report::new(r.subject.clone());
    for c in &r.checks {
        out.push(Check {
            name: c.name.clone(),
            pass: c.pass,
            witness: c.witness.as_ref().map(|w| Witness {
                input: w.input.clone(),
                entry: w.entry.clone(),
                detail: w.detail.clone(),
            }),
        });
    }
    for n in &r.notes {
        out.note(n.clone());
    }
    out
}

/// A human-readable table: one line per check, witnesses indented below
/// failures, then notes and a summary line.
pub fn report_table(r: &Report, timing_ms: u128) -> String {
    let width = r.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "{}", r.subject);
    for c in &r.checks {
        let pad = width - c.name.chars().count();
        let _ = writeln!(out, "  {}{}  {}", c.name, " ".repeat(pad), if c.pass { "pass" } else { "FAIL" });
        if let Some(w) = &c.witness {
            let _ = write!(out, "      at {}", w.input);
            if let Some(e) = &w.entry {
                let _ = write!(out, ", entry {e}");
            }
            let _ = writeln!(out, ": {}", w.detail);
        }
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    let failed = r.failures().count();
    let _ = writeln!(
        out,
        "{} checks, {} failed, {} ms: {}",
        r.checks.len(),
        failed,
        timing_ms,
        if failed == 0 { "PASS" } else { "FAIL" }
    );
    out
}
