//! Full verifiers per object kind, with optional parallelism.
//!
//! Results never depend on the number of worker threads: tasks are
//! collected by position, so reports come out in a fixed order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use hopf2_core::algebroid::{check_central_hopf_algebroid, CentralHopfAlgebroidData};
use hopf2_core::hopf::{check_claim, check_coassociative_pair, check_quasi_coassociative, CoassociativePairData, HopfStructure};
use hopf2_core::hopf2::{
    check_axiom, check_layers, check_lemma54, check_prop42, check_strict, CoherentHopf2Bundle, CoherentReport, AXIOMS,
};
use hopf2_core::quasigroup::{FiniteQuasigroup, Violation};
use hopf2_core::report::{Check, Report};
use hopf2_core::two_group::{coherent_two_group_from_quasigroup, enumeration_check};

/// Runs `f` on every item with up to `jobs` threads and returns the results
/// in item order.
pub fn par_map<T: Sync, R: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                let r = f(item);
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("workers joined").into_iter().map(|r| r.expect("every slot filled")).collect()
}

fn violation_check(q: &FiniteQuasigroup, name: &'static str, violations: &[Violation]) -> Check {
    match violations.iter().find(|v| v.name() == name) {
        None => Check::pass(name),
        Some(v) => {
            let input = match *v {
                Violation::LatinSquareRow { row, value } => format!("row {} repeats {}", q.label(row), q.label(value)),
                Violation::LatinSquareColumn { col, value } => {
                    format!("column {} repeats {}", q.label(col), q.label(value))
                }
                Violation::UnitLaw { element } => q.label(element).to_string(),
                Violation::LeftInverseLaw { g, h } | Violation::RightInverseLaw { g, h } => {
                    format!("({}, {})", q.label(g), q.label(h))
                }
            };
            Check::fail(name, input, None, format!("{v:?}"))
        }
    }
}

/// The quasigroup laws, the nucleus, and — for quasiassociative inputs —
/// the 3-cocycle condition of the associator.
pub fn verify_quasigroup(q: &FiniteQuasigroup) -> Report {
    let mut r = Report::new(format!("quasigroup of order {}", q.order()));
    let violations = q.validate();
    for name in ["latin_square", "unit", "left_inverse", "right_inverse"] {
        r.push(violation_check(q, name, &violations));
    }
    if !violations.is_empty() {
        return r;
    }
    let nucleus: Vec<&str> = q.nucleus().iter().map(|&a| q.label(a)).collect();
    r.note(format!("associative: {}", q.is_associative()));
    r.note(format!("nucleus: {{{}}}", nucleus.join(", ")));
    if q.is_quasiassociative() {
        r.note("quasiassociative: true");
        match q.cocycle_check() {
            Ok(e) => {
                r.note(format!("3-cocycle: {} quadruples", e.checked));
                r.push(enumeration_check("cocycle", &e));
            }
            Err(e) => r.push(Check::fail("cocycle", "associator", None, e.to_string())),
        }
    } else {
        r.note("quasiassociative: false; the 3-cocycle condition does not apply");
    }
    r
}

/// The coherent 2-group of a quasiassociative quasigroup, fully verified.
pub fn verify_two_group(q: &FiniteQuasigroup) -> Report {
    match coherent_two_group_from_quasigroup(q) {
        Ok(t) => t.verify_all(),
        Err(e) => {
            let mut r = Report::new("coherent 2-group");
            r.push(Check::fail("construction", format!("quasigroup of order {}", q.order()), None, e.to_string()));
            r
        }
    }
}

/// The axioms the structure claims.
pub fn verify_hopf(h: &HopfStructure) -> Report {
    check_claim(h)
}

/// The coassociative-pair conditions; quasi coassociativity is reported in
/// the notes, since it is a property rather than an axiom of pairs.
pub fn verify_pair(p: &CoassociativePairData) -> Report {
    let mut r = check_coassociative_pair(p);
    let q = check_quasi_coassociative(p);
    let failed: Vec<&str> = q.report.failures().map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        r.note(format!("quasi coassociative: true (dim ker φ = {})", q.kernel_basis.len()));
    } else {
        r.note(format!("quasi coassociative: false ({} fail)", failed.join(", ")));
    }
    r
}

/// Every central-Hopf-algebroid condition.
pub fn verify_algebroid(d: &CentralHopfAlgebroidData) -> Report {
    check_central_hopf_algebroid(d)
}

/// Everything known about a bundle: the layers, the nine axioms, the
/// antipode properties, the cocommutation lemma and strictness.
#[derive(Clone, Debug)]
pub struct Hopf2Outcome {
    /// Layers and axioms.
    pub coherent: CoherentReport,
    /// Antipode properties.
    pub prop42: Report,
    /// The cocommutation relation of `▲` and `Δ`.
    pub lemma54: bool,
    /// Whether the bundle is strict.
    pub strict: bool,
}

impl Hopf2Outcome {
    /// Whether the layers, all axioms, the antipode properties and the
    /// cocommutation relation hold. Strictness is a property, not a test.
    pub fn all_pass(&self) -> bool {
        self.coherent.all_pass() && self.prop42.all_pass() && self.lemma54
    }

    /// One flat report: `layers.*`, `axiom_<n>.*`, `prop42.*`, `lemma54`.
    pub fn to_report(&self, subject: &str) -> Report {
        let mut r = self.coherent.to_report(subject);
        r.absorb("prop42", self.prop42.clone());
        r.push(Check::from_bool("lemma54", self.lemma54, "H", "(Δ⊗Δ)∘▲ ≠ (id⊗τ⊗id)∘(▲⊗_B▲)∘Δ"));
        r.note(format!("strict: {}", self.strict));
        r
    }
}

enum Task {
    Layers,
    Axiom(&'static str),
    Prop42,
    Lemma54,
}

enum TaskOut {
    Report(Report),
    Flag(bool),
}

/// Verifies a bundle with up to `jobs` threads.
pub fn verify_hopf2(bundle: &CoherentHopf2Bundle, jobs: usize) -> Hopf2Outcome {
    let mut tasks = vec![Task::Layers];
    tasks.extend(AXIOMS.iter().map(|n| Task::Axiom(n)));
    tasks.extend([Task::Prop42, Task::Lemma54]);
    let mut reports = Vec::new();
    let mut lemma54 = false;
    for out in par_map(jobs, &tasks, |t| match t {
        Task::Layers => TaskOut::Report(check_layers(bundle)),
        Task::Axiom(n) => TaskOut::Report(check_axiom(bundle, n)),
        Task::Prop42 => TaskOut::Report(check_prop42(bundle)),
        Task::Lemma54 => TaskOut::Flag(check_lemma54(bundle)),
    }) {
        match out {
            TaskOut::Report(r) => reports.push(r),
            TaskOut::Flag(b) => lemma54 = b,
        }
    }
    let prop42 = reports.pop().expect("prop42 is the last report");
    let mut reports = reports.into_iter();
    let layers = reports.next().expect("layers come first");
    let axioms = AXIOMS.iter().copied().zip(reports).collect();
    Hopf2Outcome { coherent: CoherentReport { layers, axioms }, prop42, lemma54, strict: check_strict(bundle) }
}
