//! The acceptance suite: every criterion evaluated per `n`, with timings.
//!
//! Each criterion has a runtime budget; it passes only if every applicable
//! case holds exactly and the whole criterion finishes within budget.

use std::time::{Duration, Instant};

use hopf2_core::cayley::{
    cayley_dickson_cochain, coboundary_3cocycle, displayed_psi, psi_matches_quasigroup_associator,
    psi_matches_quasigroup_associator_report,
};
use hopf2_core::examples::{cayley_pair, function_algebra_gn, gn, hopf2_bundle_gn};
use hopf2_core::hopf::{
    canonical_pairing, check_beta_duality, check_coassociative_pair, check_hopf_coquasigroup,
    check_quasi_coassociative, coassociator_beta,
};
use hopf2_core::quasigroup::FiniteQuasigroup;
use hopf2_core::two_group::{coherent_two_group_from_quasigroup, crossed_module_round_trip, CrossedModule};
use hopf2_core::Result;

use crate::fuzz::fuzz_bundle;
use crate::verify::verify_hopf2;

/// The outcome of one criterion on one `n` (or on its fixed instances).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// The `n` this case concerns, or `None` for fixed instances.
    pub n: Option<usize>,
    /// Whether the case holds.
    pub pass: bool,
    /// What was established.
    pub detail: String,
}

/// One acceptance criterion's outcome.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    /// Criterion number.
    pub id: usize,
    /// Short title.
    pub title: &'static str,
    /// Per-case outcomes; empty when no case applies at this `n_max`.
    pub cells: Vec<Cell>,
    /// Runtime budget.
    pub budget: Duration,
    /// Measured runtime.
    pub elapsed: Duration,
}

impl CriterionResult {
    /// Whether any case applied.
    pub fn ran(&self) -> bool {
        !self.cells.is_empty()
    }

    /// Whether every case held within budget.
    pub fn pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass) && self.elapsed <= self.budget
    }

    /// The cell for `n`.
    pub fn cell(&self, n: usize) -> Option<&Cell> {
        self.cells.iter().find(|c| c.n == Some(n))
    }
}

/// Options for a suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Largest `n` to run (1..=3).
    pub n_max: usize,
    /// Seed of the perturbation fuzz.
    pub seed: u64,
    /// Worker threads for the bundle verifier.
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { n_max: 3, seed: 0, jobs: 1 }
    }
}

type CaseFn = fn(usize, &SuiteOptions) -> Result<Cell>;

/// Criterion number, title, budget, applicable `n`, case runner.
type Criterion = (usize, &'static str, u64, &'static [usize], CaseFn);

/// Marker for criteria evaluated on fixed instances rather than per `n`.
const FIXED: &[usize] = &[0];

const CRITERIA: [Criterion; 11] = [
    (1, "nucleus of G_n", 1, &[1, 2, 3], nucleus_case),
    (2, "3-cocycle condition of the associator", 5, &[1, 2, 3], cocycle_case),
    (3, "coherent 2-group from G_n", 60, &[1, 2, 3], two_group_case),
    (4, "k[G_n] Hopf coquasigroup and its coassociator", 10, &[1, 2, 3], hopf_case),
    (5, "coassociator relation", 5, &[1, 2, 3], beta_relation_case),
    (6, "(k[G_0], k[G_n], π) coassociative and quasi coassociative", 10, &[1, 2, 3], pair_case),
    (7, "coherent Hopf 2-algebra k[G_0]⊗k[G_n]", 300, &[1, 2, 3], hopf2_case),
    (8, "duality of β and β*", 60, &[1, 2, 3], duality_case),
    (9, "ψ controls the associator and is a 3-cocycle", 5, &[1, 2, 3], psi_case),
    (10, "perturbation sensitivity of the n = 2 bundle", 60, &[2], fuzz_case),
    (11, "crossed module round trip", 5, FIXED, round_trip_case),
];

/// Number of criteria.
pub const CRITERION_COUNT: usize = CRITERIA.len();

fn cell(n: usize, pass: bool, detail: impl Into<String>) -> Result<Cell> {
    Ok(Cell { n: Some(n), pass, detail: detail.into() })
}

fn labels(q: &FiniteQuasigroup, xs: &[usize]) -> String {
    xs.iter().map(|&a| q.label(a)).collect::<Vec<_>>().join(", ")
}

fn nucleus_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let q = gn(n)?;
    let nuc = q.nucleus();
    let expected: Vec<usize> = if n >= 3 { vec![0, 1] } else { (0..q.order()).collect() };
    cell(n, nuc == expected, format!("|N(G_{n})| = {} {{{}}}", nuc.len(), if n >= 3 { labels(&q, &nuc) } else { String::from("all") }))
}

fn cocycle_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let r = gn(n)?.cocycle_check()?;
    let expected = (2usize << n).pow(4);
    cell(n, r.holds && r.checked == expected, format!("{} quadruples, first failure {:?}", r.checked, r.first_failure))
}

fn two_group_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let q = gn(n)?;
    let t = coherent_two_group_from_quasigroup(&q)?;
    let (p, nat, i) = (t.verify_pentagon(), t.verify_naturality(), t.verify_interchange());
    // Morphisms are pairs (nucleus element, object).
    let objects = 2usize << n;
    let morphisms = objects * q.nucleus().len();
    let ok = p.holds && nat.holds && i.holds && p.checked == objects.pow(4) && nat.checked == morphisms.pow(3);
    cell(
        n,
        ok,
        format!(
            "pentagon {}/{} naturality {}/{} interchange {}/{}",
            p.holds, p.checked, nat.holds, nat.checked, i.holds, i.checked
        ),
    )
}

fn hopf_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let b = function_algebra_gn(n)?;
    let axioms = check_hopf_coquasigroup(&b);
    let beta = coassociator_beta(&b)?;
    let vanishing = beta.beta.columns().all(|(idx, v)| idx[0] < 2 || v.is_zero());
    let beta_ok = if n >= 3 { !beta.trivial && vanishing } else { beta.trivial };
    cell(
        n,
        axioms.all_pass() && beta_ok,
        format!(
            "axioms {}, β trivial {}, β(f_a^i) = 0 for a ≠ 0: {}",
            axioms.all_pass(),
            beta.trivial,
            vanishing
        ),
    )
}

fn beta_relation_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let beta = coassociator_beta(&function_algebra_gn(n)?)?;
    cell(n, beta.relation.pass, format!("relation {}", if beta.relation.pass { "holds" } else { "fails" }))
}

fn pair_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let p = cayley_pair(n)?;
    let pair = check_coassociative_pair(&p);
    let quasi = check_quasi_coassociative(&p);
    cell(
        n,
        pair.all_pass() && quasi.report.all_pass(),
        format!("pair {}, quasi {} (dim I = {})", pair.all_pass(), quasi.report.all_pass(), quasi.kernel_basis.len()),
    )
}

fn hopf2_case(n: usize, opts: &SuiteOptions) -> Result<Cell> {
    let bundle = hopf2_bundle_gn(n)?;
    let out = verify_hopf2(&bundle, opts.jobs);
    let failed: Vec<String> = out.to_report("").failures().map(|c| c.name.clone()).collect();
    let strict_expected = n <= 2;
    cell(
        n,
        failed.is_empty() && out.strict == strict_expected,
        format!(
            "dim H = {}, axioms (i)–(ix) {}, prop42 {}, lemma54 {}, strict {}{}",
            bundle.dim(),
            out.coherent.all_pass(),
            out.prop42.all_pass(),
            out.lemma54,
            out.strict,
            if failed.is_empty() { String::new() } else { format!(", failing: {}", failed.join(", ")) }
        ),
    )
}

fn duality_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let c = check_beta_duality(&canonical_pairing(&gn(n)?)?)?;
    cell(n, c.pass, format!("⟨β_B(b), u⊗v⊗w⟩ = ⟨b, β*_A(u⊗v⊗w)⟩: {}", c.pass))
}

fn psi_case(n: usize, _: &SuiteOptions) -> Result<Cell> {
    let f = cayley_dickson_cochain(n)?;
    let matches = psi_matches_quasigroup_associator(&f)?;
    let cocycle = coboundary_3cocycle(&f).cocycle_identity();
    let literal = displayed_psi(&f);
    let literal_matches = psi_matches_quasigroup_associator_report(&f, &literal)?.holds;
    cell(
        n,
        matches && cocycle.holds,
        format!(
            "matches associator {}, cocycle {} ({} quadruples); literal display: matches {}, cocycle {}",
            matches,
            cocycle.holds,
            cocycle.checked,
            literal_matches,
            literal.cocycle_identity().holds
        ),
    )
}

fn fuzz_case(n: usize, opts: &SuiteOptions) -> Result<Cell> {
    let trials = fuzz_bundle(&hopf2_bundle_gn(n)?, opts.seed, 20)?;
    let missed: Vec<String> =
        trials.iter().filter(|t| t.detected_by.is_none()).map(|t| format!("{} at ({}, {})", t.tensor, t.row, t.col)).collect();
    cell(
        n,
        missed.is_empty() && trials.len() == 20,
        if missed.is_empty() {
            format!("{} of 20 seeded corruptions detected (seed {})", trials.len(), opts.seed)
        } else {
            format!("undetected: {}", missed.join("; "))
        },
    )
}

fn round_trip_case(_: usize, _: &SuiteOptions) -> Result<Cell> {
    let z2 = FiniteQuasigroup::cyclic(2)?;
    let examples = [
        ("Z_2 → Z_2 identity", CrossedModule { m: z2.clone(), n: z2, phi: vec![0, 1], gamma: vec![vec![0, 1], vec![0, 1]] }),
        ("G_2 → G_2 identity", CrossedModule::identity_of(gn(2)?)),
    ];
    let mut failed = Vec::new();
    for (name, x) in &examples {
        if !crossed_module_round_trip(x)?.all_pass() {
            failed.push(*name);
        }
    }
    Ok(Cell {
        n: None,
        pass: failed.is_empty(),
        detail: if failed.is_empty() { format!("{} examples recovered", examples.len()) } else { format!("failed: {}", failed.join(", ")) },
    })
}

/// Runs one criterion by number.
pub fn run_criterion(id: usize, opts: &SuiteOptions) -> Option<CriterionResult> {
    let &(id, title, budget, ns, run) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let cells = ns
        .iter()
        .filter(|&&n| n <= opts.n_max)
        .map(|&n| {
            run(n, opts).unwrap_or_else(|e| Cell { n: (ns != FIXED).then_some(n), pass: false, detail: format!("error: {e}") })
        })
        .collect();
    Some(CriterionResult { id, title, cells, budget: Duration::from_secs(budget), elapsed: start.elapsed() })
}

/// Runs every criterion in order.
pub fn run_suite(opts: &SuiteOptions) -> Vec<CriterionResult> {
    (1..=CRITERION_COUNT).filter_map(|id| run_criterion(id, opts)).collect()
}

/// One line per criterion: `PASS`/`FAIL`/`SKIP`, number, title, time and
/// budget, then each case's detail.
pub fn summary_line(r: &CriterionResult) -> String {
    let status = if !r.ran() {
        "SKIP"
    } else if r.pass() {
        "PASS"
    } else {
        "FAIL"
    };
    let cases: Vec<String> = r
        .cells
        .iter()
        .map(|c| match c.n {
            Some(n) => format!("n={n}: {}", c.detail),
            None => c.detail.clone(),
        })
        .collect();
    format!(
        "{status} criterion {:>2} {} [{} ms / budget {} s] {}",
        r.id,
        r.title,
        r.elapsed.as_millis(),
        r.budget.as_secs(),
        cases.join(" | ")
    )
}

/// A criterion × `n` matrix of pass/fail marks.
pub fn summary_matrix(results: &[CriterionResult], n_max: usize) -> String {
    let mut out = String::from("criterion");
    for n in 1..=n_max {
        out.push_str(&format!("  n={n}"));
    }
    out.push_str("  fixed  time(ms)  result\n");
    for r in results {
        out.push_str(&format!("{:>9}", r.id));
        for n in 1..=n_max {
            let mark = match r.cell(n) {
                Some(c) if c.pass => "pass",
                Some(_) => "FAIL",
                None => "   -",
            };
            out.push_str(&format!("  {mark}"));
        }
        let fixed = match r.cells.iter().find(|c| c.n.is_none()) {
            Some(c) if c.pass => " pass",
            Some(_) => " FAIL",
            None => "    -",
        };
        let result = if !r.ran() {
            "skip"
        } else if r.pass() {
            "PASS"
        } else {
            "FAIL"
        };
        out.push_str(&format!("  {fixed}  {:>8}  {result}\n", r.elapsed.as_millis()));
    }
    out
}
