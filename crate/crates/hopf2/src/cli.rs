//! The `hopf2` command line: generate objects, verify them, and run the
//! acceptance suite.
//!
//! Exit codes: 0 success, 1 failed check or IO failure, 2 size limit (or
//! command-line usage error), 3 unparseable input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hopf2_core::cayley::{build_gn, cayley_dickson_cochain, Cochain2};
use hopf2_core::examples::base_hopf_algebra;
use hopf2_core::hopf::{function_algebra, CoassociativePairData, HopfStructure};
use hopf2_core::hopf2::{build_coherent, AXIOMS};
use hopf2_core::linear::{ix, LinearMap, Vector};
use hopf2_core::report::Report;
use serde::Serialize;

use crate::fuzz::fuzz_bundle;
use crate::render::{report_json, report_table, ReportJson};
use crate::suite::{run_suite, summary_line, summary_matrix, SuiteOptions};
use crate::verify::{verify_algebroid, verify_hopf, verify_hopf2, verify_pair, verify_quasigroup, verify_two_group};
use crate::wire::{
    decode_algebroid, decode_cochain, decode_hopf, decode_hopf2, decode_pair, decode_quasigroup, encode_algebroid,
    encode_hopf, encode_hopf2, encode_pair, encode_quasigroup, CochainJson, Document,
};

/// Success.
pub const EXIT_OK: i32 = 0;
/// A check failed, or a file could not be read or written.
pub const EXIT_FAIL: i32 = 1;
/// The request exceeds the size limits.
pub const EXIT_SIZE: i32 = 2;
/// The input does not parse.
pub const EXIT_PARSE: i32 = 3;

/// Environment variable that replaces the per-kind size limits by a bound
/// on the dimension of the generated object.
pub const MAX_DIM_ENV: &str = "HOPF2_MAX_DIM";

#[derive(Parser, Debug)]
#[command(name = "hopf2", version, about = "Exact verification of coherent Hopf 2-algebras")]
struct Cli {
    /// Emit JSON instead of human-readable tables.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification (output does not depend on it).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed of the perturbation fuzz.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an object and write it as JSON.
    Gen {
        /// What to generate.
        kind: GenKind,
        /// Rank of the Cayley–Dickson construction.
        n: usize,
        /// Output path (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// A 2-cochain file to use instead of the Cayley–Dickson cochain.
        #[arg(long)]
        cochain: Option<PathBuf>,
    },
    /// Verify an object read from a JSON file.
    Check {
        /// What the file holds.
        kind: CheckKind,
        /// Input path.
        path: PathBuf,
    },
    /// Run the acceptance suite for n = 1..=n_max.
    ReportAll {
        /// Largest n (at most 3).
        #[arg(default_value_t = 3)]
        n_max: usize,
    },
    /// Build the coherent Hopf 2-algebra on k[G_0]⊗k[G_n].
    BuildHopf2 {
        /// Rank of the Cayley–Dickson construction.
        #[arg(long)]
        n: usize,
        /// Output path (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// A 2-cochain file to use instead of the Cayley–Dickson cochain.
        #[arg(long)]
        cochain: Option<PathBuf>,
    },
    /// Verify a coherent Hopf 2-algebra bundle.
    CheckHopf2 {
        /// Input path.
        path: PathBuf,
    },
    /// Verify a central Hopf algebroid (or the algebroid layer of a bundle).
    CheckAlgebroid {
        /// Input path.
        path: PathBuf,
    },
    /// Corrupt single structure-tensor entries of a bundle and report which
    /// check catches each corruption.
    Fuzz {
        /// Rank of the bundle.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of corruptions.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Cayley,
    Quasigroup,
    Hopf,
    Pair,
    Algebroid,
    Hopf2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Quasigroup,
    TwoGroup,
    Hopf,
    Pair,
    Algebroid,
    Hopf2,
}

/// A failure carrying its exit code.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

fn core_exit(e: hopf2_core::Error) -> Exit {
    let code = match e {
        hopf2_core::Error::SizeLimit(_) => EXIT_SIZE,
        _ => EXIT_FAIL,
    };
    Exit::new(code, e.to_string())
}

struct Ctx<'a> {
    json: bool,
    jobs: usize,
    seed: u64,
    out: &'a mut dyn Write,
    max_dim: Option<usize>,
}

impl Ctx<'_> {
    fn print(&mut self, text: &str) -> Result<(), Exit> {
        self.out.write_all(text.as_bytes()).map_err(|e| Exit::new(EXIT_FAIL, format!("cannot write output: {e}")))
    }

    fn print_json<T: Serialize>(&mut self, value: &T) -> Result<(), Exit> {
        let text = serde_json::to_string_pretty(value).expect("reports always serialize");
        self.print(&text)?;
        self.print("\n")
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. `max_dim` is the value of
/// [`MAX_DIM_ENV`], if set. Returns the exit code.
pub fn run<I, T>(args: I, max_dim: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, jobs: cli.jobs.max(1), seed: cli.seed, out, max_dim };
    let result = match cli.command {
        Command::Gen { kind, n, out, cochain } => cmd_gen(&mut ctx, kind, n, out.as_deref(), cochain.as_deref()),
        Command::BuildHopf2 { n, out, cochain } => cmd_gen(&mut ctx, GenKind::Hopf2, n, out.as_deref(), cochain.as_deref()),
        Command::Check { kind, path } => cmd_check(&mut ctx, kind, &path),
        Command::CheckHopf2 { path } => cmd_check(&mut ctx, CheckKind::Hopf2, &path),
        Command::CheckAlgebroid { path } => cmd_check(&mut ctx, CheckKind::Algebroid, &path),
        Command::ReportAll { n_max } => cmd_report_all(&mut ctx, n_max),
        Command::Fuzz { n, count } => cmd_fuzz(&mut ctx, n, count),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hopf2: {}", e.message);
            e.code
        }
    }
}

// ---------------------------------------------------------------- gen

fn default_limit(kind: GenKind) -> usize {
    match kind {
        GenKind::Cayley | GenKind::Quasigroup => 4,
        GenKind::Hopf | GenKind::Pair | GenKind::Algebroid | GenKind::Hopf2 => 3,
    }
}

/// Dimension of the generated object: `|G_n|` for tables and `k[G_n]`,
/// `2·|G_n|` for the bundle and its algebroid.
fn object_dim(kind: GenKind, n: usize) -> Option<usize> {
    let g = 2usize.checked_pow(u32::try_from(n).ok()?.checked_add(1)?)?;
    match kind {
        GenKind::Algebroid | GenKind::Hopf2 => g.checked_mul(2),
        _ => Some(g),
    }
}

fn check_size(ctx: &Ctx, kind: GenKind, n: usize) -> Result<(), Exit> {
    let ok = match ctx.max_dim {
        Some(d) => object_dim(kind, n).is_some_and(|dim| dim <= d),
        None => n <= default_limit(kind),
    };
    if ok {
        Ok(())
    } else {
        let limit = match ctx.max_dim {
            Some(d) => format!("dimension ≤ {d} ({MAX_DIM_ENV})"),
            None => format!("n ≤ {}", default_limit(kind)),
        };
        Err(Exit::new(EXIT_SIZE, format!("{kind:?} n = {n} exceeds the size limit {limit}")))
    }
}

fn read_text(path: &Path) -> Result<String, Exit> {
    std::fs::read_to_string(path).map_err(|e| Exit::new(EXIT_FAIL, format!("cannot read {}: {e}", path.display())))
}

fn load_cochain(path: &Path, n: usize) -> Result<Cochain2, Exit> {
    let text = read_text(path)?;
    let json: CochainJson =
        serde_json::from_str(&text).map_err(|e| Exit::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let f = decode_cochain(&json).map_err(|e| Exit::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    if f.n() != n {
        return Err(Exit::new(EXIT_PARSE, format!("{} holds a cochain on Z_2^{}, not Z_2^{n}", path.display(), f.n())));
    }
    Ok(f)
}

/// `k[G]` for the quasigroup of `f`, named `k[G_n]`.
fn function_algebra_of(f: &Cochain2) -> hopf2_core::Result<HopfStructure> {
    Ok(function_algebra(&build_gn(f)?)?.renamed(format!("k[G_{}]", f.n())))
}

/// `(k[G_0], k[G], π)` with `π` restricting functions to `{±e_0}`.
fn pair_of(f: &Cochain2) -> hopf2_core::Result<CoassociativePairData> {
    let b = function_algebra_of(f)?;
    let a = base_hopf_algebra()?;
    let phi = LinearMap::from_fn(b.space().clone(), a.space().clone(), |g| {
        if g[0] < 2 {
            Vector::basis(ix(&[g[0]]))
        } else {
            Vector::zero()
        }
    })?;
    CoassociativePairData::new(a, b, phi)
}

fn generate(kind: GenKind, f: &Cochain2) -> hopf2_core::Result<Document> {
    Ok(match kind {
        GenKind::Cayley => encode_quasigroup(&build_gn(f)?, Some(f)),
        GenKind::Quasigroup => encode_quasigroup(&build_gn(f)?, None),
        GenKind::Hopf => encode_hopf(&function_algebra_of(f)?),
        GenKind::Pair => encode_pair(&pair_of(f)?),
        GenKind::Algebroid => encode_algebroid(&build_coherent(&pair_of(f)?)?.algebroid),
        GenKind::Hopf2 => encode_hopf2(&build_coherent(&pair_of(f)?)?),
    })
}

fn cmd_gen(ctx: &mut Ctx, kind: GenKind, n: usize, out: Option<&Path>, cochain: Option<&Path>) -> Result<i32, Exit> {
    check_size(ctx, kind, n)?;
    let f = match cochain {
        Some(p) => load_cochain(p, n)?,
        None => cayley_dickson_cochain(n).map_err(core_exit)?,
    };
    let doc = generate(kind, &f).map_err(core_exit)?;
    let mut text = doc.to_json();
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Exit::new(EXIT_FAIL, format!("cannot write {}: {e}", p.display())))?,
        None => ctx.print(&text)?,
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- check

/// The machine-readable outcome of `check hopf2`.
#[derive(Serialize)]
struct Hopf2Json {
    subject: String,
    pass: bool,
    layers: bool,
    axiom_i: bool,
    axiom_ii: bool,
    axiom_iii: bool,
    axiom_iv: bool,
    axiom_v: bool,
    axiom_vi: bool,
    axiom_vii: bool,
    axiom_viii: bool,
    axiom_ix: bool,
    strict: bool,
    lemma54: bool,
    prop42: serde_json::Map<String, serde_json::Value>,
    report: ReportJson,
}

fn parse_document(path: &Path) -> Result<Document, Exit> {
    let text = read_text(path)?;
    Document::from_json(&text).map_err(|e| Exit::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn decode<T>(r: crate::wire::WireResult<T>, path: &Path) -> Result<T, Exit> {
    r.map_err(|e| Exit::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

/// Verifies the document at `path` as `kind`, returning the flat report
/// and, for bundles, the structured outcome.
fn verify_document(ctx: &Ctx, kind: CheckKind, path: &Path) -> Result<(Report, Option<crate::verify::Hopf2Outcome>), Exit> {
    let doc = parse_document(path)?;
    Ok(match kind {
        CheckKind::Quasigroup => (verify_quasigroup(&decode(decode_quasigroup(&doc), path)?.0), None),
        CheckKind::TwoGroup => (verify_two_group(&decode(decode_quasigroup(&doc), path)?.0), None),
        CheckKind::Hopf => (verify_hopf(&decode(decode_hopf(&doc), path)?), None),
        CheckKind::Pair => (verify_pair(&decode(decode_pair(&doc), path)?), None),
        CheckKind::Algebroid => (verify_algebroid(&decode(decode_algebroid(&doc), path)?), None),
        CheckKind::Hopf2 => {
            let bundle = decode(decode_hopf2(&doc), path)?;
            let outcome = verify_hopf2(&bundle, ctx.jobs);
            (outcome.to_report(&format!("{} as coherent Hopf 2-algebra", bundle.name())), Some(outcome))
        }
    })
}

fn cmd_check(ctx: &mut Ctx, kind: CheckKind, path: &Path) -> Result<i32, Exit> {
    let start = Instant::now();
    let (report, outcome) = verify_document(ctx, kind, path)?;
    let ms = start.elapsed().as_millis();
    let pass = report.all_pass();
    match (ctx.json, outcome) {
        (true, Some(o)) => {
            let ax = |n: &str| o.coherent.axiom_passes(n);
            let prop42 = o.prop42.checks.iter().map(|c| (c.name.clone(), serde_json::Value::Bool(c.pass))).collect();
            let j = Hopf2Json {
                subject: report.subject.clone(),
                pass,
                layers: o.coherent.layers.all_pass(),
                axiom_i: ax(AXIOMS[0]),
                axiom_ii: ax(AXIOMS[1]),
                axiom_iii: ax(AXIOMS[2]),
                axiom_iv: ax(AXIOMS[3]),
                axiom_v: ax(AXIOMS[4]),
                axiom_vi: ax(AXIOMS[5]),
                axiom_vii: ax(AXIOMS[6]),
                axiom_viii: ax(AXIOMS[7]),
                axiom_ix: ax(AXIOMS[8]),
                strict: o.strict,
                lemma54: o.lemma54,
                prop42,
                report: report_json(&report, ms),
            };
            ctx.print_json(&j)?;
        }
        (true, None) => ctx.print_json(&report_json(&report, ms))?,
        (false, _) => ctx.print(&report_table(&report, ms))?,
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

// ---------------------------------------------------------------- suite

#[derive(Serialize)]
struct CellJson {
    n: Option<usize>,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct CriterionJson {
    id: usize,
    title: &'static str,
    status: &'static str,
    elapsed_ms: u128,
    budget_s: u64,
    cases: Vec<CellJson>,
}

fn cmd_report_all(ctx: &mut Ctx, n_max: usize) -> Result<i32, Exit> {
    if !(1..=3).contains(&n_max) {
        return Err(Exit::new(EXIT_SIZE, format!("report-all needs 1 ≤ n_max ≤ 3, got {n_max}")));
    }
    let results = run_suite(&SuiteOptions { n_max, seed: ctx.seed, jobs: ctx.jobs });
    let ok = results.iter().all(|r| !r.ran() || r.pass());
    if ctx.json {
        let j: Vec<CriterionJson> = results
            .iter()
            .map(|r| CriterionJson {
                id: r.id,
                title: r.title,
                status: if !r.ran() {
                    "skip"
                } else if r.pass() {
                    "pass"
                } else {
                    "fail"
                },
                elapsed_ms: r.elapsed.as_millis(),
                budget_s: r.budget.as_secs(),
                cases: r.cells.iter().map(|c| CellJson { n: c.n, pass: c.pass, detail: c.detail.clone() }).collect(),
            })
            .collect();
        ctx.print_json(&j)?;
    } else {
        let mut text = String::new();
        for r in &results {
            text.push_str(&summary_line(r));
            text.push('\n');
        }
        text.push('\n');
        text.push_str(&summary_matrix(&results, n_max));
        ctx.print(&text)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct TrialJson {
    tensor: &'static str,
    row: String,
    col: String,
    detected_by: Option<String>,
}

fn cmd_fuzz(ctx: &mut Ctx, n: usize, count: usize) -> Result<i32, Exit> {
    check_size(ctx, GenKind::Hopf2, n)?;
    let bundle = build_coherent(&pair_of(&cayley_dickson_cochain(n).map_err(core_exit)?).map_err(core_exit)?)
        .map_err(core_exit)?;
    let trials = fuzz_bundle(&bundle, ctx.seed, count).map_err(core_exit)?;
    let missed = trials.iter().filter(|t| t.detected_by.is_none()).count();
    if ctx.json {
        let j: Vec<TrialJson> = trials
            .into_iter()
            .map(|t| TrialJson { tensor: t.tensor, row: t.row, col: t.col, detected_by: t.detected_by })
            .collect();
        ctx.print_json(&j)?;
    } else {
        let mut text = String::new();
        for t in &trials {
            text.push_str(&format!(
                "{:<20} ({}, {})  {}\n",
                t.tensor,
                t.row,
                t.col,
                t.detected_by.as_deref().unwrap_or("UNDETECTED")
            ));
        }
        text.push_str(&format!("{} corruptions, {} undetected (seed {})\n", trials.len(), missed, ctx.seed));
        ctx.print(&text)?;
    }
    Ok(if missed == 0 { EXIT_OK } else { EXIT_FAIL })
}
