//! The acceptance suite for n = 1..=3: one PASS/FAIL line per criterion,
//! all comparisons exact. Runs without the test harness so the lines are
//! always printed; exits nonzero if any criterion fails, is skipped, or
//! overruns its budget.

use hopf2::suite::{run_suite, summary_line, summary_matrix, SuiteOptions};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let results = run_suite(&SuiteOptions { n_max: 3, seed: 0, jobs });
    println!("\nacceptance criteria (n = 1..3, exact)");
    for r in &results {
        println!("{}", summary_line(r));
    }
    println!("\n{}", summary_matrix(&results, 3));
    let mut problems = Vec::new();
    for r in &results {
        if !r.ran() {
            problems.push(format!("criterion {} skipped", r.id));
        } else if !r.pass() {
            problems.push(format!("criterion {} failed", r.id));
        }
        if r.elapsed > r.budget {
            problems.push(format!("criterion {} took {:?} (budget {:?})", r.id, r.elapsed, r.budget));
        }
    }
    if problems.is_empty() {
        println!("acceptance: {} of {} criteria pass", results.len(), results.len());
    } else {
        for p in &problems {
            eprintln!("acceptance: {p}");
        }
        std::process::exit(1);
    }
}
