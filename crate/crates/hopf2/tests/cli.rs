//! End-to-end runs of the `hopf2` binary: outputs and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use hopf2::wire::Document;

fn hopf2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf2")).args(args).env_remove("HOPF2_MAX_DIM").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_to(dir: &Path, kind: &str, n: &str) -> String {
    let path = dir.join(format!("{kind}_{n}.json"));
    let p = path.to_str().unwrap().to_owned();
    let o = hopf2(&["gen", kind, n, "--out", &p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn gen_hopf2_writes_a_sixteen_dimensional_bundle() {
    let o = hopf2(&["gen", "hopf2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = Document::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.kind(), "hopf2");
    assert_eq!(doc.bases["k[G_0]⊗k[G_2]"].len(), 16);
}

#[test]
fn oversized_requests_exit_2() {
    assert_eq!(hopf2(&["gen", "hopf2", "9"]).status.code(), Some(2));
    assert_eq!(hopf2(&["gen", "cayley", "5"]).status.code(), Some(2));
    assert_eq!(hopf2(&["report-all", "4"]).status.code(), Some(2));
}

#[test]
fn max_dim_variable_replaces_the_default_limits() {
    let bin = env!("CARGO_BIN_EXE_hopf2");
    let run = |dim: &str, args: &[&str]| Command::new(bin).args(args).env("HOPF2_MAX_DIM", dim).output().unwrap();
    assert_eq!(run("8", &["gen", "hopf2", "2"]).status.code(), Some(2));
    assert_eq!(run("16", &["gen", "hopf2", "2"]).status.code(), Some(0));
    assert_eq!(run("16", &["gen", "quasigroup", "3"]).status.code(), Some(0));
    assert_eq!(run("16", &["gen", "quasigroup", "4"]).status.code(), Some(2));
}

#[test]
fn every_generated_kind_checks_clean() {
    let dir = tempfile::tempdir().unwrap();
    let cayley = gen_to(dir.path(), "cayley", "3");
    for kind in ["quasigroup", "two-group"] {
        let o = hopf2(&["check", kind, &cayley]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
    }
    for kind in ["hopf", "pair", "algebroid", "hopf2"] {
        let p = gen_to(dir.path(), kind, "2");
        let o = hopf2(&["check", kind, &p]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
}

#[test]
fn corrupted_quasigroup_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "quasigroup", "2");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    let row = v["quasigroup"]["table"][1].as_array_mut().unwrap();
    let first = row[0].clone();
    row[1] = first;
    std::fs::write(&p, serde_json::to_string(&v).unwrap()).unwrap();
    let o = hopf2(&["check", "quasigroup", &p, "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["pass"], false);
    let latin = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "latin_square").unwrap();
    assert_eq!(latin["pass"], false);
    assert!(latin["witness"]["input"].is_string());
}

#[test]
fn malformed_json_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{ \"kind\": \"quasigroup\", ").unwrap();
    assert_eq!(hopf2(&["check", "quasigroup", p.to_str().unwrap()]).status.code(), Some(3));
    std::fs::write(&p, "{\"kind\": \"hopf\", \"bases\": {}}").unwrap();
    assert_eq!(hopf2(&["check", "hopf", p.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn missing_file_exits_1() {
    assert_eq!(hopf2(&["check", "hopf", "/nonexistent/x.json"]).status.code(), Some(1));
}

#[test]
fn octonion_bundle_checks_with_every_axiom_and_is_not_strict() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "hopf2", "3");
    let o = hopf2(&["check-hopf2", &p, "--json", "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for ax in ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"] {
        assert_eq!(j[format!("axiom_{ax}")], true, "axiom {ax}");
    }
    assert_eq!(j["strict"], false);
    assert_eq!(j["lemma54"], true);
    assert!(j["prop42"].as_object().unwrap().values().all(|v| v == true));
}

#[test]
fn a_custom_cochain_drives_generation() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("f.json");
    // The trivial cochain on Z_2^1 gives the abelian group Z_2 × Z_2^1.
    std::fs::write(&c, r#"{"n": 1, "values": [[1, 1], [1, 1]]}"#).unwrap();
    let o = hopf2(&["gen", "cayley", "1", "--cochain", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = dir.path().join("q.json");
    std::fs::write(&out, stdout(&o)).unwrap();
    let o = hopf2(&["check", "quasigroup", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("associative: true"));
    assert_eq!(hopf2(&["gen", "cayley", "2", "--cochain", c.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn fuzz_detects_every_corruption() {
    let o = hopf2(&["fuzz", "--n", "1", "--count", "8", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("8 corruptions, 0 undetected"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hopf2(&["gen", "widget", "1"]).status.code(), Some(2));
    assert_eq!(hopf2(&[]).status.code(), Some(2));
}
