use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use sge_cli::{run, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_INVALID_CERTIFICATE, EXIT_IO, EXIT_OK};
use sge_core::certificate::{from_json, verify};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sge_with_stdin(args: &[&str], stdin: &str) -> Outcome {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("sge").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn sge(args: &[&str]) -> Outcome {
    sge_with_stdin(args, "")
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn construct_then_verify_through_stdin() {
    for (n, m, method) in [("11", "4", "p4"), ("20", "2", "p2"), ("14", "8", "auto"), ("9", "9", "corners")] {
        let built = sge(&["construct", "--n", n, "--m", m, "--method", method]);
        assert_eq!(built.code, EXIT_OK, "{}", built.stderr);
        let checked = sge_with_stdin(&["verify", "-"], &built.stdout);
        assert_eq!(checked.code, EXIT_OK, "{}", checked.stdout);
        assert!(checked.stdout.contains("valid: yes"));
    }
}

#[test]
fn verify_reports_defects() {
    let built = sge(&["construct", "--n", "6", "--m", "3", "--method", "p3"]);
    let mut doc = json(&built.stdout);
    doc["paths"].as_array_mut().unwrap().pop();
    let checked = sge_with_stdin(&["verify", "-"], &doc.to_string());
    assert_eq!(checked.code, EXIT_INVALID_CERTIFICATE);
    assert!(checked.stdout.contains("valid: no"));
    assert!(checked.stdout.contains("uncovered edge:"));
}

#[test]
fn formula_values() {
    let out = sge(&["formula", "--n", "15", "--m", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(json(&out.stdout)["value"], 9);

    let out = sge(&["formula", "--n", "14", "--m", "8"]);
    let doc = json(&out.stdout);
    let lower = doc["bracket"]["lower"].as_u64().unwrap();
    let upper = doc["bracket"]["upper"].as_u64().unwrap();
    assert!(lower <= upper && upper <= 13);
}

#[test]
fn exact_writes_a_valid_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let out = sge(&["exact", "--n", "4", "--m", "3", "--witness", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let doc = json(&out.stdout);
    assert_eq!(doc["value"], 5);
    assert_eq!(doc["infeasibility_checked_at"], 4);
    assert_eq!(doc["witness_valid"], true);
    let c = from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(verify(&c).valid);
    assert_eq!(c.size(), 5);
}

#[test]
fn exact_with_tiny_budget_is_inconclusive() {
    let out = sge(&["exact", "--n", "5", "--m", "5", "--max-nodes", "3"]);
    assert_eq!(out.code, EXIT_INCONCLUSIVE);
    assert!(json(&out.stdout)["inconclusive"].is_string());
}

#[test]
fn table_rows_agree_for_small_heights() {
    for m in ["2", "3", "4"] {
        let out = sge(&["table", "--max-n", "400", "--m", m]);
        assert_eq!(out.code, EXIT_OK);
        let mut lines = out.stdout.lines();
        assert_eq!(lines.next(), Some("n,m,formula,construction,exact"));
        let mut rows = 0;
        for line in lines {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols[2], cols[3], "{line}");
            assert_eq!(cols[4], "");
            rows += 1;
        }
        assert_eq!(rows, 399);
    }
}

#[test]
fn table_with_exact_column() {
    let out = sge(&["table", "--max-n", "4", "--m", "3", "--exact-max-vertices", "12"]);
    assert_eq!(out.code, EXIT_OK);
    for line in out.stdout.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[2], cols[4], "{line}");
    }
}

#[test]
fn maxf_outputs() {
    let out = sge(&["maxf", "--arity", "3", "--s", "9"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(json(&out.stdout).is_object());

    let out = sge(&["maxf", "--arity", "4", "--s", "12", "--min-b", "1", "--min-c", "1"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);

    assert_eq!(sge(&["maxf", "--arity", "5", "--s", "9"]).code, EXIT_INPUT);
    assert_eq!(sge(&["maxf", "--arity", "3", "--s", "9", "--min-c", "1"]).code, EXIT_INPUT);
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(sge(&["construct", "--n", "x", "--m", "3"]).code, EXIT_INPUT);
    assert_eq!(sge(&["construct", "--n", "10", "--m", "4", "--method", "p3"]).code, EXIT_INPUT);
    assert_eq!(sge(&["table", "--max-n", "5", "--m", "1"]).code, EXIT_INPUT);
    assert_eq!(sge(&["frobnicate"]).code, EXIT_INPUT);
    let out = sge_with_stdin(&["verify", "-"], "{not json");
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn semantic_decode_errors_exit_with_two() {
    let doc = r#"{"grid": {"n": 3, "m": 2}, "S": [[1, 1], [7, 1]], "paths": []}"#;
    assert_eq!(sge_with_stdin(&["verify", "-"], doc).code, EXIT_INVALID_CERTIFICATE);
}

#[test]
fn missing_files_exit_with_four() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.json");
    assert_eq!(sge(&["verify", missing.to_str().unwrap()]).code, EXIT_IO);

    let built = sge(&["construct", "--n", "5", "--m", "2"]);
    let cert = dir.path().join("c.json");
    fs::write(&cert, built.stdout).unwrap();
    let out = dir.path().join("no/such/dir/c.svg");
    let code = sge(&["render", cert.to_str().unwrap(), "--format", "svg", "--out", out.to_str().unwrap()]).code;
    assert_eq!(code, EXIT_IO);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sge");
    let status = Command::new(bin).args(["formula", "--n", "5", "--m", "2"]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_OK));
    let status = Command::new(bin).args(["verify", "/nonexistent/c.json"]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_IO));
    let output = Command::new(bin).args(["--help"]).output().unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("construct"));
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

// Set SGE_BLESS=1 to rewrite the expected files after an intended drawing change.
fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("SGE_BLESS").is_some() {
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap();
    assert!(expected == actual, "{} differs from the rendered output", path.display());
}

#[test]
fn render_matches_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let built = sge(&["construct", "--n", "11", "--m", "4", "--method", "p4"]);
    fs::write(&cert, &built.stdout).unwrap();
    for (format, name) in [("svg", "p4_11.svg"), ("tikz", "p4_11.tex")] {
        let out = dir.path().join(name);
        let r = sge(&["render", cert.to_str().unwrap(), "--format", format, "--out", out.to_str().unwrap()]);
        assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
        check_golden(name, &fs::read_to_string(&out).unwrap());
    }
}
