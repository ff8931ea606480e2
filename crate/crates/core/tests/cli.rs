use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const F3_SPEC: &str = r#"{"p": 3, "grid": [[0, 1, 2], [0, 1, 2]], "downset": {"total_degree": 1}}"#;
// X1 + X2
const F3_COEFFS: &str = r#"{"coefficients": [{"exponent": [0, 1], "value": 1}, {"exponent": [1, 0], "value": 1}]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_downset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn encode_then_decode_roundtrip() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", F3_SPEC);
    let coeffs = write(&dir, "c.json", F3_COEFFS);
    let word = dir.path().join("w.txt");
    let out = run(&["encode", s(&spec), s(&coeffs), "-o", s(&word)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&word).unwrap(), "3 2 3 3\n0\n1\n2\n1\n2\n0\n2\n0\n1\n");

    let out = run(&["decode", s(&spec), s(&word)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["status"], "decoded");
    assert_eq!(doc["distance"], "0/1");
    let original: Value = serde_json::from_str(F3_COEFFS).unwrap();
    assert_eq!(doc["coefficients"], original["coefficients"]);
}

#[test]
fn zero_coefficients_give_the_zero_word() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", F3_SPEC);
    let coeffs = write(&dir, "c.json", r#"{"coefficients": []}"#);
    let out = run(&["encode", s(&spec), s(&coeffs)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3 2 3 3\n".to_string() + &"0\n".repeat(9));
}

#[test]
fn two_flips_decode_with_distance_two() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", F3_SPEC);
    // X1 + X2 with positions 0 and 4 changed
    let word = write(&dir, "w.txt", "3 2 3 3\n1\n1\n2\n1\n0\n0\n2\n0\n1\n");
    let out = run(&["decode", s(&spec), s(&word)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["status"], "decoded");
    assert_eq!(doc["distance"], "2/1");
    let original: Value = serde_json::from_str(F3_COEFFS).unwrap();
    assert_eq!(doc["coefficients"], original["coefficients"]);
}

#[test]
fn weighted_decode() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", F3_SPEC);
    // three corrupted positions, two of them flagged as unreliable
    let word = write(
        &dir,
        "w.txt",
        "3 2 3 3\n1 1/1\n1 0/1\n2 0/1\n1 0/1\n0 1/1\n0 0/1\n0 0/1\n0 0/1\n1 0/1\n",
    );
    let out = run(&["decode", "--weighted", s(&spec), s(&word)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let doc = json(&out);
    // 1/2 + 1/2 for the erased positions, 1 for the hard error
    assert_eq!(doc["distance"], "2/1");
    let original: Value = serde_json::from_str(F3_COEFFS).unwrap();
    assert_eq!(doc["coefficients"], original["coefficients"]);
}

#[test]
fn far_word_exits_two() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", r#"{"p": 2, "grid": [[0, 1], [0, 1]], "downset": {"total_degree": 0}}"#);
    let word = write(&dir, "w.txt", "2 2 2 2\n0\n0\n1\n1\n");
    let out = run(&["decode", s(&spec), s(&word)]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json(&out);
    assert_eq!(doc["status"], "no_codeword_within_radius");
    assert_eq!(doc["radius"], "2/1");
}

#[test]
fn member_list_that_is_not_closed() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "spec.json",
        r#"{"p": 3, "grid": [[0, 1, 2], [0, 1, 2]], "downset": {"members": [[0, 0], [1, 1]]}}"#,
    );
    let out = run(&["distance", s(&spec)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a downset"), "{err}");
    assert!(err.contains("field `downset`"), "{err}");

    // the same vector as a generator is fine
    let spec = write(
        &dir,
        "gen.json",
        r#"{"p": 3, "grid": [[0, 1, 2], [0, 1, 2]], "downset": {"generators": [[1, 1]]}}"#,
    );
    let out = run(&["distance", s(&spec)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!({"mu": 4, "alpha": [1, 1]}));
}

#[test]
fn distance_outputs() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (r#"{"p": 5, "grid": [[0, 1, 2, 3], [1, 2]], "downset": {"total_degree": 0}}"#, 8, vec![0, 0]),
        (r#"{"p": 5, "grid": [[0, 1, 2, 3], [1, 2]], "downset": {"individual_degrees": [3, 1]}}"#, 1, vec![3, 1]),
    ];
    for (i, (text, mu, alpha)) in cases.iter().enumerate() {
        let spec = write(&dir, &format!("s{i}.json"), text);
        let out = run(&["distance", s(&spec)]);
        assert_eq!(out.status.code(), Some(0));
        let doc = json(&out);
        assert_eq!(doc["mu"], *mu, "{text}");
        assert_eq!(doc["alpha"], serde_json::json!(alpha), "{text}");
    }

    // total degree ≤ 1 on 3×3: both maximal monomials attain 2·3
    let spec = write(&dir, "f3.json", F3_SPEC);
    let doc = json(&run(&["distance", s(&spec)]));
    assert_eq!(doc["mu"], 6);
    assert!(doc["alpha"] == serde_json::json!([1, 0]) || doc["alpha"] == serde_json::json!([0, 1]));
}

#[test]
fn verify_codeword_and_non_codeword() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", F3_SPEC);
    let good = write(&dir, "good.txt", "3 2 3 3\n0\n1\n2\n1\n2\n0\n2\n0\n1\n");
    let bad = write(&dir, "bad.txt", "3 2 3 3\n1\n1\n2\n1\n2\n0\n2\n0\n1\n");
    let out = run(&["verify", s(&spec), s(&good)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["codeword"], true);
    let out = run(&["verify", s(&spec), s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["codeword"], false);
}

#[test]
fn malformed_words_report_lines() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", F3_SPEC);
    let cases = [
        ("3 2 3 3\n0\n1\n", "expected 9"),
        ("3 2 3 3\n0\n1\n7\n1\n2\n0\n2\n0\n1\n", "line 4"),
        ("3 2 2 3\n0\n", "header"),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let word = write(&dir, &format!("w{i}.txt"), text);
        let out = run(&["decode", s(&spec), s(&word)]);
        assert_eq!(out.status.code(), Some(1), "{text}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{needle} not in {err}");
    }

    let word = write(&dir, "heavy.txt", "3 2 3 3\n0 3/2\n1 0/1\n2 0/1\n1 0/1\n2 0/1\n0 0/1\n2 0/1\n0 0/1\n1 0/1\n");
    let out = run(&["decode", "--weighted", s(&spec), s(&word)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("outside [0, 1]"), "{err}");

    let word = write(&dir, "decimal.txt", "3 2 3 3\n0 0.5\n");
    let out = run(&["decode", "--weighted", s(&spec), s(&word)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_spec_reports_field() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "spec.json", r#"{"p": 4, "grid": [[0, 1]], "downset": {"total_degree": 1}}"#);
    let out = run(&["distance", s(&spec)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("field `p`"));

    let spec = write(&dir, "dup.json", r#"{"p": 5, "grid": [[0, 5]], "downset": {"total_degree": 1}}"#);
    let out = run(&["distance", s(&spec)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("field `grid`"));
}

#[test]
fn fuzz_command() {
    let out = run(&["fuzz", "--cases", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "summary: 0 cases, 0 passed, 0 failed\n");

    let a = run(&["fuzz", "--seed", "3", "--cases", "15", "--threads", "2"]);
    let b = run(&["fuzz", "--seed", "3", "--cases", "15"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).ends_with("summary: 15 cases, 15 passed, 0 failed\n"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["decode"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["fuzz", "--threads", "0"]).status.code(), Some(1));
    assert_eq!(run(&["distance", "/nonexistent/spec.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
