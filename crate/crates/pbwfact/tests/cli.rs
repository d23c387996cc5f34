//! End-to-end tests of the binary: exit codes, report shapes, JSON
//! round-tripping.

use pbwfact::report::{Report, Status};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pbwfact"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

#[test]
fn verify_sf_passes_with_exit_zero() {
    let out = run(&["verify", "sf", "--alphabet", "ab", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("status: pass"));
}

#[test]
fn verify_sf_increasing_order_fails_with_exit_one() {
    let out = run(&[
        "verify", "sf", "--alphabet", "ab", "--degree", "3", "--product-order", "increasing",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lie_verify_theorem1_exit_zero() {
    let sl2 = config("sl2.json");
    let out = run(&[
        "lie", "verify", "--config", sl2.to_str().unwrap(), "--degree", "3", "--check", "theorem1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn all_shipped_configs_validate() {
    for name in [
        "abelian1.json",
        "abelian2.json",
        "abelian3.json",
        "heisenberg.json",
        "sl2.json",
        "nonabelian2.json",
    ] {
        let path = config(name);
        let out = run(&[
            "lie", "verify", "--config", path.to_str().unwrap(), "--degree", "2", "--check", "all",
        ]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn negative_degree_is_a_usage_error() {
    let out = run(&["verify", "sf", "--alphabet", "ab", "--degree", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["verify", "sf", "--alphabet", "ab", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn missing_config_is_a_usage_error() {
    let out = run(&["lie", "verify", "--config", "/nonexistent.json", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lyndon_list_prints_words_in_order() {
    let out = run(&["lyndon", "list", "--alphabet", "ab", "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines, ["a", "aab", "ab", "abb", "b"]);
}

#[test]
fn show_commands_emit_serialized_polynomials() {
    let out = run(&["pbw", "show", "--word", "ab"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["ab"], "1");
    assert_eq!(value["ba"], "-1");

    let out = run(&["dual", "show", "--word", "ba"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["ab"], "1");
    assert_eq!(value["ba"], "1");
}

#[test]
fn json_reports_round_trip() {
    for args in [
        vec!["verify", "sf", "--alphabet", "ab", "--degree", "3", "--json"],
        vec!["pbw", "verify", "--alphabet", "ab", "--max-len", "3", "--json"],
        vec!["stuffle", "verify", "--max-weight", "4", "--json"],
        vec!["trace", "verify", "--alphabet", "abc", "--theta", "a,c", "--degree", "2", "--json"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report: Report = serde_json::from_slice(&out.stdout).expect("parses as a report");
        assert_eq!(report.status, Status::Pass);
        // parse → serialize → parse is the identity
        let reserialized = serde_json::to_string(&report).unwrap();
        let reparsed: Report = serde_json::from_str(&reserialized).unwrap();
        assert_eq!(report, reparsed, "{args:?}");
        assert!(!report.parameters.is_empty(), "parameter set is recorded");
    }
}

#[test]
fn parallel_reports_match_sequential() {
    let seq = run(&["pbw", "verify", "--alphabet", "ab", "--max-len", "4", "--json"]);
    let par = run(&["pbw", "verify", "--alphabet", "ab", "--max-len", "4", "--json", "--parallel"]);
    let mut seq: Report = serde_json::from_slice(&seq.stdout).unwrap();
    let mut par: Report = serde_json::from_slice(&par.stdout).unwrap();
    // the parallel flag is part of the recorded parameters; everything else
    // must be identical
    seq.parameters.remove("parallel");
    par.parameters.remove("parallel");
    assert_eq!(seq, par);
}

#[test]
fn emit_tensors_writes_both_sides() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tensors.json");
    let out = run(&[
        "verify", "sf", "--alphabet", "ab", "--degree", "2", "--emit-tensors",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let product = value["product"].as_array().unwrap();
    let diagonal = value["diagonal"].as_array().unwrap();
    assert_eq!(product.len(), 7);
    assert_eq!(product, diagonal);
    // the empty word serializes as ""
    assert!(product.iter().any(|e| e["left"] == "" && e["right"] == ""));
}

#[test]
fn trace_verify_reports_theta_and_count() {
    let out = run(&[
        "trace", "verify", "--alphabet", "abc", "--theta", "a,c", "--degree", "3", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["pc_lyndon_count"], 10);
    assert_eq!(value["theta"][0], "a,c");
    assert_eq!(value["degree"], 3);
    assert_eq!(value["terms_lhs"], value["terms_rhs"]);
}

#[test]
fn stuffle_logstar_prints_expansion() {
    let out = run(&["stuffle", "logstar", "--word", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["y4"], "1");
    assert_eq!(value["y1 y3"], "-1/2");
    assert_eq!(value["y1 y1 y1 y1"], "-1/4");
}

#[test]
fn perturbed_family_flag_reports_failure_at_degree_three() {
    let sl2 = config("sl2.json");
    // at degree 2 the documented perturbed family passes validation and
    // fails only the product-recovery check
    let out = run(&[
        "lie", "verify", "--config", sl2.to_str().unwrap(), "--degree", "2", "--check",
        "theorem2", "--family", "perturbed", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.violations.len(), 1);
    assert!(report.violations[0].location.contains("product recovery"));
    // at degree 3 validation itself rejects the family
    let out = run(&[
        "lie", "verify", "--config", sl2.to_str().unwrap(), "--degree", "3", "--check",
        "theorem2", "--family", "perturbed", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.violations[0].location.contains("family validation"));
}
