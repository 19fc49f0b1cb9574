//! End-to-end tests of the legctl binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn legctl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legctl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn trefoil_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../diagrams/trefoil.json")
}

#[test]
fn invariants_of_the_shipped_trefoil() {
    let path = trefoil_path();
    let out = legctl(&["invariants", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["tb"], -5);
    assert_eq!(v["rot"]["plus"], 6);
    assert_eq!(v["rot"]["minus"], -6);
    assert_eq!(v["d3"], "3/2");
    assert_eq!(v["signature"], -2);
    assert_eq!(v["ambient_structure"], "overtwisted");
}

#[test]
fn count_pipeline_end_to_end() {
    let out = legctl(&[
        "count", "--p", "2", "--q", "-3", "--tb", "-9", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["case"], "DLZ2");
    assert_eq!(v["slope"], "2/3");
    assert_eq!(v["total"], 7);
    assert_eq!(v["standard"], 5);
    assert_eq!(v["exceptional_upper_bound"], 2);
    assert_eq!(v["reduction"]["r"][2], "2/7");
}

#[test]
fn unknown_results_are_not_errors() {
    let out = legctl(&["count", "--p", "3", "--q", "-5", "--tb", "-13"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("unknown"));
    let out = legctl(&["count", "--p", "2", "--q", "-3", "--tb", "-6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("infinite slope"));
}

#[test]
fn usage_errors_exit_two() {
    let out = legctl(&["count", "--p", "1", "--q", "2", "--tb", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = legctl(&["family", "lht"]);
    assert_eq!(out.status.code(), Some(2));
    let out = legctl(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_emit_then_reread() {
    let dir = tempfile::tempdir().unwrap();
    let out = legctl(&[
        "family",
        "neg",
        "--p",
        "2",
        "--n",
        "2",
        "--emit",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
    let emitted = dir.path().join("neg_p2_n2_k0_l0_u0_v0.json");
    let out = legctl(&["invariants", emitted.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stdout: {}", stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["tb"], -5);
    assert_eq!(v["rot"]["plus"], 6);
    assert_eq!(v["d3"], "3/2");
}

#[test]
fn verify_paper_reports_all_criteria() {
    let out = legctl(&["verify-paper"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "output: {text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    assert!(text.contains("10/10 criteria passed"));
}
