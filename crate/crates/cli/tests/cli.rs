//! End-to-end tests against the compiled binary: exact output bytes,
//! exit codes, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn sidon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sidon_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidon"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("sidon-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn construct_singer_q3() {
    let path = temp_path("singer3.txt");
    let out = sidon(&["construct", "singer", "--q", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("|X|=13 |A|=4 d(A)=0"), "{}", stdout(&out));
    let content = std::fs::read_to_string(&path).unwrap();
    let mut lines = content.lines();
    assert_eq!(lines.next(), Some("group cyclic 13"));
    assert_eq!(lines.count(), 4);
    std::fs::remove_file(&path).ok();
}

#[test]
fn construct_ruzsa_with_theta() {
    let out = sidon(&["construct", "ruzsa", "--p", "7", "--theta", "3"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("|X|=42 |A|=6"));
    // Six element lines after the header.
    assert_eq!(stdout(&out).lines().count(), 7);
}

#[test]
fn construct_rejects_non_prime_power() {
    let out = sidon(&["construct", "singer", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a prime power"));
}

#[test]
fn construct_bose_chowla_higher_degree() {
    // h = 3 lives in Z_{q^3 - 1}; only h = 2 has table closed forms, but
    // construction works for any h >= 2.
    let out = sidon(&["construct", "bose-chowla", "--q", "3", "--h", "3"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("|X|=26 |A|=3"));
    let bad = sidon(&["construct", "bose-chowla", "--q", "3", "--h", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn construct_rejects_bad_theta() {
    let out = sidon(&["construct", "ruzsa", "--p", "7", "--theta", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a primitive root"));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = sidon_env(&["construct", "singer", "--q", "5"], "SIDON_BUDGET", "100");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_singer_q4_full() {
    let out = sidon(&["verify", "singer", "--q", "4", "--level", "full", "--no-meta"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["pass"], true);
    assert!(report.get("meta").is_none());
    let checks = report["checks"].as_array().unwrap();
    let edge_check = checks
        .iter()
        .find(|c| c["name"] == "edge_count_closed_form")
        .unwrap();
    assert_eq!(edge_check["observed"], "50");
    assert!(checks.iter().any(|c| c["name"] == "saturation" && c["pass"] == true));
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_output_is_deterministic_without_meta() {
    let a = sidon(&["verify", "cart2", "--p", "7", "--level", "full", "--no-meta"]);
    let b = sidon(&["verify", "cart2", "--p", "7", "--level", "full", "--no-meta"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_cart3_reports_tuple_bound() {
    let out = sidon(&["verify", "cart3", "--p", "11", "--alpha", "2", "--level", "full", "--no-meta"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let bound = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "tuple_count_family_bound")
        .unwrap()
        .clone();
    assert!(bound["expected"].as_str().unwrap().contains(">= 6"));
    assert_eq!(bound["pass"], true);
}

#[test]
fn verify_custom_non_sidon_exits_1() {
    let path = temp_path("bad.txt");
    std::fs::write(&path, "group cyclic 7\n0\n1\n2\n").unwrap();
    let out = sidon(&["verify", "--set", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("Sidon property violated"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_custom_sidon_set_passes() {
    let path = temp_path("good.txt");
    std::fs::write(&path, "group cyclic 7\n0\n1\n3\n").unwrap();
    let out = sidon(&["verify", "--set", path.to_str().unwrap(), "--level", "full", "--no-meta"]);
    assert!(out.status.success(), "{}", stderr(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn tables_match_and_exit_zero() {
    for which in ["deficiency", "edges"] {
        let out = sidon(&["tables", "--which", which]);
        assert!(out.status.success(), "{which}");
        let text = stdout(&out);
        assert!(text.lines().count() > 30);
        assert!(!text.contains("NO"), "{which} had a mismatch:\n{text}");
    }
}

#[test]
fn tables_small_range_csv() {
    let out = sidon(&["tables", "--which", "deficiency", "--q", "2,3", "--p", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,group,|X|,|A|,|A-A|,d(A),formula,match");
    // 2 singer + 2 bose-chowla + 4 one-prime families.
    assert_eq!(lines.len(), 9);
    assert!(lines[1].starts_with("singer(2),cyclic 7,7,3,7,0,0,yes"));
}

#[test]
fn tables_empty_range() {
    let out = sidon(&["tables", "--which", "edges", "--q", "", "--p", ""]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1); // header only
}

#[test]
fn export_edgelist_exact_bytes() {
    let out = sidon(&["export", "singer", "--q", "2", "--format", "edgelist"]);
    assert!(out.status.success());
    let expected = "# sumgraph singer(2) n=7 m=9\n0 1\n0 3\n1 2\n1 6\n2 5\n2 6\n3 4\n3 5\n4 6\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn export_json_structure() {
    let out = sidon(&["export", "singer", "--q", "4", "--format", "json"]);
    assert!(out.status.success());
    let graph: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(graph["schema"], 1);
    assert_eq!(graph["provenance"], "singer(4)");
    assert_eq!(graph["absolute"].as_array().unwrap().len(), 5); // q + 1
    assert_eq!(graph["edge_count"], 50);
    assert_eq!(graph["edges"].as_array().unwrap().len(), 50);
}

#[test]
fn export_unknown_format_exits_2() {
    let out = sidon(&["export", "singer", "--q", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_is_deterministic() {
    let a = sidon(&["export", "bose-chowla", "--q", "5", "--format", "edgelist"]);
    let b = sidon(&["export", "bose-chowla", "--q", "5", "--format", "edgelist"]);
    assert_eq!(a.stdout, b.stdout);
}
