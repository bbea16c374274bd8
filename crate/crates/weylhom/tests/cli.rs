//! End-to-end checks of the `weylhom` binary: golden outputs, exit codes
//! and JSON validity.

use std::process::{Command, Output};

fn weylhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn homrank_a2_collapses() {
    let out = weylhom(&["homrank", "A", "2", "--s", "1,1", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1,1"), "{text}");
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("1,1")).collect();
    assert_eq!(lines.len(), 1);
}

#[test]
fn homrank_b3_has_two_rows() {
    let out = weylhom(&["homrank", "B", "3", "--s", "0,1,0", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0,1,0"));
    assert!(text.contains("0,0,0"));
}

#[test]
fn homrank_rejects_negative_s() {
    let out = weylhom(&["homrank", "A", "2", "--s", "-1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("s must be nonnegative"));
}

#[test]
fn homrank_json_matches_table_data() {
    let json = weylhom(&["homrank", "B", "3", "--s", "0,2,0", "--k", "1", "--json"]);
    assert!(json.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let entries = value["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    // Entries are sorted lexicographically by weight.
    assert_eq!(entries[0]["weight"], serde_json::json!([0, 0, 0]));
    assert_eq!(entries[0]["coeff"], serde_json::json!(1));
    assert_eq!(entries[1]["weight"], serde_json::json!([0, 1, 0]));
    assert_eq!(entries[1]["coeff"], serde_json::json!(2));
    assert_eq!(entries[2]["weight"], serde_json::json!([0, 2, 0]));
}

#[test]
fn detcnk_matches_prediction() {
    let out = weylhom(&["detcnk", "3", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "det = 1, predicted = 1, match");
    let out = weylhom(&["detcnk", "1", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "det = -1, predicted = -1, match");
}

#[test]
fn coexpand_mixed_monomial() {
    let out = weylhom(&["coexpand", "t1*u1", "--k", "1", "--l", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "t1*u1 (x) t1 + t1 (x) t1*u1");
}

#[test]
fn coexpand_rejects_negative_u_exponents() {
    let out = weylhom(&["coexpand", "u1^-1", "--k", "0", "--l", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("factor"));
}

#[test]
fn invdim_oracle_example() {
    let out = weylhom(&["invdim", "A:2; 1@0, 2@1", "--mu", "1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "dim = 1");
    let out = weylhom(&["invdim", "A:2; 1@0, 2@1", "--mu", "0,0"]);
    assert_eq!(stdout(&out).trim(), "dim = 0");
}

#[test]
fn weylglob_highest_passes() {
    let out = weylhom(&[
        "weylglob", "highest", "--config", "A:1; 1@0", "--window-u", "4", "--window-t", "0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn weylglob_small_window_is_inconclusive() {
    let out = weylhom(&[
        "weylglob", "udegree", "--config", "A:1; 1@0", "--window-u", "1", "--threshold", "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weylglob_same_point_factorization_fails() {
    let out = weylhom(&["weylglob", "factorization", "--config", "A:1; 1@0, 1@0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("DIVERGES"));
}

#[test]
fn weylglob_reports_are_json() {
    let out = weylhom(&[
        "weylglob", "invariants", "--config", "A:1; 1@0", "--window-u", "3", "--window-t", "0",
        "--json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["check"], "invariants-equal-base");
    assert_eq!(value["verdict"], "pass");
    assert!(value["window"].is_object());
}

#[test]
fn symcheck_runs_seeded() {
    let a = weylhom(&["symcheck", "--blocks", "2,1", "--samples", "20", "--seed", "9"]);
    let b = weylhom(&["symcheck", "--blocks", "2,1", "--samples", "20", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn check_suite_passes_and_emits_json() {
    let out = weylhom(&["check-suite"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("10/10 criteria passed"));

    let json = weylhom(&["check-suite", "--json"]);
    assert!(json.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["all_passed"], serde_json::json!(true));
    assert_eq!(value["criteria"].as_array().unwrap().len(), 10);
}

#[test]
fn rank_cap_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_weylhom"))
        .args(["homrank", "A", "5", "--s", "1,0,0,0,0"])
        .env("WEYLHOM_MAX_RANK", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn table_and_json_agree_on_invdim() {
    let table = weylhom(&["invdim", "A:1; 1@0, 1@1, 1@2", "--mu", "3"]);
    let json = weylhom(&["invdim", "A:1; 1@0, 1@1, 1@2", "--mu", "3", "--json"]);
    assert_eq!(stdout(&table).trim(), "dim = 1");
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["dim"], serde_json::json!(1));
}
