use std::process::{Command, Output};

use serde_json::Value;

fn backedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_backedge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn catalog_lists_and_prints() {
    let o = backedge(&["catalog"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "P_7"));
    let o = backedge(&["catalog", "C_3"]);
    assert_eq!(stdout(&o).lines().next(), Some("tournament 3"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(backedge(&["catalog", "nope"]).status.code(), Some(2));
    assert_eq!(backedge(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(backedge(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn passing_suite_exits_0_with_report_schema() {
    let o = backedge(&["--format", "json", "verify", "--suite", "paley"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "paley");
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["status"], "pass");
        assert_eq!(c["elapsed_ms"], 0);
    }
}

#[test]
fn report_written_only_where_asked() {
    let dir = std::env::temp_dir().join(format!("backedge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.json");
    let o = backedge(&["--format", "json", "verify", "--suite", "census", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn backedges_under_a_numbering() {
    let o = backedge(&["--format", "json", "backedges", "D_5", "--numbering", "1,2,3,4,5"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "ordered");
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn census_count() {
    let o = backedge(&["--format", "json", "backedges", "D_5"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 24);
}

#[test]
fn dot_for_a_report_is_refused() {
    let o = backedge(&["--format", "dot", "verify", "--suite", "census"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_reports_its_checks() {
    let o = backedge(&["--format", "json", "construct", "--k", "2", "--c", "1/2", "--width", "8"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<_> = v["report"]["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap().to_owned()).collect();
    for id in ["a", "b", "c", "d", "e", "blockade"] {
        assert!(ids.iter().any(|i| i == id), "missing check {id}");
    }
    let passed = v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "fail" || c["required"] == false);
    assert_eq!(o.status.code(), Some(if passed { 0 } else { 1 }));
}

#[test]
fn stdin_operand() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_backedge"))
        .args(["contains", "-", "C_3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let text = stdout(&backedge(&["catalog", "P_7"]));
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_ne!(stdout(&o).trim(), "none");
}
