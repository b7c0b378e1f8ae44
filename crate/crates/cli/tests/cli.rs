use std::process::{Command, Output};

use fasnu::harness::ClaimResult;

fn fasnu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fasnu")).args(args).output().expect("spawn fasnu")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tau_of_builtin() {
    let o = fasnu(&["tau", "paper-T"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "tau=12");
    assert!(lines[1].starts_with("ordering "));
    assert_eq!(lines.iter().filter(|l| l.starts_with("arc ")).count(), 12);
}

#[test]
fn nu_with_budget_flags() {
    let o = fasnu(&["nu", "paper-T7", "--budget-nodes", "1000000"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("nu=4 optimal=true\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("cycle ")).count(), 4);

    // a starved budget still reports a valid lower bound
    let o = fasnu(&["nu", "paper-T", "--budget-nodes", "10"]);
    assert!(stdout(&o).contains("optimal=false"));
}

#[test]
fn through_vertex_commands() {
    let out = stdout(&fasnu(&["cycles-through", "paper-T11", "k"]));
    assert!(out.starts_with("cycles_through=5\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("cut ")).count(), 5);
    let out = stdout(&fasnu(&["tri-through", "paper-T11", "10"]));
    assert!(out.starts_with("triangles_through=4\n"));
}

#[test]
fn file_source_round_trips_show() {
    let dir = std::env::temp_dir().join(format!("fasnu-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t7.txt");
    std::fs::write(&path, stdout(&fasnu(&["show", "paper-T7"]))).unwrap();
    let out = stdout(&fasnu(&["tau", path.to_str().unwrap()]));
    assert!(out.starts_with("tau=5\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enum_counts_and_predicate() {
    let out = stdout(&fasnu(&["enum", "5"]));
    assert_eq!(out.lines().filter(|l| l.starts_with("5:")).count(), 12);
    assert!(out.contains("classes=12 labeled_sum=1024 labeled_total=1024 identity=true"));
    let out = stdout(&fasnu(&["enum", "6", "--predicate", "nu_lt_tau"]));
    assert!(out.ends_with("nu_lt_tau=0\n"));
}

#[test]
fn random_check_reports_no_failures() {
    let o = fasnu(&["random-check", "--model", "tournament", "--n", "8", "--count", "10", "--seed", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("instances=10 "));
}

#[test]
fn verify_paper_lines_parse() {
    let o = fasnu(&["verify-paper", "--skip", "NU_TP"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let claims: Vec<ClaimResult> = out.lines().filter(|l| l.starts_with("CLAIM ")).map(|l| l.parse().unwrap()).collect();
    assert_eq!(claims.len(), 16);
    assert!(out.ends_with("summary: 16 claims, 15 passed, 0 failed, 1 skipped\n"));
}

#[test]
fn bad_inputs_exit_with_error() {
    assert_eq!(fasnu(&["tau", "no-such-graph"]).status.code(), Some(2));
    assert_eq!(fasnu(&["cycles-through", "paper-T11", "z"]).status.code(), Some(2));
    assert!(!fasnu(&["enum", "3", "--predicate", "bogus"]).status.success());
}
