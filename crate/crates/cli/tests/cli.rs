//! Behavior of the installed binary: command surfaces, exit codes, JSON
//! round-trips, and the DOT golden file.

use std::process::{Command, Output};

use unimodal::chains::recursive_scd;
use unimodal_cli::{export_dot, FullReport};

const GOLDEN_SCD3: &str = include_str!("golden/recursive_scd_3.dot");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimodal"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn inject_reproduces_the_worked_example() {
    let out = run(&["inject", "--n", "11", "--set", "1,2,4,11", "--rule", "prefix-swap"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{3,5,6,7,11}"), "{text}");
    assert!(text.contains("r=7"), "{text}");
}

#[test]
fn inject_gk_reports_chain_end() {
    // "[[]]" is fully matched, so the chain ends at {1,2}.
    let out = run(&["inject", "--n", "4", "--set", "1,2", "--rule", "gk"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("none"));

    let out = run(&["inject", "--n", "4", "--set", "2", "--rule", "gk"]);
    assert!(stdout(&out).contains("{2,4}"));
}

#[test]
fn inject_empty_set_works() {
    let out = run(&["inject", "--n", "4", "--rule", "gk"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("{4}"));
}

#[test]
fn chains_build_prints_the_displayed_chains() {
    let out = run(&["chains", "build", "--n", "3", "--method", "recursive"]);
    assert!(out.status.success());
    let expected = "{} -> {1} -> {1,2} -> {1,2,3}\n{3} -> {1,3}\n{2} -> {2,3}\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn dot_export_matches_the_golden_file() {
    assert_eq!(export_dot(&recursive_scd(3).unwrap()), GOLDEN_SCD3);

    let dir = std::env::temp_dir().join(format!("unimodal-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scd3.dot");
    let out = run(&[
        "chains",
        "build",
        "--n",
        "3",
        "--method",
        "recursive",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, GOLDEN_SCD3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_with_two() {
    let out = run(&["inject", "--n", "4", "--set", "9", "--rule", "gk"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["all", "--profile", "datacenter"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["operators", "verify", "--n", "5", "--field", "gfp:4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["inject", "--n", "4", "--set", "1,2", "--rule", "prefix-swap"]);
    assert_eq!(out.status.code(), Some(2), "|S| >= n/2 is a usage error");
}

#[test]
fn operators_verify_small_case_passes() {
    let out = run(&["operators", "verify", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for k in 0..=2 {
        assert!(text.contains(&format!("PASS operators/eq1 field=rational n=2 k={k}")), "{text}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn operators_verify_supports_gfp() {
    let out = run(&["operators", "verify", "--n", "3", "--field", "gfp:101"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("field=gfp:101"));
}

#[test]
fn json_report_round_trips() {
    let out = run(&["--json", "binomial", "verify", "--n-max", "12"]);
    assert!(out.status.success());
    let report: FullReport = serde_json::from_str(&stdout(&out)).expect("valid JSON document");
    assert!(report.pass());
    // Recomputing the summary from the records must match what is embedded.
    for suite in &report.suites {
        let passed = suite.records.iter().filter(|r| r.pass).count();
        assert_eq!(passed, suite.summary.passed);
        assert_eq!(suite.records.len() - passed, suite.summary.failed);
    }
    let total_passed: usize = report.suites.iter().map(|s| s.summary.passed).sum();
    assert_eq!(total_passed, report.summary.passed);
}

#[test]
fn sperner_exhaustive_flag_is_bounded() {
    let out = run(&["sperner", "verify", "--n", "7", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["sperner", "verify", "--n", "3", "--exhaustive", "--samples", "50"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("max-antichain"));
    assert!(text.contains("antichain-count-dual"));
}

#[test]
fn zpoly_mixed_flag_adds_a_check() {
    let out = run(&["zpoly", "verify", "--dice", "5", "--mixed", "2,2,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("mixed-gambling m=2 n=2 k=2"));
}
