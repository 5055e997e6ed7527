use std::process::Command;

use nogo_cli::report::{Report, StepVerdict, VERSION};

fn s2nogo(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_s2nogo")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, stdout, _) = s2nogo(&full);
    let report: Report = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    assert_eq!(report.version, VERSION);
    (code, report)
}

#[test]
fn bracket_text() {
    let (code, out, _) = s2nogo(&["bracket", "S1", "S2"]);
    assert_eq!((code, out.trim()), (0, "S3"));
    let (code, out, _) = s2nogo(&["bracket", "S3", "S1^2"]);
    assert_eq!((code, out.trim()), (0, "2*S1*S2"));
}

#[test]
fn cg_values() {
    let (_, out, _) = s2nogo(&["cg", "1", "1", "1", "-1", "2", "0"]);
    assert_eq!(out.trim(), "sqrt(1/6)");
    let (_, out, _) = s2nogo(&["cg", "1", "1", "0", "0", "1", "0"]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn json_reports_follow_schema() {
    for args in [
        vec!["bracket", "S1*S2", "S3"],
        vec!["hdecomp", "S1^2 + S3"],
        vec!["cg", "2", "1", "1", "0", "2", "1"],
        vec!["ylbracket", "--l", "4", "--j", "3"],
        vec!["verify-classical", "--theorem", "5"],
        vec!["verify-quantum", "--j", "5/2", "--theorem", "2"],
        vec!["nogo", "--jmax", "2"],
        vec!["selftest", "--cases", "4"],
    ] {
        let (code, r) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(r.command, args[0]);
        assert!(!r.steps.is_empty());
        assert!(r.steps.iter().all(|s| s.verdict == StepVerdict::Pass && !s.anchor.is_empty()));
        assert!(r.params.is_object());
    }
}

#[test]
fn quantum_verdicts() {
    let (_, r) = json(&["verify-quantum", "--j", "3", "--theorem", "5"]);
    assert_eq!(r.verdict, "contradiction");
    let (_, r) = json(&["verify-quantum", "--j", "0", "--theorem", "2"]);
    assert_eq!(r.verdict, "consistent-trivial");
}

#[test]
fn input_errors_exit_with_two() {
    let (code, r) = json(&["bracket", "S1 +", "S2"]);
    assert_eq!(code, 2);
    assert_eq!(r.verdict, "fail");
    let (code, _, err) = s2nogo(&["bracket", "S4", "S2"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown symbol"), "{err}");
    let (code, _, _) = s2nogo(&["cg", "1", "1", "2", "0", "1", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = s2nogo(&["verify-quantum", "--j", "1/3", "--theorem", "2"]);
    assert_eq!(code, 2);
    let (code, _, _) = s2nogo(&["verify-quantum", "--j", "1", "--theorem", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn false_identity_exits_with_one() {
    let (code, r) = json(&["verify-classical", "pb(S1,S2)", "S1"]);
    assert_eq!(code, 1);
    assert_eq!(r.verdict, "fail");
}

#[test]
fn sequential_mode_gives_same_report() {
    let (_, par) = json(&["nogo", "--jmax", "3"]);
    let (_, seq) = json(&["--sequential", "nogo", "--jmax", "3"]);
    assert_eq!(par, seq);
}
