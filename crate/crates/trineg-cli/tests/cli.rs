//! End-to-end checks of the command-line surface: exit codes, output
//! stability, and the worked examples.

use std::path::PathBuf;
use std::process::{Command, Output};

fn trineg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trineg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn workspace_file(relative: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.pop();
    path.pop();
    path.push(relative);
    path.to_string_lossy().into_owned()
}

#[test]
fn valid_reports_assignment_count() {
    let out = trineg(&["valid", "A -> (B -> A)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid (9/9 assignments)\n");
}

#[test]
fn invalid_formula_lists_counterexamples() {
    let out = trineg(&["valid", "(A -> (A -> B)) -> (A -> B)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("invalid"));
    assert!(text.contains("A=1/2, B=0"));
}

#[test]
fn neg_prints_all_three_negations() {
    let out = trineg(&["neg", "--lambda", "0.8", "0.9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "opposite 0.1, intermediary 0.5, contradictory 0.5\n"
    );
}

#[test]
fn eval_and_truth_table() {
    let out = trineg(&["eval", "~A", "--assign", "A=1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");

    let out = trineg(&["truth-table", "~A"]);
    let text = stdout(&out);
    assert!(text.contains("| value"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn entails_vacuous_premises() {
    let out = trineg(&[
        "entails",
        "--premise",
        "A",
        "--premise",
        "#A",
        "B",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("valid deduction"));
}

#[test]
fn decide_recommends_scheme_d() {
    let data = workspace_file("data/table2.csv");
    let out = trineg(&[
        "decide",
        "--income",
        "5000",
        "--savings",
        "120000",
        "--data",
        &data,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("recommendation: (d)"), "{text}");
    // builtin table gives the same result without --data
    let builtin = trineg(&["decide", "--income", "5000", "--savings", "120000"]);
    assert!(stdout(&builtin).contains("recommendation: (d)"));
}

#[test]
fn json_output_is_parseable_and_byte_identical() {
    let args = [
        "decide",
        "--income",
        "5000",
        "--savings",
        "120000",
        "--format",
        "json",
    ];
    let a = trineg(&args);
    let b = trineg(&args);
    assert_eq!(a.stdout, b.stdout);
    let value: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(value["recommendation"], "(d)");

    let audit = [
        "audit", "scoi", "--lambda", "0.8", "--samples", "50", "--step", "0.01", "--seed", "3",
        "--format", "json",
    ];
    let a = trineg(&audit);
    let b = trineg(&audit);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let value: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(value["pointwise"]["claims"].is_array());
}

#[test]
fn audit_axioms_flags_a2() {
    let out = trineg(&["audit", "axioms"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("modus ponens preserves designated value: true"));
    let a2_line = text.lines().find(|l| l.trim_start().starts_with("a2 ")).unwrap();
    assert!(a2_line.contains("invalid"), "{a2_line}");

    let goedel = trineg(&["audit", "axioms", "--semantics", "goedel"]);
    let text = stdout(&goedel);
    let a2_line = text.lines().find(|l| l.trim_start().starts_with("a2 ")).unwrap();
    assert!(a2_line.contains("valid"), "{a2_line}");
}

#[test]
fn check_proof_reports_corpus() {
    let out = trineg(&["check-proof"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("T1.1: accepted"));
    assert!(text.contains("T5.12: not accepted"));
}

#[test]
fn check_proof_loads_external_scripts() {
    let dir = std::env::temp_dir().join("trineg-cli-proofs");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("extra.json");
    std::fs::write(
        &path,
        r#"[{"name":"user.1","goal":"p -> p",
            "lines":[
              {"formula":"(p -> (p -> p)) -> (p -> p)","just":{"kind":"axiom","name":"a2"}},
              {"formula":"p -> (p -> p)","just":{"kind":"axiom","name":"a1"}},
              {"formula":"p -> p","just":{"kind":"mp","from":[1,2]}}
            ]}]"#,
    )
    .unwrap();
    let out = trineg(&["check-proof", "--proofs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("user.1: accepted"));
}

#[test]
fn trichotomy_prints_partition() {
    let dir = std::env::temp_dir().join("trineg-cli-trichotomy");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triple.json");
    std::fs::write(
        &path,
        r#"{"universe":["a","b","c"],"positive":["a"],"opposite":["b"]}"#,
    )
    .unwrap();
    let out = trineg(&["trichotomy", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(r#"intermediary: {"c"}"#));
    assert!(text.contains("star identity holds: true"));
}

#[test]
fn domain_errors_exit_one_with_code_prefix() {
    let out = trineg(&["valid", "A &"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.starts_with("error[parse]:"), "{err}");
    assert_eq!(err.lines().count(), 1);

    let out = trineg(&["neg", "--lambda", "1.5", "0.4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error[lambda]:"));

    let out = trineg(&["neg", "2.0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error[degree]:"));
}

#[test]
fn usage_errors_exit_two() {
    let out = trineg(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = trineg(&["valid"]);
    assert_eq!(out.status.code(), Some(2));
}
