//! End-to-end tests of the `skewprime` binary: exit codes, text output,
//! JSON reports (validated against the shipped schema), and corpus replay.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewprime"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is a JSON report")
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("repository root exists")
}

#[test]
fn classify_text_report_matches_known_example() {
    let out = run(&["classify", "--ring", "HQ[t]", "--poly", "t^2 + 1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("extremely:    No"), "got:\n{text}");
    assert!(text.contains("completely:   No"), "got:\n{text}");
    assert!(text.contains("structurally: Yes"), "got:\n{text}");
    assert!(text.contains("weakly:       Yes"), "got:\n{text}");
    assert!(text.contains("invariant: yes"), "got:\n{text}");
    assert!(text.contains("bound:     t^2 + 1"), "got:\n{text}");
}

#[test]
fn classify_json_report_carries_verdicts_and_witnesses() {
    let out = run(&[
        "classify",
        "--ring",
        "HQ[t]",
        "--poly",
        "(t - j)*(t - i)",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema"], "skewprime/report/v1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["ring"], "HQ[t]");
    assert_eq!(v["verdicts"]["extremely"]["value"], "No");
    assert_eq!(v["verdicts"]["completely"]["value"], "No");
    assert_eq!(v["verdicts"]["structurally"]["value"], "No");
    assert_eq!(v["verdicts"]["weakly"]["value"], "Yes");
    assert_eq!(v["bound"], "t^4 + 2*t^2 + 1");
    assert_eq!(v["invariant"], false);
    assert!(v["witnesses"].is_object());
}

#[test]
fn classify_json_validates_against_shipped_schema() {
    let schema_path = repo_root().join("schemas/classify-report.schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&schema_path).expect("schema file"))
            .expect("schema parses");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");

    let cases: &[(&str, &str)] = &[
        ("HQ[t]", "t^2 + 1"),
        ("HQ[t]", "(t - j)*(t - i)"),
        ("HQ[t]", "t - i"),
        ("GF(4)[t;frob]", "t^2"),
        ("GF(4)[t;frob]", "t^2 + a*t"),
        ("GF(9)[t;frob]", "t"),
        ("QX[t;shift]", "t^2"),
        ("QX[t;shift]", "0"),
    ];
    for (ring, poly) in cases {
        let out = run(&["classify", "--ring", ring, "--poly", poly, "--json"]);
        assert_eq!(out.status.code(), Some(0), "{ring} {poly}");
        let report = json_of(&out);
        let errors: Vec<String> = validator
            .iter_errors(&report)
            .map(|e| format!("{e}"))
            .collect();
        assert!(
            errors.is_empty(),
            "{ring} {poly}: schema violations {errors:?} in {report}"
        );
    }
}

#[test]
fn similar_json_returns_verified_witness() {
    let out = run(&["similar", "--ring", "HQ[t]", "t - i", "t - j", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["verdict"]["value"], "Yes");
    assert_eq!(v["witness"]["kind"], "comaximal");
    assert_eq!(v["witness"]["checks"]["product"], true);
    assert_eq!(v["witness"]["checks"]["rightCoprime"], true);
    assert_eq!(v["witness"]["checks"]["leftCoprime"], true);
    assert_eq!(v["witness"]["checks"]["quotient"], true);

    let out = run(&["similar", "--ring", "HQ[t]", "t - i", "t - 2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["verdict"]["value"], "No");
    assert_eq!(v["witness"], serde_json::Value::Null);
}

#[test]
fn factor_json_emits_complete_factorization() {
    let out = run(&["factor", "--ring", "HQ[t]", "--poly", "t^2 + 1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["atoms"].as_array().map(|a| a.len()), Some(2));
    assert_eq!(v["complete"], true);
    assert_eq!(v["productCheck"], true);
}

#[test]
fn bound_json_reports_central_bound() {
    let out = run(&["bound", "--ring", "HQ[t]", "--poly", "t - i", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["bound"], "t^2 + 1");
    assert_eq!(v["bounded"], true);
    assert_eq!(v["invariant"], false);
}

#[test]
fn closure_json_reports_generator() {
    let out = run(&[
        "closure",
        "--ring",
        "QX[t;shift]",
        "--poly",
        "x*t",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["generator"], "t");
    assert_eq!(v["invariant"], true);
    assert_eq!(v["proper"], true);
}

#[test]
fn lab_checks_and_examples_pass() {
    let out = run(&["lab", "--ring", "M2(GF(2))", "--check", "examples"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("result: pass"));

    let out = run(&["lab", "--ring", "T2(GF(2))", "--check", "all", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["clean"], true);
    assert_eq!(v["reports"].as_array().map(|r| r.len()), Some(3));

    let out = run(&["lab", "--ring", "GF(4)", "--check", "examples"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validate_small_sweeps_are_clean() {
    let out = run(&["validate", "--ring", "GF(4)[t;frob]", "--deg", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["clean"], true);
    assert_eq!(v["degreeCap"], 1);
    assert_eq!(v["generators"], 4);
    assert!(v["mismatches"].as_array().is_some_and(|m| m.is_empty()));
}

#[test]
fn validate_degree_cap_falls_back_to_env_var() {
    let out = bin()
        .args(["validate", "--ring", "GF(2)[t;frob]", "--json"])
        .env("SKEWPRIME_MAX_DEG", "1")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["degreeCap"], 1);
}

#[test]
fn corpus_replay_is_clean() {
    let dir = repo_root().join("corpus");
    let out = run(&["corpus", "--dir", dir.to_str().expect("utf-8 path")]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    assert!(text.contains("all match"), "got:\n{text}");
    assert!(!text.contains("FAIL"), "got:\n{text}");
}

#[test]
fn corpus_regression_exits_three() {
    let dir = std::env::temp_dir().join(format!("skewprime-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp corpus dir");
    // A deliberately wrong golden: t is extremely prime, the file claims no.
    std::fs::write(
        dir.join("broken.json"),
        r#"{
  "schema": "skewprime/corpus/v1",
  "entries": [
    {
      "ring": "GF(4)[t;frob]",
      "command": "classify",
      "input": "t",
      "expect": {
        "verdicts": {
          "extremely": "no",
          "completely": "yes",
          "structurally": "yes",
          "weakly": "yes"
        }
      }
    }
  ]
}"#,
    )
    .expect("write corpus file");
    let out = run(&["corpus", "--dir", dir.to_str().expect("utf-8 path")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).contains("FAILURES"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_and_parse_errors_exit_one() {
    // Unknown flag.
    let out = run(&["classify", "--ring", "HQ[t]", "--nope", "x"]);
    assert_eq!(out.status.code(), Some(1));
    // Bad ring descriptor.
    let out = run(&["classify", "--ring", "ZZ[t]", "--poly", "t"]);
    assert_eq!(out.status.code(), Some(1));
    // Bad polynomial text.
    let out = run(&["classify", "--ring", "HQ[t]", "--poly", "t^2 +"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    // Scalar not valid in the ring.
    let out = run(&["classify", "--ring", "GF(2)[t;frob]", "--poly", "a*t"]);
    assert_eq!(out.status.code(), Some(1));
    // Unknown lab check name.
    let out = run(&["lab", "--ring", "M2(GF(2))", "--check", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    // Missing corpus directory.
    let out = run(&["corpus", "--dir", "/nonexistent/skewprime-corpus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cap_exceeded_exits_two() {
    // M2(GF(32)) has 2^20 elements, over the finite-lab element cap.
    let out = run(&["lab", "--ring", "M2(GF(32))"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn help_and_version_exit_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for verb in [
        "classify", "factor", "bound", "similar", "closure", "lab", "validate", "corpus",
    ] {
        assert!(text.contains(verb), "help misses {verb}:\n{text}");
    }
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn zero_ideal_classifies_without_error() {
    let out = run(&["classify", "--ring", "GF(2)[t;frob]", "--poly", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    for notion in ["extremely", "completely", "structurally", "weakly"] {
        assert_eq!(v["verdicts"][notion]["value"], "Yes", "{notion}");
    }
    assert_eq!(v["bound"], serde_json::Value::Null);
}
