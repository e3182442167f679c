use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspace")).args(args).output().expect("gspace runs")
}

fn scenario(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name).display().to_string()
}

fn temp_scenario(name: &str, body: &str) -> String {
    let path: PathBuf = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).expect("write scenario");
    path.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn bundled_scenarios_pass_except_the_deliberate_mismatch() {
    for name in ["borel-non-bi-invariant.json", "gl2-orbit-intersection.json", "s3-cosets.json", "words-layers.json"] {
        let out = gspace(&["run", &scenario(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
}

#[test]
fn false_assertion_exits_one_with_counterexample() {
    let out = gspace(&["run", &scenario("s3-induced-not-distributive.json")]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("counterexample: g="), "{text}");
    assert!(text.contains("MISMATCH"));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    for args in [
        vec!["--format", "json", "run", &scenario("s3-cosets.json")],
        vec!["--format", "json", "reproduce", "left-translation"],
        vec!["check-normalizer-criterion", &scenario("borel-non-bi-invariant.json")],
    ] {
        let (a, b) = (gspace(&args), gspace(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn json_report_carries_structured_checks() {
    let out = gspace(&["--format", "json", "reproduce", "orbit-intersection"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(v["passed"], true);
    assert_eq!(v["entries"][0]["data"]["witness"], "[[0,1],[1,0]]");
}

#[test]
fn empty_query_list_gives_empty_report() {
    let path = temp_scenario(
        "empty.json",
        r#"{"group": {"catalog": "S3"}, "action": {"kind": "conjugation_i", "subgroup": "whole"}}"#,
    );
    let out = gspace(&["--format", "json", "run", &path]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"].as_array().map(Vec::len), Some(0));
}

#[test]
fn error_classes_have_distinct_exit_codes() {
    assert_eq!(gspace(&["reproduce", "no-such-example"]).status.code(), Some(2));
    assert_eq!(gspace(&["bogus-verb"]).status.code(), Some(2));
    let bad = temp_scenario("bad.json", "{ not json");
    assert_eq!(gspace(&["run", &bad]).status.code(), Some(3));
    assert_eq!(gspace(&["run", "/nonexistent/scenario.json"]).status.code(), Some(3));
    let unknown = temp_scenario(
        "unknown-group.json",
        r#"{"group": {"catalog": "S9"}, "action": {"kind": "conjugation_i", "subgroup": "whole"}}"#,
    );
    assert_eq!(gspace(&["run", &unknown]).status.code(), Some(4));
    assert_eq!(gspace(&["reproduce", "left-translation", "--group", "C4"]).status.code(), Some(4));
}

#[test]
fn every_reproduction_matches() {
    for id in ["borel-witness", "orbit-intersection", "coset-orbits", "left-translation"] {
        let out = gspace(&["reproduce", id]);
        assert_eq!(out.status.code(), Some(0), "{id}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("status: ok\n"));
    }
    let out = gspace(&["reproduce", "dihedral-layers", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("H^1 = {x, xh}"));
    assert!(text.contains("H^2 = {x, xh, h(xh)^3, h(xh)^2 x}"));
    let out = gspace(&["reproduce", "coset-orbits", "--group", "D4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verbs_run_against_scenarios() {
    let s3 = scenario("s3-cosets.json");
    let out = gspace(&["orbit", &s3, "--point", "()", "--max-depth", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("G^1((), ()) = {(), (1 2)}"), "{}", stdout(&out));
    assert_eq!(gspace(&["verify-axioms", &s3]).status.code(), Some(0));
    assert_eq!(gspace(&["check-distributive", &s3]).status.code(), Some(0));

    let sweep = temp_scenario(
        "sweep.json",
        r#"{"group": {"catalog": "S3"}, "action": {"kind": "conjugation_i", "subgroup": {"generators": ["(1 2)"]}}}"#,
    );
    let out = gspace(&["check-normalizer-criterion", &sweep]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("[normalizer_criterion]").count(), 6);

    let out = gspace(&["catalog"]);
    assert!(stdout(&out).contains("S3: order 6"));
    assert!(stdout(&out).contains("Q8: order 8"));
}
