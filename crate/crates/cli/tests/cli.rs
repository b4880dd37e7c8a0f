//! End-to-end checks of the hecke binary: golden outputs, determinism,
//! and the exit-code contract.

use std::process::{Command, Output};

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf8 stdout")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout_of(out)).expect("stdout is one JSON document")
}

#[test]
fn restrict_prints_the_multiplicity_map() {
    let out = hecke(&["restrict", "--lambda", "2,1", "--mu", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"(2)\":1,\"(1,1)\":1}\n");
}

#[test]
fn tableaux_enumerates_the_square() {
    let out = hecke(&["tableaux", "--lambda", "2,2"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["tableaux"].as_array().unwrap().len(), 2);
    assert_eq!(doc["shape"], "(2,2)");
}

#[test]
fn skew_tableaux_render_absent_cells_as_null() {
    let out = hecke(&["tableaux", "--lambda", "2,1", "--mu", "1"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["count"], 2);
    let first_row = &doc["tableaux"][0][0];
    assert!(first_row[0].is_null());
}

#[test]
fn verify_passes_on_the_hook() {
    let out = hecke(&["verify", "--lambda", "2,1"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["all_ok"], true);
}

#[test]
fn verify_with_seeded_sample_and_q0_is_deterministic() {
    let args = [
        "verify", "--lambda", "3,1", "--gamma-samples", "8", "--seed", "11", "--q0", "3",
    ];
    let a = hecke(&args);
    let b = hecke(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc = json_of(&a);
    assert_eq!(doc["all_ok"], true);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.last().unwrap()["name"], "commutant is scalar at q0");
}

#[test]
fn matrices_output_is_byte_identical_across_runs() {
    let args = ["matrices", "--lambda", "3,2", "--mu", "2"];
    let a = hecke(&args);
    let b = hecke(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc = json_of(&a);
    assert_eq!(doc["dim"], 3);
    assert_eq!(doc["t"].as_object().unwrap().len(), 2);
    assert_eq!(doc["x"].as_object().unwrap().len(), 3);
}

#[test]
fn char_agrees_with_border_strips() {
    let out = hecke(&["char", "--lambda", "2", "--beta", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "{\"beta\":[2],\"borderstrip\":{\"1\":\"1\"},\"match\":true,\
         \"trace\":{\"den\":{\"0\":\"1\"},\"num\":{\"1\":\"1\"},\"scale\":1}}\n"
    );
}

#[test]
fn tau_and_garnir_pass_on_a_skew_shape() {
    let out = hecke(&["tau", "--lambda", "3,2", "--mu", "2"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["all_ok"], true);
    let out = hecke(&["garnir", "--lambda", "2,2"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["all_ok"], true);
    assert_eq!(doc["column_relation"], true);
    assert!(!doc["snakes"].as_array().unwrap().is_empty());
}

#[test]
fn induce_reports_both_gluings() {
    let out = hecke(&[
        "induce", "--lambda", "1", "--phi-lambda", "1", "--phi-contents", "1",
    ]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["all_ok"], true);
    assert_eq!(doc["vertical"]["shape"], "(1,1)");
    assert_eq!(doc["horizontal"]["shape"], "(2)");
}

#[test]
fn ribbons_counts_match_the_decomposition() {
    let out = hecke(&["ribbons", "--n", "3"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["count"], 4);
    assert_eq!(doc["total_tableaux"], 6);
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("hecke-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("restrict.json");
    let out = hecke(&[
        "restrict", "--lambda", "2,2", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["tableaux"],
        &["verify", "--lambda", "4,3"],
        &["ribbons", "--n", "8"],
        &["char", "--lambda", "2,1", "--beta", "2,2"],
        &["verify", "--lambda", "2,1", "--contents", "0,0,0"],
        &["restrict", "--lambda", "2,1", "--mu", "3"],
        &["induce", "--lambda", "1", "--phi-lambda", "1"],
        &["verify", "--lambda", "2,1", "--q0", "0"],
    ];
    for args in cases {
        let out = hecke(args);
        assert_eq!(out.status.code(), Some(2), "args {:?}", args);
    }
}

#[test]
fn suite_runs_every_criterion() {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .arg("suite")
        .env("HECKE_SUITE_THREADS", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["criteria"].as_array().unwrap().len(), 12);
}
