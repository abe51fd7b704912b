//! End-to-end tests driving the binary with real argv and asserting
//! exit codes and output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn locdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("locdom-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("writable temp dir");
    path
}

#[test]
fn solve_family_path() {
    let out = locdom(&["solve", "--family", "path", "--n", "7", "--kind", "SLD"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("value: 4"));

    let json = locdom(&[
        "solve", "--family", "path", "--n", "7", "--kind", "SLD", "--format", "json",
    ]);
    assert_eq!(code(&json), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(doc["value"], 4);
    assert_eq!(doc["method"], "branch_and_bound");

    // byte-deterministic for fixed inputs
    let again = locdom(&[
        "solve", "--family", "path", "--n", "7", "--kind", "SLD", "--format", "json",
    ]);
    assert_eq!(json.stdout, again.stdout);
}

#[test]
fn verify_codes_and_exit_codes() {
    // {b,d,f} is locating-dominating on the six-vertex example
    let g6 = "EkSg";
    let yes = locdom(&["verify", g6, "--code", "1,3,5", "--kind", "LD"]);
    assert_eq!(code(&yes), 0, "{}", String::from_utf8_lossy(&yes.stderr));
    assert_eq!(stdout(&yes).trim(), "true");
    // but not self-locating-dominating
    let no = locdom(&["verify", g6, "--code", "1,3,5", "--kind", "SLD"]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no).trim(), "false");
    // empty code list is a usage error
    let usage = locdom(&["verify", g6, "--code", "", "--kind", "LD"]);
    assert_eq!(code(&usage), 2);
    // unknown kind is a usage error
    let usage = locdom(&["verify", g6, "--code", "1", "--kind", "XXL"]);
    assert_eq!(code(&usage), 2);
}

#[test]
fn params_reports_pass() {
    let out = locdom(&["params", "--family", "cycle", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("gamma_sld: 3"));
    assert!(text.contains("dilworth: 5"));
}

#[test]
fn construct_verifies_and_rejects_infeasible() {
    let ok = locdom(&["construct", "realize-ld-sld", "2", "4", "--verify"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("claim GammaSld = 4"));

    let infeasible = locdom(&["construct", "realize-ld-sld", "2", "6"]);
    assert_eq!(code(&infeasible), 2);
    assert!(String::from_utf8_lossy(&infeasible.stderr).contains("infeasible"));

    let unknown = locdom(&["construct", "moebius", "3"]);
    assert_eq!(code(&unknown), 2);

    let json = locdom(&["construct", "sperner-extremal", "3", "--verify", "--format", "json"]);
    assert_eq!(code(&json), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(doc["order"], 6);
}

#[test]
fn sweep_sources() {
    let all = locdom(&["sweep", "--all-graphs", "4"]);
    assert_eq!(code(&all), 0);
    assert!(stdout(&all).contains("graphs checked: 64"));

    let parallel = locdom(&["sweep", "--all-graphs", "4", "--jobs", "4", "--keep-going", "--format", "json"]);
    assert_eq!(code(&parallel), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&parallel)).unwrap();
    assert_eq!(doc["graphs_checked"], 64);
    assert_eq!(doc["failures"].as_array().unwrap().len(), 0);

    let file = scratch_file("sweep.g6", "# fixtures\nA_\nDhc\nEkSg\n");
    let from_file = locdom(&["sweep", file.to_str().unwrap()]);
    assert_eq!(code(&from_file), 0);
    assert!(stdout(&from_file).contains("graphs checked: 3"));
    std::fs::remove_file(file).ok();

    let trees = locdom(&["sweep", "--trees", "6"]);
    assert_eq!(code(&trees), 0);

    let missing = locdom(&["sweep"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn simulate_scenario() {
    let scenario = r#"{"graph6": "EkSg", "code": [1, 3, 5], "faults": [0, 2]}"#;
    let path = scratch_file("scenario.json", scenario);
    let out = locdom(&["simulate", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["outcome"]["located"], 4);
    std::fs::remove_file(path).ok();
}

#[test]
fn closed_forms() {
    let out = locdom(&["closed-form", "ladder", "5", "SLD"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "6");

    let out = locdom(&["closed-form", "complete-product", "6", "3", "SLD"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "6");

    // not covered by any result: refuse rather than guess
    let out = locdom(&["closed-form", "cycle", "4", "SLD"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&locdom(&["frobnicate"])), 2);
    assert_eq!(code(&locdom(&["solve", "--kind", "SLD"])), 2);
    assert_eq!(code(&locdom(&["--help"])), 0);
}

#[test]
fn edge_list_fixture_files() {
    // hand-written fixture: the 4-path as an "n m" + edges file
    let path = scratch_file("fixture.el", "# path on four vertices\n4 3\n0 1\n1 2\n2 3\n");
    let out = locdom(&["solve", path.to_str().unwrap(), "--kind", "DLD"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("value: 2"));
    std::fs::remove_file(path).ok();
}

#[test]
fn solver_cap_refusal() {
    let out = locdom(&["solve", "--family", "path", "--n", "25", "--kind", "DLD"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cap"), "{err}");
}
