//! End-to-end checks of the command-line surface: output values, JSON
//! round-trips, exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_friezeforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn rho_single_arc() {
    let config = fixture("octagon.json");
    let config = config.to_str().unwrap();

    let out = run(&["rho", "--config", config, "--arc", "4,6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(1+vz)/z");

    let out = run(&["rho", "--config", config, "--arc", "2,5"]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&["rho", "--config", config, "--arc", "4,6", "--method", "both"]);
    assert!(stdout(&out).contains("agree:  true"));
}

#[test]
fn rho_all_json_round_trips() {
    let config = fixture("octagon.json");
    let out = run(&["rho", "--config", config.to_str().unwrap(), "--all", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    // canonical ordering: re-serializing is byte-identical
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim());
    let entries = value["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 20);
    assert!(entries.iter().any(|e| e["arc"] == serde_json::json!([4, 6])
        && e["display"] == serde_json::json!("(1+vz)/z")));
}

#[test]
fn pi_values_and_grid() {
    let config = fixture("octagon.json");
    let config = config.to_str().unwrap();

    let out = run(&["pi", "--config", config, "--arc", "4,6"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = run(&["pi", "--config", config, "--arc", "2,7"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["pi", "--config", config, "--arc", "3,8"]);
    assert_eq!(stdout(&out).trim(), "3");

    // the π grid is itself a generalized frieze
    let out = run(&["pi", "--config", config, "--all", "--format", "grid"]);
    assert!(out.status.success());
    let dir = tempfile::tempdir().unwrap();
    let grid_path = dir.path().join("pi_grid.txt");
    std::fs::write(&grid_path, stdout(&out)).unwrap();
    let check = run(&["frieze-check", "--file", grid_path.to_str().unwrap(), "--generalized"]);
    assert!(check.status.success(), "{}", stdout(&check));
}

#[test]
fn verify_octagon_config() {
    let config = fixture("octagon.json");
    let out = run(&["verify", "--config", config.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_small_enumeration() {
    let out = run(&["verify", "--enumerate", "3", "--suite", "friezes,multiplication"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn corrupted_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{ "n": 5, "R": [[2,5],[3,6]], "S": [], "epsilon": {} }"#,
    )
    .unwrap();
    let out = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("R not a dissection"));
}

#[test]
fn frieze_check_fixture_and_perturbation() {
    let out = run(&["frieze-check", "--file", fixture("a7_frieze.txt").to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    let text = std::fs::read_to_string(fixture("a7_frieze.txt")).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perturbed.txt");
    std::fs::write(&path, text.replacen(" 2 ", " 3 ", 1)).unwrap();
    let out = run(&["frieze-check", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL at diamond"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["rho", "--config", "/nonexistent.json", "--arc", "1,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["rho"]);
    assert_eq!(out.status.code(), Some(2));
}
