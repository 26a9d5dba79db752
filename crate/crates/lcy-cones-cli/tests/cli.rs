//! End-to-end checks of the command-line interface: exit codes, output
//! stability and the model round trip through standard input.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lcy-cones"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn family_emits_model_json() {
    let out = run(&["family", "3", "1", "1", "1"]);
    assert!(out.status.success());
    let model: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(model["n"], 3);
    assert_eq!(model["curves"].as_array().unwrap().len(), 7);
    assert_eq!(model["basis_labels"].as_array().unwrap().len(), 4);
}

#[test]
fn family_output_is_byte_stable() {
    let a = run(&["family", "5", "2", "1", "1", "2", "1"]);
    let b = run(&["family", "5", "2", "1", "1", "2", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn model_round_trips_into_verify_stdin() {
    let model = run(&["family", "4", "1", "2", "1", "1"]);
    assert!(model.status.success());

    let mut child = bin()
        .args(["verify", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(&model.stdout)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = reports[0]["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .all(|c| c["status"] == "pass" || c["status"] == "flagged"));
}

#[test]
fn verify_single_model_exit_codes() {
    let out = run(&["verify", "--n", "6", "--p", "1", "1", "1", "1", "1", "1"]);
    assert!(out.status.success());

    // Usage error: depth vector of the wrong length.
    let out = run(&["verify", "--n", "3", "--p", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nef_cone_of_m3() {
    let out = run(&["nef", "--n", "3", "--p", "1", "1", "1"]);
    assert!(out.status.success());
    let cone: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cone["ambient_rank"], 4);
    let rays = cone["rays"].as_array().unwrap();
    assert_eq!(rays.len(), 4);
    // Decimal-string coordinates.
    assert_eq!(rays[3], serde_json::json!(["1", "0", "0", "0"]));
}

#[test]
fn dual_basis_lists_integral_duals() {
    let out = run(&["dual-basis", "--n", "1", "--p", "3"]);
    assert!(out.status.success());
    let entries: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let f = entries
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["label"] == "F")
        .unwrap();
    assert_eq!(f["coords"], serde_json::json!(["1", "0", "0", "0"]));
    assert_eq!(f["integral"], true);
}

#[test]
fn reduce_on_chamber_point_is_identity() {
    let out = run(&["reduce", "--n", "3", "--p", "1", "1", "1", "--", "1", "0", "0", "0"]);
    assert!(out.status.success());
    let trace: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(trace["word"].as_array().unwrap().len(), 0);
    assert_eq!(trace["iterations"], 0);
}

#[test]
fn sigma_violation_exits_nonzero() {
    // x = s_F(H) = H + F pairs negatively with F, so the reflection word is
    // a witness and the exit code signals the failed check.
    let out = run(&[
        "sigma", "--n", "3", "--p", "1", "1", "1", "--radius", "2", "--", "4", "-1", "-1", "-1",
        "2", "-1", "-1", "-1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let result: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(result["witness"], serde_json::json!(["F"]));
}

#[test]
fn mds_certificate_shape() {
    let out = run(&["mds", "1", "3"]);
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["picard_structure"], true);
    assert_eq!(cert["curve_rays"].as_array().unwrap().len(), 5);
}

#[test]
fn rank_guard_blocks_large_models() {
    let out = bin()
        .args(["nef", "--n", "6", "--p", "2", "2", "2", "2", "2", "2"])
        .env("LCY_CONES_MAX_RANK", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("LCY_CONES_MAX_RANK"));
}
