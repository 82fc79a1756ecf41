//! End-to-end checks of the `loopk` binary: exit codes, output shapes, and
//! byte-stable JSON reports.

use std::process::{Command, Output};

fn loopk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopk"))
        .args(args)
        .env_remove("LOOPK_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_small_passes_with_exit_zero() {
    let out = loopk(&["verify", "--rmax", "1", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("pass:"), "summary line missing: {text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_is_deterministic_and_well_formed() {
    let a = loopk(&[
        "verify", "--rmax", "1", "--degree", "4", "--seed", "7", "--json",
    ]);
    let b = loopk(&[
        "verify", "--rmax", "1", "--degree", "4", "--seed", "7", "--json",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "same seed must give identical bytes");
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid JSON");
    assert_eq!(report["pass"], serde_json::json!(true));
    assert_eq!(report["params"]["seed"], serde_json::json!(7));
    assert!(report["version"].is_string());
    let suite = report["suite"].as_array().expect("suite array");
    assert!(
        suite.len() >= 60,
        "expected 60+ records, got {}",
        suite.len()
    );
    for record in suite {
        assert_eq!(record["status"], serde_json::json!("pass"));
        assert!(record["check"].is_string());
        assert!(record["params"].is_object());
    }
}

#[test]
fn seed_env_var_is_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_loopk"))
        .args(["verify", "--rmax", "1", "--degree", "4", "--json"])
        .env("LOOPK_SEED", "31")
        .output()
        .expect("binary runs");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["params"]["seed"], serde_json::json!(31));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    // parameter validation
    assert_eq!(loopk(&["verify", "--rmax", "0"]).status.code(), Some(2));
    // coefficient outside the ring
    let out = loopk(&["reduce", "--ring", "kg", "--n", "2", "b*L1"]);
    assert_eq!(out.status.code(), Some(2));
    // syntax error
    let out = loopk(&["reduce", "--ring", "kg", "--n", "2", "1 + * 2"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown generator
    let out = loopk(&["reduce", "--ring", "kg", "--n", "2", "L3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_applies_the_quadratic_relation() {
    let out = loopk(&["reduce", "--ring", "kg", "--n", "2", "L1*L1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "v*L1 - 1");
}

#[test]
fn istar_matrix_and_application() {
    let out = loopk(&["istar", "--ring", "kg", "--rmax", "1"]);
    assert_eq!(stdout(&out).trim(), "[1, v, 1]");
    let out = loopk(&["istar", "--ring", "kg", "--rmax", "1", "s1 - v*s0"]);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn kernel_r1() {
    let out = loopk(&["kernel", "--ring", "kg", "--rmax", "1"]);
    let text = stdout(&out);
    assert!(text.contains("K1 = -v*s0 + s1"), "{text}");
    assert!(text.contains("K2 = s0 - s2"), "{text}");
}

#[test]
fn limit_builds_compatible_tower() {
    let out = loopk(&["limit", "--rmax", "2", "--json", "s2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["compatible"], serde_json::json!(true));
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    assert_eq!(levels[1], serde_json::json!(["1", "v", "1"]));
}

#[test]
fn chern_of_kernel_element_is_p_times_sb1() {
    let out = loopk(&[
        "chern",
        "--ring",
        "kg",
        "--rmax",
        "1",
        "--degree",
        "2",
        "s1 - v*s0",
    ]);
    let text = stdout(&out);
    assert_eq!(
        text.trim(),
        "(1 + 1/6*t + 1/120*t^2 + O(t^3))*L1 + (1 + 1/6*t + 1/120*t^2 + O(t^3))*L2"
    );
}

#[test]
fn gamma_suite_passes() {
    let out = loopk(&["gamma", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass:"));
}
