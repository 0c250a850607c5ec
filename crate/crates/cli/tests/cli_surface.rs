//! Spot checks of the command-line surface: exit codes, probe traces,
//! factor output.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_amitsur"))
}

fn config_path(name: &str) -> String {
    format!("{}/../../configs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn malformed_config_exits_1() {
    let path = std::env::temp_dir().join("malformed_config.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = bin()
        .args(["verify", "-c", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Unknown fields are rejected too.
    std::fs::write(
        &path,
        r#"{"p":3,"modulus":["-1","-2","1","1"],"sigma":["-2","0","1"],"beta":"2","bogus":1}"#,
    )
    .unwrap();
    let out = bin()
        .args(["verify", "-c", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Missing file.
    let out = bin()
        .args(["verify", "-c", "/nonexistent/config.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn probe_command_traces() {
    let config = config_path("p3_division.json");
    // y − i enlarges to the unit ideal.
    let out = bin()
        .args(["probe", "-c", &config, "--element", "y - i"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let trace = stdout_json(&out);
    assert_eq!(trace["outcome"], "UNIT_IDEAL");
    // f is a member.
    let out = bin()
        .args(["probe", "-c", &config, "--element", "x^3+x^2-2*x-1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["outcome"], "MEMBER");
    // x − i descends through one commutator step.
    let out = bin()
        .args(["probe", "-c", &config, "--element", "x - i"])
        .output()
        .unwrap();
    let trace = stdout_json(&out);
    assert_eq!(trace["outcome"], "UNIT_IDEAL");
    assert_eq!(trace["gcd_chain"].as_array().unwrap().len(), 1);
    // Garbage element text exits 1.
    let out = bin()
        .args(["probe", "-c", &config, "--element", "x + % y"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Probing a split instance exits 2.
    let out = bin()
        .args([
            "probe",
            "-c",
            &config_path("p3_split.json"),
            "--element",
            "y - i",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factor_command_output() {
    let out = bin()
        .args(["factor", "--rational", "x^2-1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["display"], "(x - 1)*(x + 1)");
    assert_eq!(v["irreducible"], false);

    let out = bin()
        .args(["factor", "--rational", "x^4+1"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["display"], "irreducible");
    assert_eq!(v["irreducible"], true);

    let config = config_path("p3_division.json");
    let out = bin()
        .args(["factor", "--over-fj", "-c", &config, "t^3+t^2-2*t-1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["irreducible"], true);
    assert_eq!(v["display"], "irreducible");

    // Parse failure exits 1.
    let out = bin()
        .args(["factor", "--rational", "x^^2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Missing mode exits 1.
    let out = bin().args(["factor"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_report_file_and_recheck() {
    let report_path = std::env::temp_dir().join("surface_report.json");
    let out = bin()
        .args([
            "verify",
            "-c",
            &config_path("p3_division.json"),
            "--probes",
            "3",
            "--traces",
            "--report",
            report_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .args(["recheck", "--report", report_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
