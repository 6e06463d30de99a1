use std::path::Path;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poisson-di"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut rows = csv.lines();
    let header: Vec<&str> = rows.next().unwrap().split(',').collect();
    let k = header.iter().position(|&h| h == name).unwrap();
    rows.map(|r| r.split(',').nth(k).unwrap().parse().unwrap()).collect()
}

#[test]
fn construct_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for p in &paths {
        let args = ["construct", "--n", "4", "--b", "0.5", "--p-max", "1", "--p-ave", "1", "--seed", "7"];
        let mut args: Vec<&str> = args.to_vec();
        args.extend(["--out", p.to_str().unwrap()]);
        stdout(&args);
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    assert!(String::from_utf8(a).unwrap().starts_with("{\"schema_version\":1,"));
}

#[test]
fn rate_curve_achievable_below_converse() {
    let csv = stdout(&["sweep", "rate-curve", "--n", "1024,4096,16384", "--b", "0.1"]);
    let lo = column(&csv, "achievable_rate");
    let hi = column(&csv, "converse_rate");
    assert_eq!(lo.len(), 3);
    assert!(lo.iter().zip(&hi).all(|(l, h)| l < h));
    assert_eq!(column(&csv, "n"), vec![1024.0, 4096.0, 16384.0]);
}

#[test]
fn martinez_bound_is_a_single_json_row() {
    let json = stdout(&["bounds", "--name", "martinez_ub", "--p-ave", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["schema_version"], 1);
    assert_eq!(rows[0]["name"], "martinez_ub");
    let value = rows[0]["value"].as_f64().unwrap();
    assert!((value - 0.9789).abs() < 1e-3, "{value}");
}

fn error_kind(args: &[&str]) -> String {
    let out = bin(args);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["schema_version"], 1);
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn module_errors_exit_one_with_a_record() {
    assert_eq!(error_kind(&["bounds", "--name", "aminian_covariance_ub"]), "NotImplemented");
    assert_eq!(error_kind(&["bounds", "--name", "fading_perfect_csi"]), "NotImplemented");
    assert_eq!(error_kind(&["bounds", "--name", "shannon"]), "UnknownBound");
    assert_eq!(
        error_kind(&["construct", "--n", "2", "--b", "0.5", "--radius", "3", "--construction", "lattice"]),
        "UnpackableGeometry"
    );
    assert_eq!(error_kind(&["construct", "--n", "2,3", "--b", "0.5"]), "Usage");
}

#[test]
fn validate_reads_without_mutating() {
    let dir = tempfile::tempdir().unwrap();
    let cb = dir.path().join("cb.json");
    stdout(&["construct", "--n", "3", "--b", "0.5", "--radius", "0.2", "--out", cb.to_str().unwrap()]);
    let before = std::fs::read(&cb).unwrap();
    let csv = stdout(&["validate", "--codebook", cb.to_str().unwrap(), "--lambda", "1"]);
    assert!(csv.contains(",true,true,0,0,0,true,"), "{csv}");
    assert_eq!(column(&csv, "lambda"), vec![1.0]);
    let v = column(&csv, "converse_violations")[0];
    assert!(v >= 0.0 && v.fract() == 0.0);
    assert_eq!(error_kind(&["validate", "--codebook", cb.to_str().unwrap(), "--out", cb.to_str().unwrap()]), "Usage");
    assert_eq!(before, std::fs::read(&cb).unwrap());
    assert_eq!(error_kind(&["validate", "--codebook", "/nonexistent/cb.json"]), "Io");
}

#[test]
fn simulate_emits_type1_then_type2_rows() {
    let csv = stdout(&[
        "simulate", "--n", "8", "--b", "0.5", "--radius", "0.4", "--trials", "200", "--pairs", "3", "--seed", "5",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1].contains(",type1,"));
    assert!(lines[2..].iter().all(|l| l.contains(",type2,")));
    assert!(csv.ends_with('\n') && !csv.contains('\r'));
    assert_eq!(column(&csv, "trials"), vec![200.0; 4]);
}

#[test]
fn bound_sweep_walks_the_axis() {
    let csv = stdout(&["sweep", "bound", "--name", "aminian_peak_ub", "--lambda", "1", "--p-max", "4", "--axis", "p-ave", "--values", "0.5,2,4"]);
    let v = column(&csv, "value");
    assert_eq!(column(&csv, "axis_value"), vec![0.5, 2.0, 4.0]);
    // both branches meet at P_ave = P_max/2 and the upper branch is flat
    assert_eq!(v[1], v[2]);
    assert!(v[0] < v[1]);
    assert!(Path::new(env!("CARGO_BIN_EXE_poisson-di")).exists());
}
