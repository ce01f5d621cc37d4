//! Drive the binary end to end: flag surface, file formats, exit codes,
//! and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_opxlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("opxlab_test_{}_{name}", std::process::id()));
    p
}

#[test]
fn recur_single_large_matches_the_chain() {
    let csv = stdout(&["recur", "--seq", "preset:single_large", "--nmax", "5"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "n,kind,coeff_index,re,im,omega,epsilon");
    // Phi_5 = z^5 - 2 z^4: leading 1, next -2, omega_5 = -3, epsilon -1
    let phi5: Vec<&str> = csv
        .lines()
        .filter(|l| l.starts_with("5,phi,"))
        .collect();
    assert_eq!(phi5.len(), 6);
    let row4: Vec<&str> = phi5[4].split(',').collect();
    assert_eq!(row4[2], "4");
    assert!((row4[3].parse::<f64>().unwrap() + 2.0).abs() < 1e-15);
    let row5: Vec<&str> = phi5[5].split(',').collect();
    assert!((row5[3].parse::<f64>().unwrap() - 1.0).abs() < 1e-15);
    assert!((row5[5].parse::<f64>().unwrap() + 3.0).abs() < 1e-12);
    assert_eq!(row5[6], "-1");
}

#[test]
fn recur_zero_sequence_is_monomials() {
    let csv = stdout(&["recur", "--seq", "preset:classical_zero", "--nmax", "4"]);
    for line in csv.lines().skip(1).filter(|l| l.contains(",phi,")) {
        let cells: Vec<&str> = line.split(',').collect();
        let n: usize = cells[0].parse().unwrap();
        let k: usize = cells[2].parse().unwrap();
        let re: f64 = cells[3].parse().unwrap();
        assert_eq!(re, if k == n { 1.0 } else { 0.0 });
        assert_eq!(cells[4].parse::<f64>().unwrap(), 0.0);
    }
}

#[test]
fn recur_appended_geronimus_is_real() {
    let csv = stdout(&["recur", "--seq", "preset:appended_geronimus", "--nmax", "10"]);
    for line in csv.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[4].parse::<f64>().unwrap(), 0.0, "imaginary part in {line}");
    }
}

#[test]
fn szego_values_match_closed_forms() {
    let csv = stdout(&["szego", "--seq", "preset:single_large", "--z", "0,0"]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let d = row[2].parse::<f64>().unwrap();
    assert!((d - 3.0f64.sqrt() / 2.0).abs() < 1e-9, "D(0) = {d}");

    let csv = stdout(&["szego", "--seq", "preset:classical_zero", "--z", "0.3,0.1"]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert!((row[2].parse::<f64>().unwrap() - 1.0).abs() < 1e-10);
    assert!(row[3].parse::<f64>().unwrap().abs() < 1e-10);

    let csv = stdout(&["szego", "--seq", "preset:appended_geronimus", "--z", "0,0"]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let s = 2.0f64.sqrt();
    let expect = 7.0f64.sqrt() / ((2.0 * s + 1.0) * (4.0 - 2.0 * s).sqrt());
    assert!((row[2].parse::<f64>().unwrap() - expect).abs() < 1e-7);
}

#[test]
fn map_emits_recurrence_data() {
    let csv = stdout(&["map", "--seq", "preset:single_large", "--nmax", "20"]);
    let row1: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row1[0], "1");
    assert!((row1[1].parse::<f64>().unwrap() - 4.0).abs() < 1e-14);
    assert!((row1[2].parse::<f64>().unwrap() + 6.0).abs() < 1e-14);
    assert_eq!(row1[3], "1");
    let row2: Vec<&str> = csv.lines().nth(2).unwrap().split(',').collect();
    assert!((row2[1].parse::<f64>().unwrap() + 2.0).abs() < 1e-14);
    assert_eq!(row2[3], "-1");

    let csv = stdout(&["map", "--seq", "preset:classical_zero", "--nmax", "6"]);
    let row1: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row1[1].parse::<f64>().unwrap(), 0.0);
    assert_eq!(row1[2].parse::<f64>().unwrap(), 2.0);
    let row3: Vec<&str> = csv.lines().nth(3).unwrap().split(',').collect();
    assert_eq!(row3[2].parse::<f64>().unwrap(), 1.0);

    // appended sequence: c_20 within 1e-6 of 1
    let csv = stdout(&["map", "--seq", "preset:appended_geronimus", "--nmax", "20"]);
    let row20: Vec<&str> = csv.lines().nth(20).unwrap().split(',').collect();
    assert_eq!(row20[0], "20");
    assert!((row20[2].parse::<f64>().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn map_writes_p_coefficients_next_to_the_table() {
    let out = tmp("map.csv");
    let status = bin()
        .args([
            "map",
            "--seq",
            "preset:single_large",
            "--nmax",
            "6",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let sibling = out.with_file_name(format!(
        "{}_pcoeffs.csv",
        out.file_stem().unwrap().to_string_lossy()
    ));
    let text = std::fs::read_to_string(&sibling).unwrap();
    // P_1 = x - 4
    assert!(text.lines().any(|l| {
        let c: Vec<&str> = l.split(',').collect();
        c.len() == 3 && c[0] == "1" && c[1] == "0" && c[2].parse::<f64>() == Ok(-4.0)
    }));
    let _ = std::fs::remove_file(out);
    let _ = std::fs::remove_file(sibling);
}

#[test]
fn verify_examples_suite_passes() {
    let out = run(&["verify", "--suite", "examples"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("check_id,"));
    assert!(text.contains("c01_ex1_chain,examples,pass"));
}

#[test]
fn verify_json_report_carries_provenance() {
    let out = run(&["verify", "--suite", "map", "--format", "json", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["config"]["suite"], "map");
    assert_eq!(doc["config"]["seed"], 3);
    assert!(doc["version"].as_str().is_some());
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn empty_sequence_file_exits_2() {
    let path = tmp("empty.json");
    std::fs::write(&path, "").unwrap();
    let out = run(&["recur", "--seq", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn unimodular_sequence_exits_2() {
    let path = tmp("unimodular.json");
    std::fs::write(
        &path,
        r#"{"alphas": [[1.0, 0.0]], "tail": {"type": "zero", "m": 1}}"#,
    )
    .unwrap();
    let out = run(&["recur", "--seq", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unimodular"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn bad_flags_exit_2() {
    let out = run(&["recur", "--seq", "preset:no_such_preset"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["recur", "--seq", "preset:single_large", "--nmax", "500"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["recur", "--seq", "preset:single_large", "--grid", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_config_gives_identical_bytes() {
    let a = stdout(&[
        "recur",
        "--seq",
        "preset:random_szego",
        "--seed",
        "17",
        "--nmax",
        "12",
    ]);
    let b = stdout(&[
        "recur",
        "--seq",
        "preset:random_szego",
        "--seed",
        "17",
        "--nmax",
        "12",
    ]);
    assert_eq!(a, b);

    let a = stdout(&["verify", "--suite", "examples", "--seed", "5"]);
    let b = stdout(&["verify", "--suite", "examples", "--seed", "5"]);
    assert_eq!(a, b);
}

#[test]
fn sequence_file_round_trips_through_recur() {
    let path = tmp("seq.json");
    std::fs::write(
        &path,
        r#"{"alphas": [[0.4, 0.1], [1.5, 0.0]], "tail": {"type": "zero", "m": 2}}"#,
    )
    .unwrap();
    let csv = stdout(&["recur", "--seq", path.to_str().unwrap(), "--nmax", "4"]);
    // Phi_1 = z - conj(alpha_0): constant coefficient -0.4 + 0.1i
    let row: Vec<&str> = csv
        .lines()
        .find(|l| l.starts_with("1,phi,0,"))
        .unwrap()
        .split(',')
        .collect();
    assert!((row[3].parse::<f64>().unwrap() + 0.4).abs() < 1e-15);
    assert!((row[4].parse::<f64>().unwrap() - 0.1).abs() < 1e-15);
    let _ = std::fs::remove_file(path);
}

#[test]
fn thread_cap_env_is_respected() {
    let out = bin()
        .args(["verify", "--suite", "examples"])
        .env("OPXLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
