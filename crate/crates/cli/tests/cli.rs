use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locc-lab")).args(args).env_remove("LOCC_LAB_TOL").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("locc-lab-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn bennett_is_indistinguishable() {
    let out = run(&["analyze", "--builtin", "bennett9"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("stuck: {psi1, psi2, psi3, psi4, psi5, psi6, psi7, psi8, psi9}"));
}

#[test]
fn pinwheel_3x4_splits_into_four_parts() {
    let out = run(&["analyze", "--builtin", "paper3x4", "--format", "json"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["partition"].as_array().unwrap().len(), 4);
    assert_eq!(v["class"], "quantum_quantum");
    assert_eq!(v["tree"]["action"], "measure_b");
}

#[test]
fn product_basis_is_distinguishable() {
    let out = run(&["analyze", "--builtin", "product3x3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["class"], "classical_classical");
    assert_eq!(v["class_guarantees_distinguishable"], true);
    assert_eq!(v["partition"].as_array().unwrap().len(), 9);
}

#[test]
fn json_reports_are_byte_deterministic() {
    for args in [
        &["analyze", "--builtin", "paper3x4", "--format", "json"][..],
        &["analyze", "--random", "3x4", "--seed", "42", "--format", "json"][..],
        &["oracle", "--random", "3x3", "--count", "5", "--seed", "9", "--format", "json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn quantumness_of_reference_triple() {
    let out = run(&["quantumness", "--builtin", "paper3x4", "--indices", "0,5,7", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let total = json(&out)["total"].as_f64().unwrap();
    assert!((total - (2.0 + 3f64.sqrt() / 2.0)).abs() < 1e-9);
    assert!((total - 2.87).abs() < 5e-3);
}

#[test]
fn quantumness_of_orthonormal_list_is_zero() {
    let out = run(&["quantumness", "--builtin", "product3x3", "--indices", "0,3,6", "--format", "json"]);
    assert_eq!(json(&out)["total"].as_f64().unwrap(), 0.0);
}

#[test]
fn quantumness_of_rho_x_peak() {
    let x = std::f64::consts::FRAC_1_SQRT_2.to_string();
    let out = run(&["quantumness", "--rho-x", &x, "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert!((json(&out)["total"].as_f64().unwrap() - 1.0 / 9.0).abs() < 1e-9);
}

#[test]
fn quantumness_reads_semi_classical_documents() {
    let path = scratch("qc.json");
    std::fs::write(&path, r#"{"blocks":[[[[0.5,0],[0,0]],[[0,0],[0,0]]],[[[0.25,0],[0.25,0]],[[0.25,0],[0.25,0]]]]}"#)
        .unwrap();
    let out = run(&["quantumness", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    // [P0/2, P+/2]: trace norm 1/4
    assert!((json(&out)["total"].as_f64().unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn curve_endpoints_and_peak() {
    let out = run(&["curve", "--samples", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "x,N");
    assert_eq!(rows.len(), 4);
    for (row, x) in rows[1..].iter().zip([0.0, 0.5, 1.0]) {
        let (rx, rn) = row.split_once(',').unwrap();
        assert!((rx.parse::<f64>().unwrap() - x).abs() < 1e-12);
        let want = 2.0 / 9.0 * x * (1.0f64 - x * x).sqrt();
        assert!((rn.parse::<f64>().unwrap() - want).abs() < 1e-11);
    }
}

#[test]
fn curve_written_to_file() {
    let path = scratch("curve.csv");
    let out = run(&["curve", "--samples", "1001", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (x, n) = l.split_once(',').unwrap();
            (x.parse().unwrap(), n.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 1001);
    for &(x, n) in &rows {
        assert!((n - 2.0 / 9.0 * x * (1.0 - x * x).max(0.0).sqrt()).abs() < 1e-11);
    }
    let peak = rows.iter().copied().fold((0.0, f64::MIN), |b, r| if r.1 > b.1 { r } else { b });
    assert!((peak.0 - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-3);
}

#[test]
fn curve_needs_two_samples() {
    assert_eq!(code(&run(&["curve", "--samples", "1"])), 1);
}

#[test]
fn oracle_agrees_on_builtins() {
    let out = run(&["oracle", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["items"].as_array().unwrap().len(), 4);
}

#[test]
fn oracle_two_by_three_sweep() {
    let out = run(&["oracle", "--random", "2x3", "--count", "100", "--seed", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["agreements"], 100);
    assert_eq!(v["indistinguishable"], 0);
}

#[test]
fn oracle_two_by_two_never_indistinguishable() {
    let out = run(&["oracle", "--random", "2x2", "--count", "60", "--depth", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["indistinguishable"], 0);
}

#[test]
fn oracle_rejects_oversized_sets() {
    let out = run(&["oracle", "--random", "4x5"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn exported_corpus_round_trips_through_input() {
    let path = scratch("paper3x4.json");
    let out = run(&["examples", "--builtin", "paper3x4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let analyzed = run(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&analyzed), 2);
    assert_eq!(json(&analyzed)["partition"].as_array().unwrap().len(), 4);
}

#[test]
fn examples_lists_names() {
    let out = run(&["examples"]);
    assert_eq!(stdout(&out), "bennett9\npaper3x4\nproduct3x3\ndominoes2xN\n");
}

#[test]
fn errors_exit_with_one() {
    assert_eq!(code(&run(&["analyze", "--builtin", "nope"])), 1);
    assert_eq!(code(&run(&["analyze"])), 1);
    assert_eq!(code(&run(&["analyze", "--bogus"])), 1);
    assert_eq!(code(&run(&["analyze", "--builtin", "bennett9", "--tol", "0"])), 1);
    assert_eq!(code(&run(&["analyze", "--builtin", "bennett9", "--input", "x.json"])), 1);
    let missing = run(&["analyze", "--input", "/nonexistent/set.json"]);
    assert_eq!(code(&missing), 1);
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error: cannot read"));
}

#[test]
fn invalid_documents_are_diagnosed() {
    let path = scratch("bad.json");
    std::fs::write(
        &path,
        r#"{"dims":[2,2],"complete":false,"states":[
            {"label":"u","a":[[1,0],[0,0]],"b":[[1,0],[0,0]]},
            {"label":"v","a":[[1,0],[0,0]],"b":[[0.6,0],[0.8,0]]}]}"#,
    )
    .unwrap();
    let out = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn tolerance_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_locc-lab"))
        .args(["analyze", "--builtin", "bennett9", "--format", "json"])
        .env("LOCC_LAB_TOL", "1e-6")
        .output()
        .unwrap();
    assert_eq!(json(&out)["tol"].as_f64().unwrap(), 1e-6);
    let flag = Command::new(env!("CARGO_BIN_EXE_locc-lab"))
        .args(["analyze", "--builtin", "bennett9", "--format", "json", "--tol", "1e-7"])
        .env("LOCC_LAB_TOL", "1e-6")
        .output()
        .unwrap();
    assert_eq!(json(&flag)["tol"].as_f64().unwrap(), 1e-7);
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(code(&run(&["--help"])), 0);
}
