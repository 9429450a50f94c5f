use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use subdiv::io::parse_points;
use subdiv_core::Boundary;

fn subdiv(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subdiv"))
        .args(args)
        .current_dir(cwd)
        .env_remove("SUBDIV_OUT_DIR")
        .output()
        .unwrap()
}

fn square(dir: &Path) {
    fs::write(dir.join("in.csv"), "0,0\n1,0\n1,1\n0,1\n").unwrap();
}

#[test]
fn refine_writes_curve_files() {
    let dir = tempfile::tempdir().unwrap();
    square(dir.path());
    let out = subdiv(&["refine", "--rho", "2", "--iters", "5", "--boundary", "closed", "in.csv", "out/"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let curve = parse_points(&fs::read(dir.path().join("out/curve.csv")).unwrap(), Boundary::Closed).unwrap();
    assert_eq!(curve.len(), 4 * 32);
    let svg = fs::read_to_string(dir.path().join("out/curve.svg")).unwrap();
    assert!(svg.contains(" Z\""));
    assert!(!dir.path().join("out/diagnostics.csv").exists());
}

#[test]
fn diagnose_adds_report() {
    let dir = tempfile::tempdir().unwrap();
    square(dir.path());
    let out = subdiv(&["diagnose", "--iters", "3", "in.csv", "d"], dir.path());
    assert!(out.status.success());
    let report = fs::read_to_string(dir.path().join("d/diagnostics.csv")).unwrap();
    let mut lines = report.lines();
    assert_eq!(lines.next(), Some("k,mask_gap,dA_residual,quasi_residual,pert_residual,grad_norm"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn negative_rho_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    square(dir.path());
    let out = subdiv(&["refine", "--rho", "-1", "in.csv", "o"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("rho must be non-negative"));
    assert!(!dir.path().join("o").exists());
}

#[test]
fn usage_and_input_failures() {
    let dir = tempfile::tempdir().unwrap();
    square(dir.path());
    let unknown = subdiv(&["refine", "--bogus", "in.csv"], dir.path());
    assert!(!unknown.status.success());
    let missing = subdiv(&["refine", "nope.csv"], dir.path());
    assert!(!missing.status.success());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("nope.csv"));
    fs::write(dir.path().join("bad.csv"), "0,0\n1\n2,2\n3,3\n").unwrap();
    let ragged = subdiv(&["refine", "bad.csv"], dir.path());
    assert!(String::from_utf8_lossy(&ragged.stderr).contains("row 2"));
    let open_short = subdiv(&["refine", "--boundary", "open", "--iters", "3", "in.csv"], dir.path());
    assert!(!open_short.status.success());
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    square(dir.path());
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_subdiv"))
            .args(args)
            .current_dir(dir.path())
            .env("SUBDIV_OUT_DIR", "envdir")
            .status()
            .unwrap()
    };
    assert!(run(&["refine", "in.csv"]).success());
    assert!(dir.path().join("envdir/curve.csv").exists());
    assert!(run(&["refine", "in.csv", "explicit"]).success());
    assert!(dir.path().join("explicit/curve.csv").exists());
}

#[test]
fn experiment_parabola() {
    let dir = tempfile::tempdir().unwrap();
    let out = subdiv(&["experiment", "parabola", "--out", "res"], dir.path());
    assert!(out.status.success());
    let base = dir.path().join("res/parabola");
    for f in ["curve_parabola_rho0.csv", "curve_parabola_rho2.csv", "curve_parabola_rho6.csv", "curve_parabola.svg", "error_parabola.csv"] {
        assert!(base.join(f).exists(), "{f}");
    }
    let bad = subdiv(&["experiment", "rabbit"], dir.path());
    assert!(!bad.status.success());
}

#[test]
fn cli_is_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    square(dir.path());
    subdiv(&["diagnose", "in.csv", "a"], dir.path());
    subdiv(&["diagnose", "in.csv", "b"], dir.path());
    for f in ["curve.csv", "curve.svg", "diagnostics.csv"] {
        assert_eq!(fs::read(dir.path().join("a").join(f)).unwrap(), fs::read(dir.path().join("b").join(f)).unwrap());
    }
}
