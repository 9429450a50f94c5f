use std::fs;

use subdiv::experiments::*;
use subdiv_core::diagnostics::total_length;

#[test]
fn parabola_grid_constants() {
    assert_eq!(PARABOLA_GRID.len(), 15);
    assert_eq!(PARABOLA_GRID[0], -1.9381);
    assert_eq!(PARABOLA_GRID[14], 1.9363);
}

#[test]
fn tracked_grid_sizes() {
    let g = subdiv_core::Grid::new(PARABOLA_GRID.to_vec()).unwrap();
    let sizes: Vec<usize> = (0..=5).map(|k| tracked_grid(&g, k).unwrap().len()).collect();
    assert_eq!(sizes, [15, 24, 42, 78, 150, 294]);
}

#[test]
fn parabola_errors_by_rho() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_parabola(&ExperimentSpec::new(ExperimentName::Parabola, dir.path())).unwrap();
    let err: Vec<f64> = out.runs.iter().map(RhoResult::max_error).collect();
    assert!(err[2] < 1e-8, "{err:?}");
    assert!(err[2] < err[1] && err[1] < err[0]);
    let table = fs::read_to_string(dir.path().join("parabola/error_parabola.csv")).unwrap();
    assert_eq!(table.lines().count(), 1 + 294);
}

#[test]
fn closed2d_outline_and_lengths() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_closed2d(&ExperimentSpec::new(ExperimentName::Closed2d, dir.path())).unwrap();
    for r in &out.runs {
        assert_eq!(r.curve.len(), 32 * SUBSTITUTE_RABBIT.len());
    }
    let l: Vec<f64> = out.runs.iter().map(|r| total_length(&r.curve)).collect();
    assert!(l[2] > l[1] && l[1] > l[0], "{l:?}");
    assert_eq!(out.curvature.len(), SUBSTITUTE_RABBIT.len() << CURVATURE_ITERATIONS);
    assert!(out.curvature.iter().all(|(s, k)| s.is_finite() && k.is_some_and(f64::is_finite)));
    let csv = fs::read_to_string(dir.path().join("closed2d/curvature_closed2d.csv")).unwrap();
    assert!(csv.starts_with("arclength,kappa\n"));
}

#[test]
fn trefoil_point_values() {
    use std::f64::consts::PI;
    let p = trefoil_point(0.0, 0.0, 1.0);
    assert!(p[0].abs() < 1e-15 && p[1].abs() < 1e-15 && (p[2] + 0.5625).abs() < 1e-15);
    assert!(trefoil_point(PI / 3.0, 0.0, 1.0)[0].abs() < 1e-15);
    for u in [0.1, 1.3, 4.0] {
        let (a, b) = (trefoil_point(u, 0.7, 2.0), trefoil_point(u + 2.0 * PI, 0.7, 2.0));
        assert!(a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12));
    }
}

#[test]
fn trefoil_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_trefoil(&ExperimentSpec::new(ExperimentName::Trefoil, dir.path())).unwrap();
    assert_eq!(out.datasets.len(), 2);
    for d in &out.datasets {
        assert_eq!(d.data.len(), 9);
        assert!(d.runs.iter().all(|r| r.curve.len() == 288));
        for (view, _) in TREFOIL_VIEWS {
            let svg = fs::read_to_string(dir.path().join(format!("trefoil/curve_trefoil_{}_{view}.svg", d.dataset))).unwrap();
            assert_eq!(svg.matches(" Z\"").count(), 1 + d.runs.len());
        }
    }
}

#[test]
fn outputs_are_byte_identical() {
    for name in ExperimentName::ALL {
        let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        let ra = run(&ExperimentSpec::new(name, a.path())).unwrap();
        let rb = run(&ExperimentSpec::new(name, b.path())).unwrap();
        assert_eq!(ra.files, rb.files);
        for f in &ra.files {
            assert_eq!(fs::read(ra.dir.join(f)).unwrap(), fs::read(rb.dir.join(f)).unwrap(), "{f}");
        }
    }
}

#[test]
fn spec_validation() {
    let mut spec = ExperimentSpec::new(ExperimentName::Parabola, "unused");
    spec.iterations = 0;
    assert!(spec.validate().is_err());
    spec.iterations = 1;
    spec.rhos = Some(vec![]);
    assert!(spec.validate().is_err());
    spec.rhos = Some(vec![-1.0]);
    assert_eq!(spec.validate().unwrap_err().to_string(), "rho must be non-negative");
}
