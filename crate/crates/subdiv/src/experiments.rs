//! Drivers for the three reference experiments.
//!
//! Each experiment writes into its own directory and is a pure function of its
//! [`ExperimentSpec`], so repeated runs produce identical files.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use subdiv_core::diagnostics::{self, cumulative_arclength, menger_curvature, total_length, DiagnosticsReport};
use subdiv_core::geometry::chaikin_refine;
use subdiv_core::scheme::subdivide;
use subdiv_core::{Boundary, Grid, PointSequence, RefineConfig};

use crate::io::{drop_axis, format_csv, render_svg, Style};
use crate::report::report_csv;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentName {
    Parabola,
    Closed2d,
    Trefoil,
}

impl ExperimentName {
    pub const ALL: [ExperimentName; 3] = [ExperimentName::Parabola, ExperimentName::Closed2d, ExperimentName::Trefoil];

    pub fn as_str(self) -> &'static str {
        match self {
            ExperimentName::Parabola => "parabola",
            ExperimentName::Closed2d => "closed2d",
            ExperimentName::Trefoil => "trefoil",
        }
    }
}

impl fmt::Display for ExperimentName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExperimentName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ExperimentName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown experiment `{s}` (expected parabola, closed2d or trefoil)")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub name: ExperimentName,
    /// `None` selects the experiment's own values. The trefoil uses a
    /// different list for each of its two datasets.
    pub rhos: Option<Vec<f64>>,
    pub iterations: u32,
    pub out_dir: PathBuf,
}

impl ExperimentSpec {
    pub fn new(name: ExperimentName, out_dir: impl Into<PathBuf>) -> Self {
        ExperimentSpec { name, rhos: None, iterations: 5, out_dir: out_dir.into() }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.iterations < 1 {
            return Err(Error::Config("an experiment needs at least 1 iteration".into()));
        }
        match &self.rhos {
            Some(r) if r.is_empty() => Err(Error::Config("an experiment needs at least one rho value".into())),
            Some(r) if r.iter().any(|x| !x.is_finite() || *x < 0.0) => {
                Err(Error::Config("rho must be non-negative".into()))
            }
            _ => Ok(()),
        }
    }

    fn rhos_or(&self, default: &[f64]) -> Vec<f64> {
        self.rhos.clone().unwrap_or_else(|| default.to_vec())
    }
}

/// Files written by a run, relative to the experiment directory.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Artifacts {
    pub dir: PathBuf,
    pub files: Vec<String>,
}

impl Artifacts {
    fn new(dir: PathBuf) -> Result<Self, Error> {
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        Ok(Artifacts { dir, files: Vec::new() })
    }

    fn write(&mut self, name: String, contents: impl AsRef<[u8]>) -> Result<(), Error> {
        let path = self.dir.join(&name);
        fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
        self.files.push(name);
        Ok(())
    }
}

const PALETTE: [&str; 4] = ["#c0392b", "#2e86c1", "#229954", "#7d3c98"];

fn curve_style(i: usize) -> Style {
    Style { stroke: PALETTE[i % PALETTE.len()].into(), ..Style::default() }
}

fn data_style() -> Style {
    Style { stroke: "#555555".into(), stroke_width: 0.75, marker_radius: 4.0 }
}

fn layered_svg(data: &PointSequence, curves: &[PointSequence]) -> Result<String, Error> {
    let styles: Vec<Style> = (0..curves.len()).map(curve_style).collect();
    let base = data_style();
    let mut layers = vec![(data, &base)];
    layers.extend(curves.iter().zip(&styles));
    Ok(render_svg(&layers)?)
}

/// The 15-point non-uniform grid of the parabola experiment.
pub const PARABOLA_GRID: [f64; 15] = [
    -1.9381, -1.7893, -1.5751, -1.3313, -1.2075, -0.9235, -0.8321, -0.6420, -0.5104, -0.2734, -0.0412, 0.9514, 1.6813,
    1.8065, 1.9363,
];

pub const PARABOLA_RHOS: [f64; 3] = [0.0, 2.0, 6.0];

pub fn parabola(x: f64) -> [f64; 2] {
    [x, x * x]
}

pub fn sample_parabola(grid: &Grid) -> PointSequence {
    PointSequence::from_points(grid.values().iter().map(|&x| parabola(x)), Boundary::Open).expect("finite grid")
}

/// Grid carried along by `iterations` open steps: each step Chaikin-refines
/// and drops the two outermost points at each end.
pub fn tracked_grid(grid: &Grid, iterations: u32) -> Result<Grid, Error> {
    let mut g = grid.clone();
    for _ in 0..iterations {
        g = chaikin_refine(&g)?.trimmed(2)?;
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhoResult {
    pub rho: f64,
    pub curve: PointSequence,
    /// Pointwise distance to the exact curve, when one exists.
    pub errors: Vec<f64>,
    pub report: DiagnosticsReport,
}

impl RhoResult {
    pub fn max_error(&self) -> f64 {
        self.errors.iter().copied().fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParabolaOutcome {
    pub runs: Vec<RhoResult>,
    pub artifacts: Artifacts,
}

pub fn run_parabola(spec: &ExperimentSpec) -> Result<ParabolaOutcome, Error> {
    spec.validate()?;
    let grid = Grid::new(PARABOLA_GRID.to_vec())?;
    let data = sample_parabola(&grid);
    let fine = tracked_grid(&grid, spec.iterations)?;
    let exact = sample_parabola(&fine);
    let mut art = Artifacts::new(experiment_dir(&spec.out_dir, ExperimentName::Parabola))?;
    let mut runs = Vec::new();
    for rho in spec.rhos_or(&PARABOLA_RHOS) {
        let cfg = RefineConfig::default().with_rho(rho).with_iterations(spec.iterations).with_boundary(Boundary::Open);
        let curve = subdivide(&data, &cfg)?;
        let errors = diagnostics::reproduction_error(&exact, &curve)?;
        let report = diagnostics::diagnose(&data, &cfg)?;
        art.write(format!("curve_parabola_rho{rho}.csv"), format_csv(&curve))?;
        art.write(format!("diagnostics_parabola_rho{rho}.csv"), report_csv(&report))?;
        runs.push(RhoResult { rho, curve, errors, report });
    }
    let curves: Vec<PointSequence> = runs.iter().map(|r| r.curve.clone()).collect();
    art.write("curve_parabola.svg".into(), layered_svg(&data, &curves)?)?;

    let mut table = String::from("x");
    for r in &runs {
        table.push_str(&format!(",error_rho{},log10_error_rho{}", r.rho, r.rho));
    }
    table.push('\n');
    for (i, x) in fine.values().iter().enumerate() {
        table.push_str(&format!("{x:.16e}"));
        for r in &runs {
            let e = r.errors[i];
            table.push_str(&format!(",{e:.16e},{:.6}", e.max(f64::MIN_POSITIVE).log10()));
        }
        table.push('\n');
    }
    art.write("error_parabola.csv".into(), table)?;
    Ok(ParabolaOutcome { runs, artifacts: art })
}

/// Substitute dataset: a closed rabbit-like outline of 60 points with uneven
/// spacing, standing in for the unpublished original coordinates.
pub const SUBSTITUTE_RABBIT: [[f64; 2]; 60] = [
    [1.846, -1.447],
    [1.282, -1.548],
    [0.785, -1.513],
    [0.402, -1.376],
    [0.059, -1.399],
    [-0.238, -1.391],
    [-0.517, -1.36],
    [-0.8, -1.304],
    [-1.101, -1.212],
    [-1.415, -1.071],
    [-1.72, -0.873],
    [-1.977, -0.613],
    [-2.147, -0.306],
    [-2.199, 0.014],
    [-2.378, 0.142],
    [-2.589, 0.328],
    [-2.61, 0.62],
    [-2.381, 0.856],
    [-1.999, 0.785],
    [-1.652, 0.924],
    [-1.155, 1.191],
    [-0.557, 1.354],
    [0.082, 1.398],
    [0.695, 1.328],
    [1.151, 1.257],
    [1.257, 1.691],
    [1.484, 1.947],
    [1.695, 2.069],
    [1.726, 2.178],
    [1.666, 2.307],
    [1.607, 2.453],
    [1.539, 2.652],
    [1.464, 2.93],
    [1.4, 3.295],
    [1.402, 3.736],
    [1.725, 3.704],
    [1.941, 3.247],
    [2.079, 2.769],
    [2.147, 2.303],
    [2.421, 2.113],
    [2.494, 2.529],
    [2.627, 2.927],
    [2.815, 3.318],
    [3.132, 3.631],
    [3.2, 3.181],
    [3.073, 2.699],
    [2.882, 2.252],
    [2.774, 1.899],
    [2.992, 1.592],
    [3.049, 1.301],
    [3.018, 1.083],
    [2.955, 0.93],
    [2.875, 0.809],
    [2.758, 0.687],
    [2.561, 0.557],
    [2.244, 0.46],
    [2.18, 0.187],
    [2.131, -0.345],
    [1.768, -0.833],
    [1.672, -1.098],
];

pub const CLOSED2D_RHOS: [f64; 3] = [0.0, 2.0, 6.0];
/// Depth and flexibility of the curvature profile.
pub const CURVATURE_ITERATIONS: u32 = 12;
pub const CURVATURE_RHO: f64 = 2.0;

pub fn substitute_rabbit() -> PointSequence {
    PointSequence::from_points(SUBSTITUTE_RABBIT, Boundary::Closed).expect("embedded data is finite")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Closed2dOutcome {
    pub runs: Vec<RhoResult>,
    /// `(arclength, kappa)` at every point of the deep curve.
    pub curvature: Vec<(f64, Option<f64>)>,
    pub artifacts: Artifacts,
}

impl Closed2dOutcome {
    pub fn lengths(&self) -> Vec<(f64, f64)> {
        self.runs.iter().map(|r| (r.rho, total_length(&r.curve))).collect()
    }
}

pub fn run_closed2d(spec: &ExperimentSpec) -> Result<Closed2dOutcome, Error> {
    spec.validate()?;
    let data = substitute_rabbit();
    let mut art = Artifacts::new(experiment_dir(&spec.out_dir, ExperimentName::Closed2d))?;
    let mut runs = Vec::new();
    for rho in spec.rhos_or(&CLOSED2D_RHOS) {
        let cfg = RefineConfig::default().with_rho(rho).with_iterations(spec.iterations);
        let curve = subdivide(&data, &cfg)?;
        let report = diagnostics::diagnose(&data, &cfg)?;
        art.write(format!("curve_closed2d_rho{rho}.csv"), format_csv(&curve))?;
        art.write(format!("diagnostics_closed2d_rho{rho}.csv"), report_csv(&report))?;
        runs.push(RhoResult { rho, curve, errors: Vec::new(), report });
    }
    let curves: Vec<PointSequence> = runs.iter().map(|r| r.curve.clone()).collect();
    art.write("curve_closed2d.svg".into(), layered_svg(&data, &curves)?)?;

    let deep_cfg = RefineConfig::default().with_rho(CURVATURE_RHO).with_iterations(CURVATURE_ITERATIONS);
    let deep = subdivide(&data, &deep_cfg)?;
    let curvature: Vec<(f64, Option<f64>)> =
        cumulative_arclength(&deep)?.into_iter().zip(menger_curvature(&deep)?).collect();
    let mut table = String::from("arclength,kappa\n");
    for (s, k) in &curvature {
        match k {
            Some(k) => table.push_str(&format!("{s:.16e},{k:.16e}\n")),
            None => table.push_str(&format!("{s:.16e},\n")),
        }
    }
    art.write("curvature_closed2d.csv".into(), table)?;
    Ok(Closed2dOutcome { runs, curvature, artifacts: art })
}

/// Point of the trefoil tube surface at parameters `(u, v)` and scale `r`.
pub fn trefoil_point(u: f64, v: f64, r: f64) -> [f64; 3] {
    use std::f64::consts::PI;
    let cv = 2.0 + v.cos();
    let cw = 2.0 + (v + 2.0 * PI / 3.0).cos();
    [
        r * (3.0 * u).sin() / cv,
        r * (u.sin() + 2.0 * (2.0 * u).sin()) / cw,
        r / 8.0 * (u.cos() - 2.0 * (2.0 * u).cos()) * cv * cw,
    ]
}

pub const TREFOIL_SAMPLES: usize = 9;

/// Closed dataset `u = 2πi/9`, `i = 0..9`, at fixed `v` and `r = 1`.
pub fn trefoil_dataset(v: f64) -> PointSequence {
    let pts = (0..TREFOIL_SAMPLES).map(|i| trefoil_point(2.0 * std::f64::consts::PI * i as f64 / 9.0, v, 1.0));
    PointSequence::from_points(pts, Boundary::Closed).expect("trefoil samples are finite")
}

/// The two datasets and their default flexibility values.
pub fn trefoil_cases() -> [(&'static str, f64, [f64; 3]); 2] {
    [("v0", 0.0, [0.0, 1.0, 2.0]), ("vpi", std::f64::consts::PI, [0.0, 2.0, 6.0])]
}

/// Orthographic views and the axis each one drops.
pub const TREFOIL_VIEWS: [(&str, usize); 3] = [("front", 2), ("lateral", 1), ("top", 0)];

#[derive(Debug, Clone, PartialEq)]
pub struct TrefoilRun {
    pub dataset: &'static str,
    pub data: PointSequence,
    pub runs: Vec<RhoResult>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrefoilOutcome {
    pub datasets: Vec<TrefoilRun>,
    pub artifacts: Artifacts,
}

pub fn run_trefoil(spec: &ExperimentSpec) -> Result<TrefoilOutcome, Error> {
    spec.validate()?;
    let mut art = Artifacts::new(experiment_dir(&spec.out_dir, ExperimentName::Trefoil))?;
    let mut datasets = Vec::new();
    for (label, v, rhos) in trefoil_cases() {
        let data = trefoil_dataset(v);
        let mut runs = Vec::new();
        for rho in spec.rhos_or(&rhos) {
            let cfg = RefineConfig::default().with_rho(rho).with_iterations(spec.iterations);
            let curve = subdivide(&data, &cfg)?;
            let report = diagnostics::diagnose(&data, &cfg)?;
            art.write(format!("curve_trefoil_{label}_rho{rho}.csv"), format_csv(&curve))?;
            runs.push(RhoResult { rho, curve, errors: Vec::new(), report });
        }
        for (view, axis) in TREFOIL_VIEWS {
            let curves: Vec<PointSequence> = runs.iter().map(|r| drop_axis(&r.curve, axis)).collect();
            let svg = layered_svg(&drop_axis(&data, axis), &curves)?;
            art.write(format!("curve_trefoil_{label}_{view}.svg"), svg)?;
        }
        datasets.push(TrefoilRun { dataset: label, data, runs });
    }
    Ok(TrefoilOutcome { datasets, artifacts: art })
}

/// Runs the experiment named in `spec` and returns the files it wrote.
pub fn run(spec: &ExperimentSpec) -> Result<Artifacts, Error> {
    Ok(match spec.name {
        ExperimentName::Parabola => run_parabola(spec)?.artifacts,
        ExperimentName::Closed2d => run_closed2d(spec)?.artifacts,
        ExperimentName::Trefoil => run_trefoil(spec)?.artifacts,
    })
}

/// Directory an experiment writes into under `root`.
pub fn experiment_dir(root: &Path, name: ExperimentName) -> PathBuf {
    root.join(name.as_str())
}
