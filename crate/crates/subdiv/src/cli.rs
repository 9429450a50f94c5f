use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use subdiv_core::diagnostics::diagnose;
use subdiv_core::scheme::subdivide;
use subdiv_core::{Boundary, PointSequence, RefineConfig};

use crate::experiments::{self, ExperimentName, ExperimentSpec};
use crate::io::{drop_axis, emit_svg, format_csv, parse_points, Style};
use crate::report::report_csv;
use crate::Error;

/// Overrides the default output directory when no path is given on the command line.
pub const OUT_DIR_ENV: &str = "SUBDIV_OUT_DIR";
pub const DEFAULT_OUT_DIR: &str = "out";

#[derive(Debug, Parser)]
#[command(name = "subdiv", version, about = "Grid-free quadratic-reproducing curve subdivision")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Refine a point file and write curve.csv and curve.svg.
    Refine(RefineArgs),
    /// Like refine, also writing diagnostics.csv.
    Diagnose(RefineArgs),
    /// Run one of the reference experiments.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
struct SchemeArgs {
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    rho: f64,
    #[arg(long, default_value_t = 5)]
    iters: u32,
    #[arg(long, default_value = "closed")]
    boundary: Boundary,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Debug, Args)]
struct RefineArgs {
    #[command(flatten)]
    scheme: SchemeArgs,
    /// CSV or JSON point file.
    input: PathBuf,
    /// Output directory.
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// parabola, closed2d or trefoil.
    name: ExperimentName,
    /// Flexibility values; defaults to the experiment's own.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    rho: Option<Vec<f64>>,
    #[arg(long, default_value_t = 5)]
    iters: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Resolved configuration of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub subcommand: &'static str,
    pub input: Option<PathBuf>,
    pub output: PathBuf,
    pub refine: RefineConfig,
    pub experiment: Option<ExperimentName>,
    pub rhos: Option<Vec<f64>>,
}

/// Explicit path, then [`OUT_DIR_ENV`], then [`DEFAULT_OUT_DIR`].
pub fn resolve_out_dir(explicit: Option<PathBuf>, env: Option<OsString>) -> PathBuf {
    explicit.or_else(|| env.filter(|v| !v.is_empty()).map(PathBuf::from)).unwrap_or_else(|| DEFAULT_OUT_DIR.into())
}

impl SchemeArgs {
    fn config(&self) -> Result<RefineConfig, Error> {
        let mut cfg = RefineConfig::default()
            .with_rho(self.rho)
            .with_iterations(self.iters)
            .with_boundary(self.boundary);
        cfg.degeneracy_tol = self.tol;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn to_config(cli: Cli, env: Option<OsString>) -> Result<CliConfig, Error> {
    let (subcommand, args) = match cli.command {
        Command::Refine(a) => ("refine", a),
        Command::Diagnose(a) => ("diagnose", a),
        Command::Experiment(a) => {
            let spec = ExperimentSpec {
                name: a.name,
                rhos: a.rho.clone(),
                iterations: a.iters,
                out_dir: PathBuf::new(),
            };
            spec.validate()?;
            return Ok(CliConfig {
                subcommand: "experiment",
                input: None,
                output: resolve_out_dir(a.out, env),
                refine: RefineConfig::default().with_iterations(a.iters),
                experiment: Some(a.name),
                rhos: a.rho,
            });
        }
    };
    Ok(CliConfig {
        subcommand,
        refine: args.scheme.config()?,
        input: Some(args.input),
        output: resolve_out_dir(args.output, env),
        experiment: None,
        rhos: None,
    })
}

fn write(path: &Path, contents: impl AsRef<[u8]>) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn planar(curve: &PointSequence) -> PointSequence {
    if curve.dim() == 2 {
        curve.clone()
    } else {
        // front view: keep the first two coordinates
        let mut p = curve.clone();
        while p.dim() > 2 {
            p = drop_axis(&p, p.dim() - 1);
        }
        p
    }
}

/// Executes a resolved configuration.
pub fn execute(cfg: &CliConfig) -> Result<(), Error> {
    fs::create_dir_all(&cfg.output).map_err(|e| Error::io(&cfg.output, e))?;
    if let Some(name) = cfg.experiment {
        let spec = ExperimentSpec {
            name,
            rhos: cfg.rhos.clone(),
            iterations: cfg.refine.iterations,
            out_dir: cfg.output.clone(),
        };
        experiments::run(&spec)?;
        return Ok(());
    }
    let input = cfg.input.as_deref().expect("refine and diagnose take an input");
    let bytes = fs::read(input).map_err(|e| Error::io(input, e))?;
    let data = parse_points(&bytes, cfg.refine.boundary)?;
    let curve = subdivide(&data, &cfg.refine)?;
    write(&cfg.output.join("curve.csv"), format_csv(&curve))?;
    write(&cfg.output.join("curve.svg"), emit_svg(&planar(&curve), &Style::default())?)?;
    if cfg.subcommand == "diagnose" {
        write(&cfg.output.join("diagnostics.csv"), report_csv(&diagnose(&data, &cfg.refine)?))?;
    }
    Ok(())
}

/// Parses `argv` (program name first), runs it and returns the exit code.
/// Usage errors exit with 2, validation and runtime failures with 1.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match to_config(cli, std::env::var_os(OUT_DIR_ENV)).and_then(|cfg| execute(&cfg)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
