//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 solver failure, 4 I/O failure.

mod commands;
pub mod config;
pub mod format;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::params::UnitSystem;

pub use config::{OutputFormat, RunConfig};
pub use verify::{run_checks, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Solver(String),
    #[error("{0}")]
    Io(String),
    #[error("{0} verification check(s) failed")]
    Verify(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Solver(_) => EXIT_SOLVER,
            CliError::Io(_) => EXIT_IO,
            CliError::Verify(_) => EXIT_VERIFY,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Solver(_) | Error::NoSignChange { .. } | Error::OutOfRange { .. } => {
                CliError::Solver(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

fn parse_units(s: &str) -> Result<UnitSystem, String> {
    match s {
        "natural" => Ok(UnitSystem::Natural),
        "gaussian" => Ok(UnitSystem::GaussianPractical),
        other => Err(format!("unknown unit system `{other}` (expected natural or gaussian)")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "landau-delta", version, about = "Delta-potential bound states in a magnetic field")]
struct Cli {
    /// TOML configuration file
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// natural | gaussian
    #[arg(long, global = true, value_parser = parse_units)]
    units: Option<UnitSystem>,
    /// Output file (stdout when absent)
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// csv | json
    #[arg(long, global = true)]
    format: Option<OutputFormat>,
    /// Grid nodes as NX,NY
    #[arg(long, global = true, value_parser = config::parse_grid, value_name = "NX,NY")]
    grid: Option<(usize, usize)>,
    /// Grid extent in magnetic lengths
    #[arg(
        long,
        global = true,
        value_parser = config::parse_extent,
        allow_hyphen_values = true,
        value_name = "XMIN,XMAX,YMIN,YMAX"
    )]
    extent: Option<[f64; 4]>,
    /// Coupling constant
    #[arg(long, global = true, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Magnetic field in kilogauss (gaussian units)
    #[arg(long = "field-kg", global = true, allow_negative_numbers = true)]
    field_kg: Option<f64>,
    /// Effective mass in free-electron masses
    #[arg(long = "mass-ratio", global = true, allow_negative_numbers = true)]
    mass_ratio: Option<f64>,
    /// Print the effective configuration and exit
    #[arg(long = "show-config", global = true)]
    show_config: bool,
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve the energy condition for b and the bound-state energy
    Solve(SolveArgs),
    /// Sample the ground state, its current and curl on a grid
    Field,
    /// Sample a superposition of vortices on a grid
    Vortices(VorticesArgs),
    /// Compare magnetic and zero-field localization
    Compare(CompareArgs),
    /// Run the built-in consistency checks
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Landau-level cutoff N
    #[arg(long)]
    cutoff: Option<u64>,
    /// exact | log | asymptotic
    #[arg(long)]
    method: Option<String>,
    /// Residual tolerance for the exact method
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Debug, Args)]
struct VorticesArgs {
    /// JSON array of {"x", "y", "intensity"}; positions in magnetic lengths,
    /// intensities in units of the vortex amplitude times a²
    #[arg(long, value_name = "PATH")]
    centers: PathBuf,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Zero-field binding energy in eV
    #[arg(long, allow_negative_numbers = true)]
    e0: f64,
    /// Well radius in cm (default: 1% of the smaller localization length)
    #[arg(long, allow_negative_numbers = true)]
    r0: Option<f64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "perturb-j0", hide = true, default_value_t = 1.0)]
    perturb_j0: f64,
}

/// Effective configuration after applying flags on top of the file.
fn merge(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(u) = cli.units {
        cfg.physics.units = u;
    }
    if let Some(v) = cli.lambda {
        cfg.physics.lambda = v;
    }
    if let Some(v) = cli.field_kg {
        cfg.physics.field_kg = v;
    }
    if let Some(v) = cli.mass_ratio {
        cfg.physics.mass_ratio = v;
    }
    if let Some((nx, ny)) = cli.grid {
        cfg.grid.nx = nx;
        cfg.grid.ny = ny;
    }
    if let Some(e) = cli.extent {
        cfg.grid.extent = e;
    }
    if let Some(p) = &cli.out {
        cfg.output.path = Some(p.clone());
    }
    if let Some(f) = cli.format {
        cfg.output.format = f;
    }
    if let Some(Command::Solve(s)) = &cli.command {
        if let Some(n) = s.cutoff {
            cfg.solver.cutoff = n;
        }
        if let Some(m) = &s.method {
            cfg.solver.method = m.clone();
        }
        if let Some(t) = s.tolerance {
            cfg.solver.tolerance = t;
        }
    }
    Ok(cfg)
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output.path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = merge(&cli)?;
    if cli.show_config {
        print!("{}", cfg.to_toml());
        return Ok(());
    }
    let Some(command) = cli.command else {
        return Err(CliError::Validation("no subcommand given (try --help)".into()));
    };
    let text = match command {
        Command::Solve(_) => commands::solve(&cfg, cli.verbose)?,
        Command::Field => commands::field(&cfg, cli.verbose)?,
        Command::Vortices(v) => commands::vortices(&cfg, &v.centers, cli.verbose)?,
        Command::Compare(c) => commands::compare(&cfg, c.e0, c.r0)?,
        Command::Verify(v) => {
            let checks = verify::run_checks(&cfg, v.perturb_j0)?;
            let failed = checks.iter().filter(|c| !c.pass).count();
            emit(&cfg, &verify::render(&checks, cli.verbose))?;
            if failed > 0 {
                return Err(CliError::Verify(failed));
            }
            return Ok(());
        }
    };
    emit(&cfg, &text)
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(CliError::Verify(n)) => {
            eprintln!("error: {n} verification check(s) failed");
            EXIT_VERIFY
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
