//! Command-line interface: state dumps, observable sweeps, figure data and
//! verification suites.
//!
//! Exit codes are 0 on success, 1 when a verification check fails or a
//! computation cannot be completed, and 2 on usage or configuration errors.

pub mod config;
pub mod output;
pub mod tables;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::states::Family;
use config::{ConfigLayer, Format, RunConfig};
use output::Table;
use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "su11-coherent", version, about = "SU(1,1) coherent states of the Calogero-Sutherland model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fock coefficients of one state (|z| = --zmax, arg z = --phase).
    State(Flags),
    /// Direct-sum observables along the |z| grid.
    Observables(Flags),
    /// Position-space wavefunction of one state on (0, --xmax].
    Wavefunction(Flags),
    /// Curve data for figure 1 (m = 0 measure), 2/4 (Mandel Q) or 3/5 (S1).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        #[command(flatten)]
        flags: Flags,
    },
    /// Run a verification suite: algebra, states, observables, measures, position or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Debug, Args, Default)]
pub struct Flags {
    /// bgcs, nbgcs or pabgcs.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// arg z in radians, in [0, 2π).
    #[arg(long)]
    pub phase: Option<f64>,
    #[arg(long)]
    pub zmin: Option<f64>,
    #[arg(long)]
    pub zmax: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or svg.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long = "tail-tol")]
    pub tail_tol: Option<f64>,
    /// Flat key=value file; flags take precedence over it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Seed for randomized verification draws.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Upper end of the wavefunction grid.
    #[arg(long)]
    pub xmax: Option<f64>,
}

impl Flags {
    fn layer(&self) -> crate::Result<ConfigLayer> {
        Ok(ConfigLayer {
            family: self.family.as_deref().map(str::parse::<Family>).transpose()?,
            m: self.m,
            lambda: self.lambda,
            phase: self.phase,
            z_min: self.zmin,
            z_max: self.zmax,
            points: self.points,
            out: self.out.clone(),
            format: self.format.as_deref().map(str::parse::<Format>).transpose()?,
            tail_tol: self.tail_tol,
            seed: self.seed,
            x_max: self.xmax,
        })
    }

    pub fn resolve(&self) -> crate::Result<RunConfig> {
        let file = match &self.config {
            Some(p) => ConfigLayer::read_file(p)?,
            None => ConfigLayer::default(),
        };
        RunConfig::from_layer(self.layer()?.over(file))
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidParameter(_) | Error::OutOfScope(_) | Error::LambdaMismatch { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn write_bytes(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> crate::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

/// CSV to `--out` (or standard output); with `--format svg` the plot goes
/// to `--out` and the CSV next to it.
fn emit(table: &Table, title: &str, config: &RunConfig, stdout: &mut dyn Write) -> crate::Result<()> {
    match config.format {
        Format::Csv => write_bytes(config.out.as_deref(), table.to_csv().as_bytes(), stdout),
        Format::Svg => {
            let out =
                config.out.as_deref().ok_or_else(|| Error::InvalidParameter("--format svg needs --out".into()))?;
            std::fs::write(out, table.to_svg(title))?;
            std::fs::write(out.with_extension("csv"), table.to_csv())?;
            Ok(())
        }
    }
}

fn run_command(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> crate::Result<i32> {
    match command {
        Command::State(flags) => {
            let c = flags.resolve()?;
            emit(&tables::state_table(&c)?, "Fock probabilities", &c, stdout)?;
        }
        Command::Observables(flags) => {
            let c = flags.resolve()?;
            emit(&tables::observables_table(&c)?, "observables", &c, stdout)?;
        }
        Command::Wavefunction(flags) => {
            let c = flags.resolve()?;
            emit(&tables::wavefunction_table(&c)?, "wavefunction", &c, stdout)?;
        }
        Command::Figure { id, flags } => {
            let c = flags.resolve()?;
            emit(&tables::figure_table(id, &c)?, &format!("figure {id}"), &c, stdout)?;
        }
        Command::Verify { suite, flags } => {
            let suite: Suite = suite.parse()?;
            let c = flags.resolve()?;
            let mut failed = 0usize;
            let mut total = 0usize;
            for (name, checks) in verify::run_suite(suite, c.seed)? {
                writeln!(stdout, "[{name}]")?;
                for check in checks {
                    total += 1;
                    if !check.passed() {
                        failed += 1;
                    }
                    writeln!(stdout, "{}", check.line())?;
                }
            }
            writeln!(stdout, "{} of {total} checks passed", total - failed)?;
            if failed > 0 {
                writeln!(stderr, "{failed} verification check(s) failed")?;
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
        }
    };
    match run_command(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code_for(&e)
        }
    }
}
