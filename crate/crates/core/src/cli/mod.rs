//! The `corrpoly` command line: argument definitions, dispatch and exit codes.
//!
//! Exit codes: 0 on success, 1 for usage and input errors, 2 when a
//! numerical routine fails (no eigensolver convergence, degenerate hull,
//! closed form not reproduced).

mod args;
mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, CommandFactory, Parser, Subcommand};

use crate::error::Error;

pub use args::{load_scenario, parse_angle, parse_angles};
pub use commands::{theta_grid, CANONICAL_CHSH_ANGLES, SWEEP_COLUMNS};
pub use report::{canonicalize, format_float, round_significant, Report, Table, SIGNIFICANT_DIGITS};

#[derive(Parser, Debug)]
#[command(name = "corrpoly", version, about = "Correlation polytopes, their facets, and quantum bounds on them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Vertices and facet inequalities of a scenario's correlation polytope
    Facets(FacetsArgs),
    /// Quantum range of one facet expression at fixed planar directions
    Qbound(QboundArgs),
    /// Search directions maximizing a facet's quantum violation
    Optimize(OptimizeArgs),
    /// Three-observable spectrum over equidistant angles (CSV)
    Sweep(SweepArgs),
    /// Quantum versus fragment-model correlation extrema
    Deviation(DeviationArgs),
    /// Pairwise correlations of an urn model, exact and sampled
    Urn(UrnArgs),
    /// Membership of a correlation tuple, or of the singlet profile
    Specker(SpeckerArgs),
    /// CHSH operator at given angles and the eigenvector convention search
    Chsh(ChshArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    /// JSON report (default, except for sweep)
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// CSV table (facets and sweep only)
    #[arg(long)]
    pub csv: bool,
    /// Write to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct FacetArgs {
    /// Index into the derived facet list
    #[arg(long, default_value_t = 0)]
    pub facet: usize,
    /// Explicit normal `a` of `a·x + b >= 0`, comma separated
    #[arg(long, allow_hyphen_values = true, conflicts_with = "facet")]
    pub normal: Option<String>,
    /// Offset `b` for --normal
    #[arg(long, requires = "normal", allow_hyphen_values = true)]
    pub offset: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct FacetsArgs {
    /// `sz`, `chsh` or a scenario JSON file
    #[arg(long, default_value = "sz", value_name = "FILE")]
    pub scenario: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct QboundArgs {
    #[arg(long, default_value = "sz", value_name = "FILE")]
    pub scenario: String,
    #[command(flatten)]
    pub facet: FacetArgs,
    /// Planar polar angles in radians, one per observable (`pi/4` is accepted)
    #[arg(long, allow_hyphen_values = true)]
    pub angles: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OptimizeArgs {
    #[arg(long, default_value = "chsh", value_name = "FILE")]
    pub scenario: String,
    #[command(flatten)]
    pub facet: FacetArgs,
    /// planar, spherical or equidistant
    #[arg(long, default_value = "planar")]
    pub mode: String,
    /// Starting planar angles, used when better than the best grid point
    #[arg(long, allow_hyphen_values = true)]
    pub angles: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub start: String,
    #[arg(long, default_value = "pi", allow_hyphen_values = true)]
    pub stop: String,
    /// Grid points, endpoints included
    #[arg(long, default_value_t = 25)]
    pub steps: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct DeviationArgs {
    /// Also estimate the fragment-model correlation by sampling
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct UrnArgs {
    /// `uniform`, `split`, `all-plus` or an urn JSON file
    #[arg(long, default_value = "uniform", value_name = "FILE")]
    pub urn: String,
    #[arg(long, default_value = "sz", value_name = "FILE")]
    pub scenario: String,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct SpeckerArgs {
    #[arg(long, default_value = "sz", value_name = "FILE")]
    pub scenario: String,
    /// Correlation tuple in monomial order
    #[arg(long, default_value = "-1,-1,-1", allow_hyphen_values = true)]
    pub point: String,
    /// Use the singlet at planar angles 0, θ, 2θ instead of --point
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct ChshArgs {
    /// Planar angles of W, X, Y, Z
    #[arg(long, default_value = CANONICAL_CHSH_ANGLES, allow_hyphen_values = true)]
    pub angles: String,
    /// Also run the direction optimizer (several seconds)
    #[arg(long)]
    pub optimize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

enum Failure {
    Usage(String),
    Library(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Facets(a) => &a.output,
        Command::Qbound(a) => &a.output,
        Command::Optimize(a) => &a.output,
        Command::Sweep(a) => &a.output,
        Command::Deviation(a) => &a.output,
        Command::Urn(a) => &a.output,
        Command::Specker(a) => &a.output,
        Command::Chsh(a) => &a.output,
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let out = output_args(&cli.command);
    let csv_capable = matches!(cli.command, Command::Facets(_) | Command::Sweep(_));
    if out.csv && !csv_capable {
        return Err(Failure::Usage("--csv is only available for facets and sweep".into()));
    }
    let (output, seed) = match &cli.command {
        Command::Facets(a) => (commands::facets(a)?, None),
        Command::Qbound(a) => (commands::qbound(a)?, None),
        Command::Optimize(a) => (commands::optimize(a)?, None),
        Command::Sweep(a) => (commands::sweep(a)?, None),
        Command::Deviation(a) => commands::deviation(a)?,
        Command::Urn(a) => commands::urn(a)?,
        Command::Specker(a) => (commands::specker(a)?, None),
        Command::Chsh(a) => (commands::chsh(a)?, None),
    };
    let text = match output {
        commands::Output::Json(report) => report.with_seed(seed).to_json(),
        commands::Output::Csv(table) => table.to_csv(),
    };
    match &out.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(Failure::Io)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

/// Parses `argv` (program name first), runs the command, and returns the
/// process exit code. Reports go to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let failure = match execute(&cli) {
        Ok(text) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => return 0,
            Err(e) => Failure::Io(e),
        },
        Err(f) => f,
    };
    let synopsis = Cli::command().render_usage();
    let _ = match &failure {
        Failure::Usage(msg) => writeln!(stderr, "error: {msg}\n\n{synopsis}"),
        Failure::Library(e) if e.is_numeric_failure() => writeln!(stderr, "numerical failure: {e}"),
        Failure::Library(e) => writeln!(stderr, "error: {e}\n\n{synopsis}"),
        Failure::Io(e) => writeln!(stderr, "error: {e}"),
    };
    exit_code(&failure)
}

fn exit_code(failure: &Failure) -> i32 {
    match failure {
        Failure::Library(e) if e.is_numeric_failure() => 2,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("corrpoly").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_with_one() {
        let (code, out, err) = call(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("Usage"));
        let (code, _, err) = call(&["deviation", "--csv"]);
        assert_eq!(code, 1);
        assert!(err.contains("Usage"));
        let (code, _, _) = call(&["qbound", "--angles", "0,1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("facets"));
    }

    #[test]
    fn numeric_failures_exit_with_two() {
        let degenerate = Error::DegeneratePolytope { affine: 2, ambient: 3 };
        assert_eq!(exit_code(&Failure::Library(degenerate)), 2);
        let stuck = Error::NoConvergence { sweeps: 60, off_norm: 1.0 };
        assert_eq!(exit_code(&Failure::Library(stuck)), 2);
        assert_eq!(exit_code(&Failure::Library(Error::InvalidScenario("x".into()))), 1);
        assert_eq!(exit_code(&Failure::Usage("x".into())), 1);
    }
}
