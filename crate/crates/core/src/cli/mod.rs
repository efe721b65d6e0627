//! Command-line surface. The `s3rad` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 runtime or numerical failure, 2 usage error.

mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::numerics::QuadratureSettings;
use output::{Format, OutputSpec, DEFAULT_PRECISION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "s3rad", version, about = "Photon gas on R x S^3: spectrum, thermodynamics, adiabats")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Significant digits, 6 to 17.
    #[arg(long, default_value_t = DEFAULT_PRECISION, global = true)]
    pub precision: usize,

    /// Relative tolerance of the continuum quadrature.
    #[arg(long, default_value_t = 1e-10, global = true, allow_negative_numbers = true)]
    pub quad_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Quadrature,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Exact,
    Quadrature,
    Asymptotic,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of discrete levels up to an energy cutoff.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[arg(short = 'R', long)]
        radius: f64,
        #[arg(long)]
        cutoff: f64,
    },
    /// Thermodynamic report at one state.
    #[command(allow_negative_numbers = true)]
    Thermo {
        #[arg(short = 'R', long)]
        radius: f64,
        #[arg(short = 'T', long)]
        temp: f64,
        #[arg(long, value_enum, default_value_t = MethodChoice::All)]
        method: MethodChoice,
    },
    /// Modified and free-space Planck curves.
    #[command(allow_negative_numbers = true)]
    Planck {
        #[arg(long)]
        rt: f64,
        #[arg(long, default_value_t = 12.0)]
        x_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Constant-entropy trajectory over a range of radii.
    #[command(allow_negative_numbers = true)]
    Adiabat {
        /// Target entropy.
        #[arg(long, conflicts_with = "from_state", required_unless_present = "from_state")]
        entropy: Option<f64>,
        /// Take the entropy of the state `R,T` under the chosen method.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        from_state: Option<Vec<f64>>,
        #[arg(long)]
        r_min: f64,
        #[arg(long)]
        r_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Quadrature)]
        method: MethodArg,
    },
    /// Exact, quadrature and asymptotic values side by side.
    #[command(allow_negative_numbers = true)]
    Compare {
        #[arg(short = 'R', long)]
        radius: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        temps: Vec<f64>,
    },
    /// Energy density against the pressure-based prediction.
    #[command(allow_negative_numbers = true)]
    Eos {
        #[arg(long, value_delimiter = ',', required = true)]
        rt: Vec<f64>,
        #[arg(short = 'R', long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Asymptotic)]
        method: MethodArg,
    },
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Runtime(_) => EXIT_FAILURE,
        }
    }
}

/// Parsed global options.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub output: OutputSpec,
    pub quadrature: QuadratureSettings,
}

/// Parse `args` (including the program name), execute, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(&cli) {
        Ok(text) => match write_output(&cli.output.output, &text, stdout) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                EXIT_FAILURE
            }
        },
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Runtime(msg)) = &e;
            let _ = writeln!(stderr, "error: {msg}");
            e.exit_code()
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(path) => std::fs::write(path, text),
        None => {
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Execute a parsed command and return the rendered document.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let usage = |e: crate::Error| CliError::Usage(e.to_string());
    let ctx = Context {
        output: OutputSpec::new(cli.output.format, cli.output.precision).map_err(usage)?,
        quadrature: QuadratureSettings::with_rel_tol(cli.output.quad_tol).map_err(usage)?,
    };
    let table = commands::dispatch(&cli.command, &ctx)?;
    table
        .render(&ctx.output)
        .map_err(|e| CliError::Runtime(e.to_string()))
}
