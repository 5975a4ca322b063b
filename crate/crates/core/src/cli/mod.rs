//! The `hopfrot` command-line tool.
//!
//! One JSON document is read from `--in FILE` or standard input, one JSON
//! document is written to standard output, and diagnostics go to standard
//! error. Exit codes: 0 success, 1 verification failure, 2 usage or parse
//! error, 3 domain error.

mod commands;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::hopf::HopfVariant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Inputs this far from unit norm are renormalized with a warning; farther
/// ones are rejected.
pub const RENORMALIZE_BAND: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "hopfrot", version, about = "Hopf maps and quaternion / Bloch-sphere rotations")]
pub struct Cli {
    /// Read the input document from FILE instead of standard input.
    #[arg(long = "in", value_name = "FILE", global = true)]
    pub input: Option<PathBuf>,

    /// Read and write angles in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Express a rotation as axis-angle, g_Q quaternion, g_Q matrix and g_B matrix.
    ///
    /// Input: {"theta", "axis"}, a quaternion [x0, x1, x2, x3], an SU(2)
    /// matrix {"z", "w"}, or a previous `convert` output. Quaternion and
    /// matrix inputs are read as g_Q or g_B according to --convention.
    Convert {
        #[arg(long, value_enum, default_value_t = Convention::Quat)]
        convention: Convention,
    },
    /// Rotate points. Input: {"axis_angle": {"theta", "axis"}, "points": [[x, y, z], ...]}.
    Rotate {
        #[arg(long, value_enum, default_value_t = Convention::Quat)]
        convention: Convention,
    },
    /// Apply a Hopf map. Input: an array of quaternions or {"z", "w"} pairs.
    Hopf {
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Canonical preimages of points of S². Input: an array of [x, y, z].
    Lift {
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Sample the fiber over a point of S². Input: [x, y, z].
    Fiber {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Run the randomized diagram checks.
    Verify {
        /// Check to run (repeatable); all checks when absent.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Quat,
    Bloch,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Quat => "quat",
            Convention::Bloch => "bloch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Classic,
    Quat,
    Bloch,
}

impl From<VariantArg> for HopfVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Classic => HopfVariant::Classic,
            VariantArg::Quat => HopfVariant::Quat,
            VariantArg::Bloch => HopfVariant::Bloch,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotUnit { .. } | Error::NotPure { .. } | Error::ZeroVector => CliError::Domain(e.to_string()),
            Error::UnknownCheck(_) | Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
        }
    }
}

/// What a command produced: the output document and the exit code.
pub struct Output {
    pub document: serde_json::Value,
    pub code: i32,
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match execute(&cli, stdin, stderr) {
        Ok(output) => {
            let text = serde_json::to_string_pretty(&output.document).expect("JSON values always serialize");
            if writeln!(stdout, "{text}").is_err() {
                return EXIT_USAGE;
            }
            output.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Output, CliError> {
    let mut ctx = commands::Context { degrees: cli.degrees, stderr };
    match &cli.command {
        Command::Verify { checks, samples, seed, tolerance } => commands::verify(checks, *samples, *seed, *tolerance),
        Command::Convert { convention } => commands::convert(&mut ctx, &read_input(cli, stdin)?, *convention),
        Command::Rotate { convention } => commands::rotate(&mut ctx, &read_input(cli, stdin)?, *convention),
        Command::Hopf { variant } => commands::hopf(&read_input(cli, stdin)?, (*variant).into()),
        Command::Lift { variant } => commands::lift(&mut ctx, &read_input(cli, stdin)?, (*variant).into()),
        Command::Fiber { variant, count } => {
            commands::fiber(&mut ctx, &read_input(cli, stdin)?, (*variant).into(), *count)
        }
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    match &cli.input {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
        }
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}
