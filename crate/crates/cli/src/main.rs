//! `hartogs` — construct, audit and explore an analytic disc family in the
//! complex projective plane.
//!
//! Exit codes: 0 all audits pass, 1 an audit failed, 2 configuration or IO
//! error.

mod commands;
mod config;
mod csv_out;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// A refused configuration, unreadable file, or malformed flag. Always exit
/// code 2; audit failures are reported results, not errors.
#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }

    fn from_core_config(e: hartogs_core::Error) -> Self {
        CliError {
            message: e.to_string(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "hartogs",
    version,
    about = "Analytic disc families on a quadric: point clouds, audits, curve intersections, function continuation"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// JSON run configuration.
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Also write the primary artifact here (reports echo to stdout).
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Override the config seed.
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
    /// Override a named tolerance; repeatable.
    #[arg(long = "tolerance", value_name = "NAME=VALUE")]
    tolerance: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample the figure and the smoothed disc into a CSV point cloud.
    Construct {
        #[command(flatten)]
        common: Common,
        /// Samples per chart direction (base count, cylinder levels and
        /// points per circle all use this).
        #[arg(long, value_name = "N")]
        density: Option<usize>,
    },
    /// Run the audit manifest and emit an audit report.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Minimize curve polynomials over the smoothed disc.
    Intersect {
        #[command(flatten)]
        common: Common,
        /// Curve polynomial, e.g. "z3" or "z1^2 - (0.3+0.1i)*z2*z3".
        #[arg(long, value_name = "SPEC")]
        curve: Option<String>,
        /// Draw this many random curves instead of --curve.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        /// Largest degree for --random draws.
        #[arg(long, value_name = "D", default_value_t = 3)]
        max_degree: u32,
    },
    /// Sweep rational function elements across the disc family.
    Continue {
        #[command(flatten)]
        common: Common,
        /// Element "NUM / DEN" in homogeneous coordinates, or the aliases
        /// "clean" and "pole". Omitted: both defaults run.
        #[arg(long, value_name = "SPEC")]
        function: Option<String>,
    },
}

type Action = Box<dyn FnOnce(&commands::Effective) -> Result<i32, CliError>>;

fn run(cli: Cli) -> Result<i32, CliError> {
    let (common, action): (&Common, Action) = match &cli.cmd {
        Cmd::Construct { common, density } => {
            let density = *density;
            (
                common,
                Box::new(move |eff| commands::cmd_construct(eff, density)),
            )
        }
        Cmd::Verify { common } => (common, Box::new(commands::cmd_verify)),
        Cmd::Intersect {
            common,
            curve,
            random,
            max_degree,
        } => {
            let curve = curve.clone();
            let random = *random;
            let max_degree = *max_degree;
            (
                common,
                Box::new(move |eff| {
                    commands::cmd_intersect(eff, curve.as_deref(), random, max_degree)
                }),
            )
        }
        Cmd::Continue { common, function } => {
            let function = function.clone();
            (
                common,
                Box::new(move |eff| commands::cmd_continue(eff, function.as_deref())),
            )
        }
    };
    let eff = commands::load_effective(
        &common.config,
        common.output.clone(),
        common.seed,
        &common.tolerance,
    )?;
    action(&eff)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
