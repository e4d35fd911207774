//! `fracheat`: simulate the time-fractional heat equation with the nonlinear
//! Neumann boundary flux u_x(1,t) = u(1,t)^p, detect and localize finite-time
//! blow-up, and run the verification suite.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical
//! failure (Newton divergence / step-size underflow).

mod commands;
mod manifest;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fracheat",
    version,
    about = "Fractional-order heat equation with nonlinear boundary flux: blow-up solver and verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the two-parameter Mittag-Leffler function E_{alpha,r}(z)
    Mlf(commands::mlf::MlfArgs),
    /// Solve the scalar blow-up problem D^alpha n = n^p, n(0) = n0
    Fode(commands::fode::FodeArgs),
    /// Solve the full initial-boundary value problem and diagnose blow-up
    Solve(commands::solve::SolveArgs),
    /// Run a grid of solves (cross product from a config file)
    Sweep(commands::sweep::SweepArgs),
    /// Run the verification suite over the canonical parameter grid
    Verify(commands::verify::VerifyArgs),
}

/// Commands report failures as (exit code, message).
pub type CmdResult = Result<(), (u8, String)>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Mlf(args) => commands::mlf::run(args),
        Command::Fode(args) => commands::fode::run(args),
        Command::Solve(args) => commands::solve::run(args),
        Command::Sweep(args) => commands::sweep::run(args),
        Command::Verify(args) => commands::verify::run(args),
    };
    match result {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

/// Shared flag: optional flat-JSON config file merged under the flags.
#[derive(clap::Args)]
pub struct ConfigArg {
    /// Flat JSON config file; flags take precedence over its values
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}
