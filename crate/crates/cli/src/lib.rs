//! Command-line front end: rate reports, sweeps, figure data, coefficient
//! optimization, gap tables and lattice simulations.
//!
//! Every subcommand renders to a string; identical arguments give identical
//! bytes.

pub mod asymptotics;
pub mod channel;
pub mod error;
pub mod figures;
pub mod optimize;
pub mod rate;
pub mod schemes;
pub mod simulate;
pub mod sweep;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "scf-secrecy", version, about = "Secrecy rates of the untrusted-relay channel with a cooperative jammer")]
pub struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "THREADS")]
    pub threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Keep negative rates in CSV output.
    #[arg(long, global = true)]
    pub raw: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every scheme's rate at one configuration, as JSON.
    Rate(rate::RateArgs),
    /// Rates over a one-parameter grid, as CSV.
    Sweep(sweep::SweepArgs),
    /// Data behind one comparison figure, as CSV.
    Figure(figures::FigureArgs),
    /// Best coefficients and scaling ratio for an objective, as JSON.
    Optimize(optimize::OptimizeArgs),
    /// High-SNR gaps against their limits, as CSV.
    Asymptotics(asymptotics::AsymptoticsArgs),
    /// Lattice simulations, as JSON.
    #[command(subcommand)]
    Simulate(simulate::SimulateCommand),
}

/// Runs the parsed command and returns its output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Rate(a) => rate::run(a),
        Command::Sweep(a) => sweep::run(a, cli.raw),
        Command::Figure(a) => figures::run(a, cli.raw),
        Command::Optimize(a) => optimize::run(a),
        Command::Asymptotics(a) => asymptotics::run(a),
        Command::Simulate(c) => simulate::run(c),
    }
}

/// Sizes the global worker pool. Only the first call takes effect.
pub fn init_threads(threads: Option<usize>) -> Result<(), CliError> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(CliError::usage("--threads must be at least 1"));
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}
