use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;

use scf_secrecy::lattice_sim::{
    binning_roundtrip, build_binning_code, exhaustive_leakage, run_trials, BinningCodeSpec, ChainSummary,
    Reduction, RelayMode, ScalarLatticeChain, Q,
};
use scf_secrecy::CoefficientPair;

use crate::error::CliError;

#[derive(Debug, Subcommand)]
pub enum SimulateCommand {
    /// Random transmissions through the encoder, relay and destination.
    Chain(ChainArgs),
    /// Exact leakage of the relay observation by enumeration.
    Leakage(LeakageArgs),
    /// Build a random binning code and round-trip messages through it.
    Binning(BinningArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Plain,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceArg {
    ModCoarse,
    None,
}

fn rational(s: &str) -> Result<Q, String> {
    s.parse::<Q>().map_err(|e| format!("{s:?} is not a rational p/q: {e}"))
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[arg(long)]
    pub ms: i64,
    #[arg(long)]
    pub me: i64,
    #[arg(long)]
    pub mb: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub a1: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub a2: i64,
    /// Source scaling as `p/q`.
    #[arg(long, default_value = "1", value_parser = rational)]
    pub beta_a: Q,
    /// Jammer scaling as `p/q`.
    #[arg(long, default_value = "1", value_parser = rational)]
    pub beta_b: Q,
    #[arg(long, default_value_t = 1)]
    pub dims: usize,
}

impl LatticeArgs {
    fn chain(&self) -> Result<ScalarLatticeChain, CliError> {
        let coeffs = CoefficientPair::new(self.a1, self.a2)?;
        Ok(ScalarLatticeChain::new(self.ms, self.me, self.mb, self.beta_a, self.beta_b, coeffs, self.dims)?)
    }
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[arg(long, value_enum, default_value = "chain")]
    pub mode: ModeArg,
    /// Add random rational dithers.
    #[arg(long)]
    pub dithered: bool,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct LeakageArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[arg(long, value_enum, default_value = "mod-coarse")]
    pub reduce: ReduceArg,
}

#[derive(Debug, Args)]
pub struct BinningArgs {
    /// Source symbols per block.
    #[arg(long)]
    pub l: u32,
    /// Source entropy in bits per symbol.
    #[arg(long, default_value_t = 1.0)]
    pub h: f64,
    /// Inner code dimension.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Transmission rate, bits per dimension.
    #[arg(long)]
    pub rt: f64,
    /// Randomization rate, bits per dimension.
    #[arg(long)]
    pub ro: f64,
    #[arg(long, default_value_t = 4)]
    pub inner_alphabet: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of messages sent; message `i` carries label `i mod bins`.
    #[arg(long, default_value_t = 256)]
    pub messages: u64,
}

#[derive(Debug, Serialize)]
struct LeakageReport {
    chain: ChainSummary,
    reduce: &'static str,
    leakage_bits: f64,
    independent: bool,
    outcomes: usize,
}

#[derive(Debug, Serialize)]
struct BinningReport {
    spec: BinningCodeSpec,
    inner_alphabet: u64,
    codeword_len: u32,
    codebook_size: u64,
    empty_bins: usize,
    empty_fraction: f64,
    messages: u64,
    mismatches: usize,
    empty_bin_events: usize,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

pub fn run(cmd: &SimulateCommand) -> Result<String, CliError> {
    match cmd {
        SimulateCommand::Chain(a) => {
            let chain = a.lattice.chain()?;
            let mode = match a.mode {
                ModeArg::Plain => RelayMode::Plain,
                ModeArg::Chain => RelayMode::Chain,
            };
            Ok(json(&run_trials(&chain, mode, a.dithered, a.trials, a.seed)?))
        }
        SimulateCommand::Leakage(a) => {
            let chain = a.lattice.chain()?;
            let (reduction, reduce) = match a.reduce {
                ReduceArg::ModCoarse => (Reduction::ModCoarse, "mod-coarse"),
                ReduceArg::None => (Reduction::None, "none"),
            };
            let l = exhaustive_leakage(&chain, reduction)?;
            Ok(json(&LeakageReport {
                chain: (&chain).into(),
                reduce,
                leakage_bits: l.bits,
                independent: l.independent,
                outcomes: l.outcomes,
            }))
        }
        SimulateCommand::Binning(a) => {
            let spec = BinningCodeSpec::new(a.l, a.h, a.n, a.rt, a.ro, a.seed)?;
            let code = build_binning_code(&spec, a.inner_alphabet)?;
            let bins = code.bin_count() as u64;
            let msgs: Vec<u64> = (0..a.messages).map(|i| i % bins).collect();
            let rt = binning_roundtrip(&code, &msgs, a.seed.wrapping_add(1))?;
            Ok(json(&BinningReport {
                spec,
                inner_alphabet: a.inner_alphabet,
                codeword_len: spec.codeword_len(),
                codebook_size: code.codebook_size(),
                empty_bins: code.empty_bins(),
                empty_fraction: code.empty_fraction(),
                messages: a.messages,
                mismatches: rt.mismatches(),
                empty_bin_events: rt.empty_bin_events(),
            }))
        }
    }
}
