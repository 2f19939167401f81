//! Exact-arithmetic simulation of the lattice encoders over one-dimensional
//! nested integer lattices, with enumeration-based leakage and a random
//! binning code.

mod binning;
mod chain;
mod leakage;
mod modular;
mod report;

/// Exact rational scalar.
pub type Q = num_rational::Ratio<i64>;

pub use binning::{binning_roundtrip, build_binning_code, BinningCode, BinningCodeSpec, RoundTrip, BINNING_BUDGET};
pub use chain::{
    destination_recover, encode_jammer, encode_source, lattice_point, relay_combine, relay_modulo, run_trial,
    RelayMode, ScalarLatticeChain, SimOutcome, DITHER_DENOMINATOR,
};
pub use leakage::{exhaustive_leakage, Leakage, Reduction, LEAKAGE_BUDGET};
pub use modular::mod_lattice;
pub use report::{run_trials, ChainSummary, SimReport};
