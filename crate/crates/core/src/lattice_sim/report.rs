use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::chain::{run_trial, RelayMode, ScalarLatticeChain};
use crate::error::SimError;

/// Chain parameters as written to reports; scalings are `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    pub m_s: i64,
    pub m_e: i64,
    pub m_b: i64,
    pub beta_a: String,
    pub beta_b: String,
    pub a1: i64,
    pub a2: i64,
    pub dims: usize,
}

impl From<&ScalarLatticeChain> for ChainSummary {
    fn from(c: &ScalarLatticeChain) -> Self {
        Self {
            m_s: c.m_s,
            m_e: c.m_e,
            m_b: c.m_b,
            beta_a: c.beta_a.to_string(),
            beta_b: c.beta_b.to_string(),
            a1: c.coeffs.a1,
            a2: c.coeffs.a2,
            dims: c.dims,
        }
    }
}

/// One simulation run, serialized as a JSON record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub chain: ChainSummary,
    pub mode: String,
    pub trials: u64,
    pub failures: u64,
    pub leakage_bits: Option<f64>,
    pub seed: u64,
}

/// Runs `trials` independent transmissions; trial `i` draws from a
/// generator seeded with `seed + i`.
pub fn run_trials(
    chain: &ScalarLatticeChain,
    mode: RelayMode,
    dithered: bool,
    trials: u64,
    seed: u64,
) -> Result<SimReport, SimError> {
    chain.check_nesting()?;
    let failures = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i));
            run_trial(chain, mode, dithered, &mut rng).map(|o| u64::from(!o.exact_match))
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(SimReport {
        chain: chain.into(),
        mode: match mode {
            RelayMode::Plain => "plain".into(),
            RelayMode::Chain => "chain".into(),
        },
        trials,
        failures,
        leakage_bits: None,
        seed,
    })
}
