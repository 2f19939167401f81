//! Exact mutual information between the message and the relay's decoded
//! combination, by enumeration of all equiprobable lattice points.

use std::collections::HashMap;

use serde::Serialize;

use super::chain::ScalarLatticeChain;
use super::modular::mod_int;
use crate::error::SimError;

/// Largest `m_s m_e m_b` enumerated.
pub const LEAKAGE_BUDGET: u128 = 1 << 20;

/// Whether the relay combination is reduced before it is observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Reduction {
    /// Modulo the source coarse lattice `m_s m_e Z`.
    ModCoarse,
    None,
}

/// `I(T; U)` in bits per dimension. `independent` is decided from the exact
/// counts, so `bits == 0.0` exactly when it is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Leakage {
    pub bits: f64,
    pub independent: bool,
    pub outcomes: usize,
}

/// Enumerates every `(T, V_A, V_B)` and computes `I(T; U)` with
/// `U = a1 (T + V_A) + a2 V_B`, optionally reduced modulo `m_s m_e`.
pub fn exhaustive_leakage(chain: &ScalarLatticeChain, reduce: Reduction) -> Result<Leakage, SimError> {
    if chain.dims != 1 {
        return Err(SimError::UnsupportedDims(chain.dims));
    }
    let total = chain.m_s as u128 * chain.m_e as u128 * chain.m_b as u128;
    if total > LEAKAGE_BUDGET {
        return Err(SimError::BudgetExceeded { required: total, budget: LEAKAGE_BUDGET });
    }
    let (a1, a2) = (chain.coeffs.a1, chain.coeffs.a2);
    let coarse = chain.coarse();

    let mut joint: HashMap<(i64, i64), u64> = HashMap::new();
    let mut marginal_u: HashMap<i64, u64> = HashMap::new();
    for t in 0..chain.m_s {
        for i in 0..chain.m_e {
            let v_a = chain.m_s * i;
            for v_b in 0..chain.m_b {
                let mut u = a1 * (t + v_a) + a2 * v_b;
                if reduce == Reduction::ModCoarse {
                    u = mod_int(u, coarse);
                }
                *joint.entry((t, u)).or_default() += 1;
                *marginal_u.entry(u).or_default() += 1;
            }
        }
    }

    // every message value is equally likely
    let c_t = (chain.m_e * chain.m_b) as u128;
    let mut bits = 0.0;
    let mut independent = true;
    let mut entries: Vec<_> = joint.into_iter().collect();
    entries.sort_unstable();
    for ((_, u), c_tu) in entries {
        let c_u = marginal_u[&u] as u128;
        let num = c_tu as u128 * total;
        let den = c_t * c_u;
        if num == den {
            continue;
        }
        independent = false;
        bits += c_tu as f64 / total as f64 * (num as f64 / den as f64).log2();
    }
    if independent {
        bits = 0.0;
    }
    Ok(Leakage { bits, independent, outcomes: marginal_u.len() })
}
