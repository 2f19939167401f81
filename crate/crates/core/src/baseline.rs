//! Secrecy rates of the earlier schemes and the secrecy upper bound.
//!
//! These are comparison curves: amplify-and-forward (Sun et al.),
//! modulo-and-forward (Zhang et al.), compress-and-forward (He et al.), the
//! lattice compute-and-forward rate of He et al. and the perfect-secrecy rate
//! of Vatedka et al. Only the rate expressions are implemented.

use serde::Serialize;

use crate::error::RateError;
use crate::golden::golden_section_max;
use crate::model::{cap, ChannelConfig};

/// `C(x) = log2(1 + x) / 2`.
pub fn gaussian_capacity(x: f64) -> Result<f64, RateError> {
    if x < 0.0 || x.is_nan() {
        return Err(RateError::NegativeSnr(x));
    }
    Ok(cap(x))
}

/// The phase-1 secrecy upper bound, its correlation parameter, and the bound
/// combined with the relay-link capacity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UpperBoundResult {
    pub rho: f64,
    pub r_b: f64,
    /// `min(r_b, C(P_R))`.
    pub effective: f64,
}

/// Correlation coefficient of the upper bound.
///
/// Written as `2 P_A / (x + sqrt(x^2 - 4 P_A^2))` with
/// `x = 2 P_A + P_A P_B + P_B`, which is the textbook expression with the
/// cancelling square root rationalized away.
fn upper_bound_rho(p_a: f64, p_b: f64) -> f64 {
    let x = 2.0 * p_a + p_a * p_b + p_b;
    let radicand = 4.0 * p_b * p_a * p_a
        + 4.0 * p_b * p_a
        + p_b * p_b * p_a * p_a
        + 2.0 * p_b * p_b * p_a
        + p_b * p_b;
    2.0 * p_a / (x + radicand.sqrt())
}

fn upper_bound_phase1(p_a: f64, p_b: f64, rho: f64) -> f64 {
    // (P_A+1)(P_A+P_B+1) - (P_A+rho)^2 with the P_A^2 terms cancelled
    let num = p_a * p_b + 2.0 * p_a + p_b + 1.0 - 2.0 * p_a * rho - rho * rho;
    let den = (p_a + p_b + 1.0) * (1.0 - rho * rho);
    0.5 * (num / den).log2()
}

/// Secrecy upper bound of the untrusted-relay channel.
///
/// A zero jammer power makes the correlation formula 0/0; it returns
/// [`RateError::DegenerateJammer`], whose rate is 0 (see
/// [`secrecy_upper_bound_or_zero`]).
pub fn secrecy_upper_bound(cfg: &ChannelConfig) -> Result<UpperBoundResult, RateError> {
    if cfg.p_b == 0.0 {
        return Err(RateError::DegenerateJammer);
    }
    let rho = upper_bound_rho(cfg.p_a, cfg.p_b);
    let r_b = upper_bound_phase1(cfg.p_a, cfg.p_b, rho);
    Ok(UpperBoundResult { rho, r_b, effective: r_b.min(cap(cfg.p_r)) })
}

/// Like [`secrecy_upper_bound`] but maps a silent jammer to a zero bound.
pub fn secrecy_upper_bound_or_zero(cfg: &ChannelConfig) -> UpperBoundResult {
    secrecy_upper_bound(cfg).unwrap_or(UpperBoundResult { rho: 0.0, r_b: 0.0, effective: 0.0 })
}

fn require_collocated(cfg: &ChannelConfig) -> Result<(), RateError> {
    if cfg.sigma2 != 0.0 {
        return Err(RateError::JammerNotCollocated { sigma2: cfg.sigma2 });
    }
    Ok(())
}

/// Amplify-and-forward secrecy rate; only defined with the destination as
/// jammer.
pub fn af_rate_sun(cfg: &ChannelConfig) -> Result<f64, RateError> {
    require_collocated(cfg)?;
    let (pa, pb, pr) = (cfg.p_a, cfg.p_b, cfg.p_r);
    Ok(cap(pa * pr / (pa + pb + pr + 1.0)) - cap(pa / (pb + 1.0)))
}

/// Modulo-and-forward secrecy rate; only defined with the destination as
/// jammer.
pub fn mf_rate_zhang(cfg: &ChannelConfig) -> Result<f64, RateError> {
    require_collocated(cfg)?;
    let (pa, pb, pr) = (cfg.p_a, cfg.p_b, cfg.p_r);
    Ok(0.5 * ((pa + pr + pa * pr + 1.0) / (pa + pr + 2.0)).log2() - cap(pa / (pb + 1.0)))
}

/// Modulo-and-forward rate at `P_A = P_B = P_R = p`, simplified form.
pub fn mf_rate_zhang_symmetric(p: f64) -> f64 {
    cap(p) - 0.5 - 0.5 * (1.0 + p / (1.0 + p)).log2()
}

/// Compress-and-forward objective for transmit powers `p_a <= P_A`,
/// `p_b <= P_B`.
pub fn cf_he_objective(cfg: &ChannelConfig, p_a: f64, p_b: f64) -> f64 {
    let s2 = cfg.sigma2;
    let jam_to_dest = if s2 == 0.0 { 0.0 } else { p_b * s2 / (p_b + s2) };
    let sigma_c2 = (p_a + 1.0 + jam_to_dest) / cfg.p_r;
    let residual = if s2 == 0.0 { 0.0 } else { s2 * s2 / (p_b + s2) };
    let noise = (1.0 + s2 + sigma_c2) - residual;
    cap(p_a / noise) - cap(p_a / (1.0 + p_b))
}

/// Maximizer of the compress-and-forward objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeOptimum {
    pub rate: f64,
    pub p_a: f64,
    pub p_b: f64,
    pub evaluations: usize,
}

const HE_GRID: usize = 64;
const HE_DECADES: f64 = 12.0;
const HE_TOL: f64 = 1e-8;
const HE_MAX_SWEEPS: usize = 200;

/// Maximizes the compress-and-forward objective over
/// `(0, P_A] x (0, P_B]`.
///
/// A 64 x 64 grid, log-spaced over twelve decades below each power, locates
/// the basin; coordinate-wise golden-section passes (in log10 power, to
/// 1e-8 width) then polish it.
pub fn cf_he_optimum(cfg: &ChannelConfig) -> HeOptimum {
    let (ua_hi, ub_hi) = (cfg.p_a.log10(), cfg.p_b.log10());
    let (ua_lo, ub_lo) = (ua_hi - HE_DECADES, ub_hi - HE_DECADES);
    let step_a = HE_DECADES / (HE_GRID - 1) as f64;
    let step_b = step_a;
    let f = |ua: f64, ub: f64| cf_he_objective(cfg, 10f64.powf(ua), 10f64.powf(ub));

    let mut best = (ua_hi, ub_hi, f64::NEG_INFINITY);
    for i in 0..HE_GRID {
        let ua = ua_lo + step_a * i as f64;
        for j in 0..HE_GRID {
            let ub = ub_lo + step_b * j as f64;
            let v = f(ua, ub);
            if v > best.2 {
                best = (ua, ub, v);
            }
        }
    }
    let mut evaluations = HE_GRID * HE_GRID;

    let (mut ua, mut ub, mut value) = best;
    for _ in 0..HE_MAX_SWEEPS {
        let before = value;
        let m = golden_section_max(|x| f(x, ub), (ua - step_a).max(ua_lo), (ua + step_a).min(ua_hi), HE_TOL);
        evaluations += m.evaluations;
        if m.value > value {
            ua = m.x;
            value = m.value;
        }
        let m = golden_section_max(|y| f(ua, y), (ub - step_b).max(ub_lo), (ub + step_b).min(ub_hi), HE_TOL);
        evaluations += m.evaluations;
        if m.value > value {
            ub = m.x;
            value = m.value;
        }
        if value - before <= 1e-15 {
            break;
        }
    }
    HeOptimum { rate: value, p_a: 10f64.powf(ua), p_b: 10f64.powf(ub), evaluations }
}

/// Compress-and-forward secrecy rate (maximized over transmit powers).
pub fn cf_rate_he(cfg: &ChannelConfig) -> f64 {
    cf_he_optimum(cfg).rate
}

/// Compress-and-forward rate at `P_A = P_B = P_R = p`, `sigma2 = 0`, in
/// closed form.
pub fn cf_rate_he_symmetric(p: f64) -> f64 {
    0.5 * (2.0 + 1.0 / p + p).log2() - 1.0
}

/// Lattice compute-and-forward rate for the symmetric collocated channel.
pub fn cnf_rate_he2(p_a: f64) -> f64 {
    0.5 * (0.5 + p_a).log2() - 1.0
}

/// Perfect-secrecy rate for the symmetric collocated channel.
pub fn perfect_rate_vatedka(p_a: f64) -> f64 {
    cnf_rate_he2(p_a) - std::f64::consts::LOG2_E
}
