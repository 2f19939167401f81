//! Scaled compute-and-forward rates for the untrusted-relay channel and for
//! the trusted relay with an external eavesdropper.
//!
//! Only the ratio `beta_A / beta_B` affects any rate here: every expression
//! is a ratio of quadratics in `beta`.

use serde::Serialize;

use crate::error::RateError;
use crate::model::{cap, ChannelConfig, CoefficientPair, EveChannelConfig, SCFDesign, ScalingPair};

/// Transmitter whose computation rate is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Node {
    A,
    B,
}

/// `N(a, beta)` with the powers given explicitly.
pub(crate) fn noise_raw(a: CoefficientPair, beta: ScalingPair, p_a: f64, p_b: f64) -> f64 {
    let sa = a.a1 as f64 * beta.beta_a;
    let sb = a.a2 as f64 * beta.beta_b;
    let diff = sa - sb;
    (p_a * p_b * diff * diff + sa * sa * p_a + sb * sb * p_b) / (p_a + p_b + 1.0)
}

/// Computation rates of both nodes with the powers given explicitly.
pub(crate) fn rates_raw(a: CoefficientPair, beta: ScalingPair, p_a: f64, p_b: f64) -> Result<(f64, f64), RateError> {
    let n = noise_raw(a, beta, p_a, p_b);
    if !(n > 0.0) {
        return Err(RateError::DegenerateNoise);
    }
    let ra = 0.5 * (beta.beta_a * beta.beta_a * p_a / n).log2();
    let rb = 0.5 * (beta.beta_b * beta.beta_b * p_b / n).log2();
    Ok((ra, rb))
}

/// Effective noise `N(a, beta)` seen when decoding `a1 x_A + a2 x_B`.
pub fn noise_term(a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> Result<f64, RateError> {
    let n = noise_raw(a, beta, cfg.p_a, cfg.p_b);
    if !(n > 0.0) {
        return Err(RateError::DegenerateNoise);
    }
    Ok(n)
}

/// Computation rate `log2(beta_i^2 P_i / N(a, beta)) / 2`; may be negative.
pub fn computation_rate(
    node: Node,
    a: CoefficientPair,
    beta: ScalingPair,
    cfg: &ChannelConfig,
) -> Result<f64, RateError> {
    let (ra, rb) = rates_raw(a, beta, cfg.p_a, cfg.p_b)?;
    Ok(match node {
        Node::A => ra,
        Node::B => rb,
    })
}

/// `R_CF^A + R_CF^B - C(P_A + P_B)`.
pub fn scf_objective(a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> Result<f64, RateError> {
    let (ra, rb) = rates_raw(a, beta, cfg.p_a, cfg.p_b)?;
    Ok(ra + rb - cap(cfg.p_a + cfg.p_b))
}

/// Upper bound `C(P_A + P_B) - R_t^B` on the leakage rate at the relay.
pub fn leakage_bound(cfg: &ChannelConfig, r_t_b: f64) -> Result<f64, RateError> {
    if r_t_b < 0.0 || r_t_b.is_nan() {
        return Err(RateError::NegativeRate(r_t_b));
    }
    Ok(cap(cfg.p_a + cfg.p_b) - r_t_b)
}

/// Noise level `sigma_bar` above which the jammer rate cap
/// `R_CF^B <= C(P_B / sigma^2)` can bind. Infinite when
/// `P_A P_B <= P_A + 1`.
pub fn sigma_threshold(cfg: &ChannelConfig) -> f64 {
    let d = cfg.p_a * cfg.p_b - cfg.p_a - 1.0;
    if d <= 0.0 {
        return f64::INFINITY;
    }
    (1.0 + (1.0 + cfg.p_a + cfg.p_b) / d).sqrt()
}

/// `N(a, beta, h)`: the effective noise with `P_i` replaced by `h_i^2 P_i`.
pub fn eve_noise_term(
    a: CoefficientPair,
    beta: ScalingPair,
    h: (f64, f64),
    cfg: &ChannelConfig,
) -> Result<f64, RateError> {
    let n = noise_raw(a, beta, h.0 * h.0 * cfg.p_a, h.1 * h.1 * cfg.p_b);
    if !(n > 0.0) {
        return Err(RateError::DegenerateNoise);
    }
    Ok(n)
}

/// Computation rate through gains `h = (h_A, h_B)`.
pub fn eve_computation_rate(
    node: Node,
    a: CoefficientPair,
    beta: ScalingPair,
    h: (f64, f64),
    cfg: &ChannelConfig,
) -> Result<f64, RateError> {
    let (ra, rb) = rates_raw(a, beta, h.0 * h.0 * cfg.p_a, h.1 * h.1 * cfg.p_b)?;
    Ok(match node {
        Node::A => ra,
        Node::B => rb,
    })
}

/// `C(h1'^2 P_A + h2'^2 P_B) - R_t^B`, the leakage bound at the eavesdropper.
pub fn eve_leakage_bound(cfg: &EveChannelConfig, r_t_b: f64) -> Result<f64, RateError> {
    if r_t_b < 0.0 || r_t_b.is_nan() {
        return Err(RateError::NegativeRate(r_t_b));
    }
    let (g1, g2) = cfg.gains.eavesdropper();
    Ok(cap(g1 * g1 * cfg.p_a + g2 * g2 * cfg.p_b) - r_t_b)
}

/// Rates induced by `(a, beta)` on the untrusted-relay channel. The leakage
/// bound assumes the jammer transmits at `max(R_CF^B, 0)`.
pub fn design(a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> Result<SCFDesign, RateError> {
    let (ra, rb) = rates_raw(a, beta, cfg.p_a, cfg.p_b)?;
    let sum = cap(cfg.p_a + cfg.p_b);
    Ok(SCFDesign {
        coeffs: a,
        scalings: beta,
        r_cf_a: ra,
        r_cf_b: rb,
        objective: ra + rb - sum,
        leakage_bound: sum - rb.max(0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A11: CoefficientPair = CoefficientPair::UNIT;

    fn beta(a: f64, b: f64) -> ScalingPair {
        ScalingPair::new(a, b).unwrap()
    }

    fn cfg(p_a: f64, p_b: f64) -> ChannelConfig {
        ChannelConfig::collocated(p_a, p_b, 1.0).unwrap()
    }

    #[test]
    fn noise_examples() {
        assert!((noise_term(A11, beta(1.0, 1.0), &cfg(1.0, 1.0)).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((noise_term(A11, beta(1.0, 1.0), &cfg(100.0, 100.0)).unwrap() - 200.0 / 201.0).abs() < 1e-13);
        let a = CoefficientPair::new(2, -3).unwrap();
        let base = noise_term(a, beta(0.7, 1.3), &cfg(5.0, 9.0)).unwrap();
        for c in [0.5, 2.0, 7.0] {
            let scaled = noise_term(a, beta(0.7, 1.3).scaled(c), &cfg(5.0, 9.0)).unwrap();
            assert!((scaled - c * c * base).abs() < 1e-12 * scaled);
        }
    }

    #[test]
    fn computation_rate_examples() {
        let r = computation_rate(Node::A, A11, beta(1.0, 1.0), &cfg(1.0, 1.0)).unwrap();
        assert!((r - 0.5 * 1.5f64.log2()).abs() < 1e-15);
        assert!((r - 0.292481).abs() < 1e-6);
        let mmse = computation_rate(Node::A, A11, beta(1.0, 100.0 / 101.0), &cfg(100.0, 100.0)).unwrap();
        assert!((mmse - cap(100.0)).abs() < 1e-12);
    }

    #[test]
    fn objective_example() {
        let v = scf_objective(A11, beta(1.0, 1.0), &cfg(100.0, 100.0)).unwrap();
        assert!((v - 2.825526).abs() < 1e-6);
        let neg = scf_objective(A11.negated(), beta(1.0, 1.0), &cfg(100.0, 100.0)).unwrap();
        assert_eq!(v, neg);
    }

    #[test]
    fn leakage_examples() {
        let c = cfg(100.0, 100.0);
        assert!((leakage_bound(&c, 3.3256).unwrap() - 0.499926).abs() < 1e-6);
        assert_eq!(leakage_bound(&c, cap(200.0)).unwrap(), 0.0);
        assert_eq!(leakage_bound(&c, 0.0).unwrap(), cap(200.0));
        assert_eq!(leakage_bound(&c, -1.0), Err(RateError::NegativeRate(-1.0)));
    }

    #[test]
    fn sigma_threshold_examples() {
        let c = cfg(100.0, 100.0);
        let s = sigma_threshold(&c);
        assert!((s - 1.010102).abs() < 1e-6);
        assert_eq!(sigma_threshold(&cfg(10.0, 1.0)), f64::INFINITY);
        let at_threshold = cap(100.0 / (s * s));
        let rb = computation_rate(Node::B, A11, beta(1.0, 100.0 / 101.0), &c).unwrap();
        assert!((at_threshold - 3.314750).abs() < 1e-6);
        assert!((at_threshold - rb).abs() < 1e-9);
    }

    #[test]
    fn eve_examples() {
        let c = cfg(1.0, 1.0);
        assert!((eve_noise_term(A11, beta(1.0, 1.0), (2.0, 1.0), &c).unwrap() - 5.0 / 6.0).abs() < 1e-15);
        let r = eve_computation_rate(Node::A, A11, beta(1.0, 1.0), (2.0, 1.0), &c).unwrap();
        assert!((r - 0.5 * (24.0f64 / 5.0).log2()).abs() < 1e-15);
        assert!((r - 1.131517).abs() < 1e-6);
        let unit = eve_computation_rate(Node::B, A11, beta(0.3, 1.0), (1.0, 1.0), &c).unwrap();
        assert_eq!(unit, computation_rate(Node::B, A11, beta(0.3, 1.0), &c).unwrap());
    }

    #[test]
    fn eve_leakage_examples() {
        use crate::model::EveGains;
        let gains = EveGains { h1p: 1.0, h2p: 2.0, ..EveGains::unit() };
        let e = EveChannelConfig::new(100.0, 100.0, 100.0, gains).unwrap();
        assert!((eve_leakage_bound(&e, 0.0).unwrap() - cap(500.0)).abs() < 1e-15);
        assert!((cap(500.0) - 4.484333).abs() < 1e-6);
        let unit = EveChannelConfig::new(100.0, 100.0, 100.0, EveGains::unit()).unwrap();
        assert_eq!(eve_leakage_bound(&unit, 1.0).unwrap(), leakage_bound(&unit.powers(), 1.0).unwrap());
    }

    #[test]
    fn design_is_consistent() {
        let c = cfg(100.0, 50.0);
        let d = design(A11, beta(0.9, 1.0), &c).unwrap();
        assert_eq!(d.objective, scf_objective(A11, beta(0.9, 1.0), &c).unwrap());
        assert!((d.r_cf_a + d.r_cf_b - cap(150.0) - d.objective).abs() < 1e-12);
    }
}
