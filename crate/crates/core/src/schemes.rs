//! Achievable secrecy rates of the rescaled-binning (RB) and
//! lattice-chain (LC) schemes, their closed-form special cases, and the rate
//! with an external eavesdropper.
//!
//! All rates are returned raw and may be negative; callers clamp for display.

use crate::error::RateError;
use crate::model::{cap, ChannelConfig, EveChannelConfig};
use crate::optimizer::{closed_form_optimum, search_coefficients, Objective, DEFAULT_A_MAX};
use crate::scf::sigma_threshold;

fn search_value(cfg: &ChannelConfig, a_max: i64, objective: Objective) -> f64 {
    search_coefficients(cfg, a_max, &objective)
        .expect("objective is feasible for every valid configuration")
        .value
}

/// True when the jammer-to-destination noise exceeds `sigma_bar`.
fn above_threshold(cfg: &ChannelConfig) -> bool {
    cfg.sigma() > sigma_threshold(cfg)
}

/// RB rate when the jammer rate cap binds:
/// `min(C(P_R)/C(P_A), 1) (C(P_A) + C(P_B/sigma^2) - C(P_A+P_B))`.
fn rb_high_noise(cfg: &ChannelConfig) -> f64 {
    let factor = (cap(cfg.p_r) / cap(cfg.p_a)).min(1.0);
    factor * (cap(cfg.p_a) + cap(cfg.p_b / cfg.sigma2) - cap(cfg.p_a + cfg.p_b))
}

/// Secrecy rate of the RB scheme with coefficient search bound `a_max`.
pub fn rb_rate_with(cfg: &ChannelConfig, a_max: i64) -> f64 {
    if above_threshold(cfg) {
        return rb_high_noise(cfg);
    }
    if cfg.p_r >= cfg.p_a {
        // R_CF^A <= C(P_A) <= C(P_R): the relay factor is identically 1
        return closed_form_optimum(cfg).value;
    }
    search_value(cfg, a_max, Objective::RelayLimited)
}

/// Secrecy rate of the RB scheme.
pub fn rb_rate(cfg: &ChannelConfig) -> f64 {
    rb_rate_with(cfg, DEFAULT_A_MAX)
}

fn lc_constrained(cfg: &ChannelConfig, a_max: i64) -> f64 {
    let limit = cap(cfg.p_b / cfg.sigma2);
    search_value(cfg, a_max, Objective::BRateCap(limit)).min(cap(cfg.p_r))
}

/// Secrecy rate of the LC scheme with coefficient search bound `a_max`.
pub fn lc_rate_with(cfg: &ChannelConfig, a_max: i64) -> f64 {
    if above_threshold(cfg) {
        lc_constrained(cfg, a_max)
    } else {
        closed_form_optimum(cfg).value.min(cap(cfg.p_r))
    }
}

/// Secrecy rate of the LC scheme.
pub fn lc_rate(cfg: &ChannelConfig) -> f64 {
    lc_rate_with(cfg, DEFAULT_A_MAX)
}

/// Best of the two schemes: the LC rate below `sigma_bar`, and above it the
/// larger of the constrained LC rate and the high-noise RB rate.
pub fn combined_lower_bound_with(cfg: &ChannelConfig, a_max: i64) -> f64 {
    if above_threshold(cfg) {
        lc_constrained(cfg, a_max).max(rb_high_noise(cfg))
    } else {
        lc_rate_with(cfg, a_max)
    }
}

pub fn combined_lower_bound(cfg: &ChannelConfig) -> f64 {
    combined_lower_bound_with(cfg, DEFAULT_A_MAX)
}

/// Rate of both schemes when the jammer is the destination and
/// `P_R >= P_A`.
pub fn corollary_collocated(cfg: &ChannelConfig) -> Result<f64, RateError> {
    if cfg.sigma2 != 0.0 {
        return Err(RateError::PreconditionViolated("sigma2 must be 0"));
    }
    if cfg.p_r < cfg.p_a {
        return Err(RateError::PreconditionViolated("p_r must be at least p_a"));
    }
    Ok(closed_form_optimum(cfg).value)
}

/// Rate of both schemes at `P_A = P_B = P_R = p`, `sigma2 = 0`:
/// `log2(1/2 + p) / 2 - 1/2`.
pub fn corollary_symmetric(p: f64) -> f64 {
    0.5 * (0.5 + p).log2() - 0.5
}

/// Secrecy rate of the RB scheme on the trusted-relay channel with an
/// external eavesdropper, with coefficient search bound `a_max`.
///
/// The relay-power factor only enters when `P_R < (h1^2 / h2^2) P_A`.
/// The relay-to-eavesdropper gain `h3` does not affect the rate.
pub fn eve_rb_rate_with(cfg: &EveChannelConfig, a_max: i64) -> f64 {
    let g = cfg.gains;
    let powers = cfg.powers();
    let objective = if cfg.p_r >= (g.h1 * g.h1) / (g.h2 * g.h2) * cfg.p_a {
        Objective::Eve(g)
    } else {
        Objective::EveRelayLimited(g)
    };
    search_value(&powers, a_max, objective)
}

pub fn eve_rb_rate(cfg: &EveChannelConfig) -> f64 {
    eve_rb_rate_with(cfg, DEFAULT_A_MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EveGains;

    #[test]
    fn rb_examples() {
        let sym = ChannelConfig::symmetric(100.0).unwrap();
        assert!((rb_rate(&sym) - 2.825526).abs() < 1e-6);
        let weak_relay = ChannelConfig::collocated(100.0, 100.0, 10.0).unwrap();
        let joint = rb_rate(&weak_relay);
        // the factor evaluated at the unconstrained optimum is a lower bound
        assert!(joint >= cap(10.0) / cap(100.0) * corollary_symmetric(100.0) - 1e-9);
        assert!((joint - 1.470819).abs() < 1e-5, "{joint}");
        let noisy = ChannelConfig::new(100.0, 100.0, 100.0, 1e12).unwrap();
        assert!(rb_rate(&noisy) < 0.0);
        assert!((rb_rate(&noisy) - (cap(100.0) - cap(200.0))).abs() < 1e-9);
    }

    #[test]
    fn lc_examples() {
        let sym = ChannelConfig::symmetric(100.0).unwrap();
        assert!((lc_rate(&sym) - 2.825526).abs() < 1e-6);
        let weak_relay = ChannelConfig::collocated(100.0, 100.0, 10.0).unwrap();
        assert!((lc_rate(&weak_relay) - cap(10.0)).abs() < 1e-12);
        assert!((cap(10.0) - 1.729716).abs() < 1e-6);
    }

    #[test]
    fn combined_examples() {
        let c = ChannelConfig::collocated(50.0, 20.0, 5.0).unwrap();
        assert_eq!(combined_lower_bound(&c), lc_rate(&c));
        let noisy = ChannelConfig::new(100.0, 100.0, 30.0, 10.0).unwrap();
        let comb = combined_lower_bound(&noisy);
        assert!(comb >= rb_rate(&noisy) - 1e-9);
        assert!(comb >= lc_rate(&noisy) - 1e-9);
    }

    #[test]
    fn collocated_corollary() {
        let c = ChannelConfig::symmetric(100.0).unwrap();
        assert!((corollary_collocated(&c).unwrap() - 2.825526).abs() < 1e-6);
        let asym = ChannelConfig::collocated(100.0, 10.0, 200.0).unwrap();
        let v = corollary_collocated(&asym).unwrap();
        assert!((v - 1.624148).abs() < 1e-6);
        assert!((v - rb_rate(&asym)).abs() < 1e-6);
        assert!((v - lc_rate(&asym)).abs() < 1e-6);
        let weak = ChannelConfig::collocated(100.0, 10.0, 50.0).unwrap();
        assert!(matches!(corollary_collocated(&weak), Err(RateError::PreconditionViolated(_))));
        let remote = ChannelConfig::new(100.0, 10.0, 200.0, 1.0).unwrap();
        assert!(corollary_collocated(&remote).is_err());
    }

    #[test]
    fn symmetric_corollary() {
        assert!((corollary_symmetric(100.0) - 2.825526).abs() < 1e-6);
        assert_eq!(corollary_symmetric(3.5), 0.5);
        for p in [0.3, 1.0, 100.0, 1e6] {
            let c = ChannelConfig::symmetric(p).unwrap();
            assert!((corollary_symmetric(p) - corollary_collocated(&c).unwrap()).abs() < 1e-9);
            assert!((corollary_symmetric(p) - crate::baseline::cnf_rate_he2(p) - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn eve_examples() {
        let unit = EveChannelConfig::new(100.0, 100.0, 100.0, EveGains::unit()).unwrap();
        let v = eve_rb_rate(&unit);
        assert!((v - 2.825526).abs() < 1e-6);
        assert!((v - rb_rate(&unit.powers())).abs() < 1e-6);
        let leaky = EveGains { h1p: 0.01, h2p: 0.01, ..EveGains::unit() };
        let weak = EveChannelConfig::new(100.0, 100.0, 100.0, leaky).unwrap();
        assert!(eve_rb_rate(&weak) <= 0.0);
        for h3 in [0.1, 10.0] {
            let g = EveGains { h3, ..EveGains::unit() };
            assert_eq!(eve_rb_rate(&EveChannelConfig::new(100.0, 100.0, 100.0, g).unwrap()), v);
        }
    }

    #[test]
    fn eve_rate_decreases_in_h2p() {
        let mut last = f64::INFINITY;
        for i in 0..=20 {
            let h2p = 1.0 + 0.1 * i as f64;
            let g = EveGains { h2p, ..EveGains::unit() };
            let v = eve_rb_rate(&EveChannelConfig::new(100.0, 100.0, 100.0, g).unwrap());
            assert!(v <= last + 1e-9, "h2p={h2p}: {v} > {last}");
            last = v;
        }
    }
}
