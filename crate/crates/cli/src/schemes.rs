use clap::ValueEnum;
use serde::Serialize;

use scf_secrecy::schemes::{combined_lower_bound_with, eve_rb_rate_with, lc_rate_with, rb_rate_with};
use scf_secrecy::{
    af_rate_sun, cf_rate_he, cnf_rate_he2, gaussian_capacity, mf_rate_zhang, perfect_rate_vatedka,
    secrecy_upper_bound, ChannelConfig, EveChannelConfig,
};

use crate::error::CliError;

/// Rate curves available to `rate`, `sweep` and `figure`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Scheme {
    /// Secrecy upper bound, capped by the relay link.
    Upper,
    /// Relay-limited capacity without secrecy, `min(C(P_A), C(P_R))`.
    Capacity,
    Rb,
    Lc,
    Combined,
    Sun,
    Zhang,
    He,
    He2,
    Vatedka,
    /// RB with an external eavesdropper, using the `--h*` gains.
    EveRb,
}

impl Scheme {
    pub const ALL: [Scheme; 11] = [
        Scheme::Upper,
        Scheme::Capacity,
        Scheme::Rb,
        Scheme::Lc,
        Scheme::Combined,
        Scheme::Sun,
        Scheme::Zhang,
        Scheme::He,
        Scheme::He2,
        Scheme::Vatedka,
        Scheme::EveRb,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Scheme::Upper => "upper",
            Scheme::Capacity => "capacity",
            Scheme::Rb => "rb",
            Scheme::Lc => "lc",
            Scheme::Combined => "combined",
            Scheme::Sun => "sun",
            Scheme::Zhang => "zhang",
            Scheme::He => "he",
            Scheme::He2 => "he2",
            Scheme::Vatedka => "vatedka",
            Scheme::EveRb => "eve_rb",
        }
    }

    /// Only defined for a jammer collocated with the destination.
    pub fn needs_collocated(&self) -> bool {
        matches!(self, Scheme::Sun | Scheme::Zhang)
    }

    /// Raw (possibly negative) rate. `he2` and `vatedka` are symmetric-power
    /// formulas and are evaluated at `P_A`.
    pub fn rate(&self, cfg: &ChannelConfig, eve: &EveChannelConfig, a_max: i64) -> Result<f64, CliError> {
        let c = |x: f64| gaussian_capacity(x).expect("powers are validated positive");
        Ok(match self {
            Scheme::Upper => secrecy_upper_bound(cfg)?.effective,
            Scheme::Capacity => c(cfg.p_a).min(c(cfg.p_r)),
            Scheme::Rb => rb_rate_with(cfg, a_max),
            Scheme::Lc => lc_rate_with(cfg, a_max),
            Scheme::Combined => combined_lower_bound_with(cfg, a_max),
            Scheme::Sun => af_rate_sun(cfg)?,
            Scheme::Zhang => mf_rate_zhang(cfg)?,
            Scheme::He => cf_rate_he(cfg),
            Scheme::He2 => cnf_rate_he2(cfg.p_a),
            Scheme::Vatedka => perfect_rate_vatedka(cfg.p_a),
            Scheme::EveRb => eve_rb_rate_with(eve, a_max),
        })
    }
}
