//! Channel configurations and the value types shared by every rate module.
//!
//! All quantities are linear (SNR with unit noise); decibels only appear at
//! the command-line boundary through [`db_to_linear`].

use num_integer::Integer;
use serde::Serialize;

use crate::error::ConfigError;

/// `C(x) = log2(1 + x) / 2`, the AWGN capacity at SNR `x`.
#[inline]
pub(crate) fn cap(x: f64) -> f64 {
    0.5 * x.ln_1p() / std::f64::consts::LN_2
}

/// Converts decibels to a linear ratio. Negative infinity maps to exactly 0.
pub fn db_to_linear(x_db: f64) -> f64 {
    if x_db == f64::NEG_INFINITY {
        0.0
    } else {
        10f64.powf(x_db / 10.0)
    }
}

/// Inverse of [`db_to_linear`]; 0 maps to negative infinity.
pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

fn positive(field: &'static str, value: f64) -> Result<(), ConfigError> {
    if !value.is_finite() {
        return Err(ConfigError::NonFinite { field, value });
    }
    if value <= 0.0 {
        return Err(ConfigError::NonPositivePower { field, value });
    }
    Ok(())
}

fn positive_gain(field: &'static str, value: f64) -> Result<(), ConfigError> {
    if !value.is_finite() {
        return Err(ConfigError::NonFinite { field, value });
    }
    if value <= 0.0 {
        return Err(ConfigError::NonPositiveGain { field, value });
    }
    Ok(())
}

/// Untrusted-relay channel: source, jammer and relay powers plus the noise
/// variance on the jammer-to-destination link.
///
/// `sigma2 = 0` encodes a jammer collocated with the destination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelConfig {
    pub p_a: f64,
    pub p_b: f64,
    pub p_r: f64,
    pub sigma2: f64,
}

impl ChannelConfig {
    pub fn new(p_a: f64, p_b: f64, p_r: f64, sigma2: f64) -> Result<Self, ConfigError> {
        let cfg = Self { p_a, p_b, p_r, sigma2 };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Collocated jammer and destination (`sigma2 = 0`).
    pub fn collocated(p_a: f64, p_b: f64, p_r: f64) -> Result<Self, ConfigError> {
        Self::new(p_a, p_b, p_r, 0.0)
    }

    /// `P_A = P_B = P_R = p`, `sigma2 = 0`.
    pub fn symmetric(p: f64) -> Result<Self, ConfigError> {
        Self::new(p, p, p, 0.0)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        positive("p_a", self.p_a)?;
        positive("p_b", self.p_b)?;
        positive("p_r", self.p_r)?;
        if !self.sigma2.is_finite() {
            return Err(ConfigError::NonFinite { field: "sigma2", value: self.sigma2 });
        }
        if self.sigma2 < 0.0 {
            return Err(ConfigError::NegativeSigma { value: self.sigma2 });
        }
        Ok(())
    }

    /// Standard deviation of the jammer-to-destination noise.
    pub fn sigma(&self) -> f64 {
        self.sigma2.sqrt()
    }
}

/// Gains of the trusted-relay channel with an external eavesdropper.
///
/// `h1, h2` reach the relay, `h1p, h2p` reach the eavesdropper in the first
/// phase and `h3` carries the relay signal to the eavesdropper.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EveGains {
    pub h1: f64,
    pub h2: f64,
    pub h1p: f64,
    pub h2p: f64,
    pub h3: f64,
}

impl EveGains {
    pub fn unit() -> Self {
        Self { h1: 1.0, h2: 1.0, h1p: 1.0, h2p: 1.0, h3: 1.0 }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        positive_gain("h1", self.h1)?;
        positive_gain("h2", self.h2)?;
        positive_gain("h1p", self.h1p)?;
        positive_gain("h2p", self.h2p)?;
        positive_gain("h3", self.h3)
    }

    /// Gains toward the relay, `(h1, h2)`.
    pub fn relay(&self) -> (f64, f64) {
        (self.h1, self.h2)
    }

    /// Gains toward the eavesdropper, `(h1', h2')`.
    pub fn eavesdropper(&self) -> (f64, f64) {
        (self.h1p, self.h2p)
    }
}

/// Powers and gains of the external-eavesdropper model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EveChannelConfig {
    pub p_a: f64,
    pub p_b: f64,
    pub p_r: f64,
    pub gains: EveGains,
}

impl EveChannelConfig {
    pub fn new(p_a: f64, p_b: f64, p_r: f64, gains: EveGains) -> Result<Self, ConfigError> {
        let cfg = Self { p_a, p_b, p_r, gains };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        positive("p_a", self.p_a)?;
        positive("p_b", self.p_b)?;
        positive("p_r", self.p_r)?;
        self.gains.validate()
    }

    /// The powers viewed as an untrusted-relay configuration with `sigma2 = 0`.
    pub fn powers(&self) -> ChannelConfig {
        ChannelConfig { p_a: self.p_a, p_b: self.p_b, p_r: self.p_r, sigma2: 0.0 }
    }
}

/// Integer coefficients `(a1, a2)` of the decoded linear combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoefficientPair {
    pub a1: i64,
    pub a2: i64,
}

impl CoefficientPair {
    pub const UNIT: CoefficientPair = CoefficientPair { a1: 1, a2: 1 };

    pub fn new(a1: i64, a2: i64) -> Result<Self, ConfigError> {
        if a1 == 0 || a2 == 0 {
            return Err(ConfigError::ZeroCoefficient { a1, a2 });
        }
        Ok(Self { a1, a2 })
    }

    /// Flips the global sign so that `a1 > 0`. The rates only see squares.
    pub fn canonical(self) -> Self {
        if self.a1 < 0 {
            Self { a1: -self.a1, a2: -self.a2 }
        } else {
            self
        }
    }

    pub fn negated(self) -> Self {
        Self { a1: -self.a1, a2: -self.a2 }
    }

    /// True when `gcd(|a1|, |a2|) = 1`.
    pub fn is_reduced(&self) -> bool {
        self.a1.abs().gcd(&self.a2.abs()) == 1
    }

    /// All canonical, gcd-reduced pairs with `1 <= a1 <= a_max` and
    /// `0 < |a2| <= a_max`, ordered by `(a1, |a2|)` with positive `a2` first.
    pub fn enumerate(a_max: i64) -> Vec<CoefficientPair> {
        let mut out = Vec::new();
        for a1 in 1..=a_max {
            for mag in 1..=a_max {
                for a2 in [mag, -mag] {
                    let pair = CoefficientPair { a1, a2 };
                    if pair.is_reduced() {
                        out.push(pair);
                    }
                }
            }
        }
        out
    }
}

/// Positive scaling coefficients `(beta_A, beta_B)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingPair {
    pub beta_a: f64,
    pub beta_b: f64,
}

impl ScalingPair {
    pub fn new(beta_a: f64, beta_b: f64) -> Result<Self, ConfigError> {
        for (field, value) in [("beta_a", beta_a), ("beta_b", beta_b)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ConfigError::NonPositiveScaling { field, value });
            }
        }
        Ok(Self { beta_a, beta_b })
    }

    /// `(t, 1)`; only the ratio `beta_A / beta_B` affects any rate.
    pub fn from_ratio(t: f64) -> Self {
        Self { beta_a: t, beta_b: 1.0 }
    }

    pub fn ratio(&self) -> f64 {
        self.beta_a / self.beta_b
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self { beta_a: self.beta_a * c, beta_b: self.beta_b * c }
    }
}

/// A chosen `(a, beta)` together with the rates it induces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SCFDesign {
    pub coeffs: CoefficientPair,
    pub scalings: ScalingPair,
    /// Computation rate of the source, bits per channel use.
    pub r_cf_a: f64,
    /// Computation rate of the jammer, bits per channel use.
    pub r_cf_b: f64,
    /// `R_CF^A + R_CF^B - C(P_A + P_B)`.
    pub objective: f64,
    /// Upper bound on the leakage rate when the jammer transmits at `r_cf_b`.
    pub leakage_bound: f64,
}

/// One row of a sweep: the abscissa and one rate per scheme.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub x: f64,
    pub rates: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error("row has {got} values, expected {expected}")]
    RowWidth { expected: usize, got: usize },
    #[error("x values must be strictly increasing ({prev} then {next})")]
    NotIncreasing { prev: f64, next: f64 },
}

/// Rate-versus-parameter table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub x_label: String,
    pub scheme_labels: Vec<String>,
    rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn new(x_label: impl Into<String>, scheme_labels: Vec<String>) -> Self {
        Self { x_label: x_label.into(), scheme_labels, rows: Vec::new() }
    }

    pub fn push(&mut self, x: f64, rates: Vec<f64>) -> Result<(), SweepError> {
        if rates.len() != self.scheme_labels.len() {
            return Err(SweepError::RowWidth { expected: self.scheme_labels.len(), got: rates.len() });
        }
        if let Some(last) = self.rows.last() {
            if !(x > last.x) {
                return Err(SweepError::NotIncreasing { prev: last.x, next: x });
            }
        }
        self.rows.push(SweepRow { x, rates });
        Ok(())
    }

    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    /// Values of one scheme column, in row order.
    pub fn column(&self, label: &str) -> Option<Vec<f64>> {
        let idx = self.scheme_labels.iter().position(|l| l == label)?;
        Some(self.rows.iter().map(|r| r.rates[idx]).collect())
    }

    /// CSV with fixed 6-decimal formatting. Rates are floored at 0 unless
    /// `raw` is set; abscissas are written as-is.
    pub fn to_csv(&self, raw: bool) -> String {
        let mut out = String::new();
        out.push_str(&self.x_label);
        for label in &self.scheme_labels {
            out.push(',');
            out.push_str(label);
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fixed6(row.x));
            for &v in &row.rates {
                out.push(',');
                let v = if raw { v } else { clamp_rate(v) };
                out.push_str(&fixed6(v));
            }
            out.push('\n');
        }
        out
    }
}

/// `max(0, v)` without producing a negative zero.
pub fn clamp_rate(v: f64) -> f64 {
    if v > 0.0 {
        v
    } else {
        0.0
    }
}

/// Fixed 6-decimal rendering that never prints `-0.000000`.
pub fn fixed6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}
