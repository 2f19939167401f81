//! High-SNR gaps between achievable rates and the relay-limited capacity
//! `min(C(P_A), C(P_R))`, with `P_B = alpha P_A` and `P_A` growing, and the
//! limiting values those gaps approach.

use rayon::prelude::*;
use serde::Serialize;

use crate::baseline::{af_rate_sun, cf_rate_he, mf_rate_zhang, secrecy_upper_bound};
use crate::error::ConfigError;
use crate::model::{cap, ChannelConfig};
use crate::schemes::{lc_rate, rb_rate};

/// Residuals may grow by this much between consecutive points and still
/// count as shrinking; covers optimizer noise once a gap has converged.
pub const MONOTONE_SLACK: f64 = 1e-6;

/// Row of the gap table: the converse gap `G0` or one scheme's gap `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TableRow {
    UpperBound,
    Rb,
    Lc,
    HeCf,
    ZhangMf,
    SunAf,
}

impl TableRow {
    pub const ALL: [TableRow; 6] =
        [TableRow::UpperBound, TableRow::Rb, TableRow::Lc, TableRow::HeCf, TableRow::ZhangMf, TableRow::SunAf];

    pub fn label(&self) -> &'static str {
        match self {
            TableRow::UpperBound => "upper_bound",
            TableRow::Rb => "rb",
            TableRow::Lc => "lc",
            TableRow::HeCf => "he_cf",
            TableRow::ZhangMf => "zhang_mf",
            TableRow::SunAf => "sun_af",
        }
    }
}

/// Column of the gap table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    /// `P_R = gamma P_A` with `gamma < 1`.
    GammaLt1,
    /// `P_R = gamma P_A` with `gamma >= 1`.
    GammaGe1,
    /// `P_R` held constant.
    FixedPr,
}

/// How the relay power follows `P_A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RelayMode {
    Proportional { gamma: f64 },
    Fixed { p_r: f64 },
}

/// A family of configurations `P_B = alpha P_A`, `sigma2 = 0`, indexed by
/// an increasing list of `P_A`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticScenario {
    pub alpha: f64,
    pub relay: RelayMode,
    p_a_list: Vec<f64>,
}

impl AsymptoticScenario {
    pub fn new(alpha: f64, relay: RelayMode, p_a_list: Vec<f64>) -> Result<Self, ConfigError> {
        let param = match relay {
            RelayMode::Proportional { gamma } => gamma,
            RelayMode::Fixed { p_r } => p_r,
        };
        if !(alpha.is_finite() && alpha > 0.0 && param.is_finite() && param > 0.0) {
            return Err(ConfigError::InvalidScenario("alpha, gamma and p_r must be positive and finite"));
        }
        if p_a_list.len() < 2 {
            return Err(ConfigError::InvalidScenario("need at least two P_A values"));
        }
        if !(p_a_list[0] > 0.0) || p_a_list.windows(2).any(|w| !(w[1] > w[0])) || !p_a_list.iter().all(|p| p.is_finite())
        {
            return Err(ConfigError::InvalidScenario("P_A values must be positive, finite and strictly increasing"));
        }
        Ok(Self { alpha, relay, p_a_list })
    }

    pub fn p_a_list(&self) -> &[f64] {
        &self.p_a_list
    }

    pub fn regime(&self) -> Regime {
        match self.relay {
            RelayMode::Proportional { gamma } if gamma < 1.0 => Regime::GammaLt1,
            RelayMode::Proportional { .. } => Regime::GammaGe1,
            RelayMode::Fixed { .. } => Regime::FixedPr,
        }
    }

    /// The configuration at source power `p_a`.
    pub fn config_at(&self, p_a: f64) -> ChannelConfig {
        let p_r = match self.relay {
            RelayMode::Proportional { gamma } => gamma * p_a,
            RelayMode::Fixed { p_r } => p_r,
        };
        ChannelConfig { p_a, p_b: self.alpha * p_a, p_r, sigma2: 0.0 }
    }
}

fn relay_limited_capacity(cfg: &ChannelConfig) -> f64 {
    cap(cfg.p_a).min(cap(cfg.p_r))
}

fn gap_at(row: TableRow, cfg: &ChannelConfig) -> f64 {
    let rate = match row {
        TableRow::UpperBound => secrecy_upper_bound(cfg).map_or(0.0, |u| u.effective),
        TableRow::Rb => rb_rate(cfg),
        TableRow::Lc => lc_rate(cfg),
        TableRow::HeCf => cf_rate_he(cfg),
        TableRow::ZhangMf => mf_rate_zhang(cfg).expect("scenarios have sigma2 = 0"),
        TableRow::SunAf => af_rate_sun(cfg).expect("scenarios have sigma2 = 0"),
    };
    relay_limited_capacity(cfg) - rate
}

/// `min(C(P_A), C(P_R)) - min(R_b, C(P_R))` at each `P_A` of the scenario.
pub fn gap_g0(scenario: &AsymptoticScenario) -> Vec<f64> {
    gap_g(TableRow::UpperBound, scenario)
}

/// `min(C(P_A), C(P_R))` minus the row's rate at each `P_A`.
pub fn gap_g(row: TableRow, scenario: &AsymptoticScenario) -> Vec<f64> {
    scenario.p_a_list.par_iter().map(|&p| gap_at(row, &scenario.config_at(p))).collect()
}

/// Limiting gap of a table cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Reference {
    Value(f64),
    /// The limit is only known to lie in `[lo, hi]`.
    Interval { lo: f64, hi: f64 },
}

impl Reference {
    /// Distance from `x` to the reference value or interval.
    pub fn distance(&self, x: f64) -> f64 {
        match *self {
            Reference::Value(v) => (x - v).abs(),
            Reference::Interval { lo, hi } => (lo - x).max(x - hi).max(0.0),
        }
    }
}

/// Limiting gap of a cell as `P_A` grows. `gamma` is read for the
/// proportional regimes and `p_r` for the fixed one.
///
/// The RB cell for `gamma < 1` carries the factor `C(P_R)/C(P_A)`, which
/// tends to 1; the limit is returned. The compress-and-forward cell for
/// `gamma >= 1` is an interval.
pub fn table1_reference(row: TableRow, regime: Regime, alpha: f64, gamma: f64, p_r: f64) -> Reference {
    let c_inv_alpha = cap(1.0 / alpha);
    let v = match (row, regime) {
        (TableRow::UpperBound, Regime::GammaGe1) => c_inv_alpha,
        (TableRow::UpperBound, _) => 0.0,
        (TableRow::Rb, Regime::FixedPr) => 0.0,
        (TableRow::Rb, _) => c_inv_alpha,
        (TableRow::Lc, Regime::GammaGe1) => c_inv_alpha,
        (TableRow::Lc, _) => 0.0,
        (TableRow::HeCf, Regime::GammaLt1) => c_inv_alpha + cap(gamma),
        (TableRow::HeCf, Regime::GammaGe1) => {
            return Reference::Interval { lo: c_inv_alpha, hi: c_inv_alpha + cap(1.0 / gamma) }
        }
        (TableRow::HeCf, Regime::FixedPr) => 0.0,
        (TableRow::ZhangMf, Regime::GammaLt1) => c_inv_alpha + cap(gamma),
        (TableRow::ZhangMf, Regime::GammaGe1) => c_inv_alpha + cap(1.0 / gamma),
        (TableRow::ZhangMf, Regime::FixedPr) => c_inv_alpha,
        (TableRow::SunAf, Regime::GammaLt1) => c_inv_alpha + cap(gamma + alpha),
        (TableRow::SunAf, Regime::GammaGe1) => c_inv_alpha + cap((alpha + 1.0) / gamma),
        (TableRow::SunAf, Regime::FixedPr) => c_inv_alpha + cap(alpha * p_r / (p_r + alpha + 1.0)),
    };
    Reference::Value(v)
}

/// Reference of the cell a scenario falls in.
pub fn scenario_reference(row: TableRow, scenario: &AsymptoticScenario) -> Reference {
    let (gamma, p_r) = match scenario.relay {
        RelayMode::Proportional { gamma } => (gamma, f64::NAN),
        RelayMode::Fixed { p_r } => (f64::NAN, p_r),
    };
    table1_reference(row, scenario.regime(), scenario.alpha, gamma, p_r)
}

/// Outcome of a convergence check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub row: TableRow,
    pub regime: Regime,
    pub reference: Reference,
    pub gaps: Vec<f64>,
    /// Distance of each gap to the reference.
    pub residuals: Vec<f64>,
    pub pass: bool,
}

/// Passes when the gap at the largest `P_A` is within `tolerance` of the
/// reference and the residuals over the last three points do not grow (up
/// to [`MONOTONE_SLACK`]). The `P_A` list must span at least four decades.
pub fn convergence_check(
    row: TableRow,
    scenario: &AsymptoticScenario,
    tolerance: f64,
) -> Result<ConvergenceReport, ConfigError> {
    let list = scenario.p_a_list();
    if (list[list.len() - 1] / list[0]).log10() < 4.0 - 1e-12 {
        return Err(ConfigError::InvalidScenario("P_A values must span at least four decades"));
    }
    let reference = scenario_reference(row, scenario);
    let gaps = gap_g(row, scenario);
    let residuals: Vec<f64> = gaps.iter().map(|&g| reference.distance(g)).collect();
    let tail = &residuals[residuals.len().saturating_sub(3)..];
    let shrinking = tail.windows(2).all(|w| w[1] <= w[0] + MONOTONE_SLACK);
    let pass = residuals[residuals.len() - 1] <= tolerance && shrinking;
    Ok(ConvergenceReport { row, regime: scenario.regime(), reference, gaps, residuals, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    const HIGH: [f64; 3] = [1e4, 1e6, 1e8];

    fn scenario(relay: RelayMode) -> AsymptoticScenario {
        AsymptoticScenario::new(1.0, relay, HIGH.to_vec()).unwrap()
    }

    #[test]
    fn scenario_validation() {
        let prop = RelayMode::Proportional { gamma: 1.0 };
        assert!(AsymptoticScenario::new(1.0, prop, vec![1e4]).is_err());
        assert!(AsymptoticScenario::new(1.0, prop, vec![1e6, 1e4]).is_err());
        assert!(AsymptoticScenario::new(0.0, prop, vec![1e4, 1e6]).is_err());
        let s = scenario(RelayMode::Proportional { gamma: 0.5 });
        assert_eq!(s.regime(), Regime::GammaLt1);
        assert_eq!(s.config_at(10.0).p_r, 5.0);
    }

    #[test]
    fn g0_examples() {
        let g = gap_g0(&scenario(RelayMode::Proportional { gamma: 1.0 }));
        assert!((g[2] - 0.5).abs() < 0.01);
        let g = gap_g0(&scenario(RelayMode::Proportional { gamma: 0.5 }));
        assert!(g[2].abs() < 0.01);
        let g = gap_g0(&scenario(RelayMode::Fixed { p_r: 100.0 }));
        assert!(g[2].abs() < 0.01);
    }

    #[test]
    fn g_examples() {
        let g = gap_g(TableRow::Lc, &scenario(RelayMode::Proportional { gamma: 0.5 }));
        assert!(g[2].abs() < 0.01);
        let g = gap_g(TableRow::Lc, &scenario(RelayMode::Proportional { gamma: 2.0 }));
        assert!((g[2] - 0.5).abs() < 0.01);
        let g = gap_g(TableRow::ZhangMf, &scenario(RelayMode::Proportional { gamma: 1.0 }));
        assert!((g[2] - 1.0).abs() < 0.02);
    }

    #[test]
    fn reference_examples() {
        assert_eq!(table1_reference(TableRow::Rb, Regime::GammaLt1, 1.0, 0.5, f64::NAN), Reference::Value(0.5));
        let Reference::Value(sun) = table1_reference(TableRow::SunAf, Regime::FixedPr, 1.0, f64::NAN, 100.0) else {
            panic!("value cell")
        };
        assert!((sun - (0.5 + cap(100.0 / 102.0))).abs() < 1e-15);
        assert_eq!(table1_reference(TableRow::Lc, Regime::GammaLt1, 3.0, 0.2, f64::NAN), Reference::Value(0.0));
        assert!(matches!(
            table1_reference(TableRow::HeCf, Regime::GammaGe1, 1.0, 2.0, f64::NAN),
            Reference::Interval { .. }
        ));
    }

    #[test]
    fn convergence_examples() {
        let r = convergence_check(TableRow::Lc, &scenario(RelayMode::Proportional { gamma: 1.0 }), 0.02).unwrap();
        assert!(r.pass, "{r:?}");
        let r = convergence_check(TableRow::SunAf, &scenario(RelayMode::Proportional { gamma: 1.0 }), 0.05).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.reference, Reference::Value(0.5 + cap(2.0)));
        let narrow = AsymptoticScenario::new(1.0, RelayMode::Fixed { p_r: 1.0 }, vec![1e4, 1e6]).unwrap();
        assert!(convergence_check(TableRow::Lc, &narrow, 0.1).is_err());
    }
}
