//! Maximization of the scaled compute-and-forward objectives over integer
//! coefficients and the scaling ratio `t = beta_A / beta_B`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::RateError;
use crate::golden::{golden_section_max, multistart_max};
use crate::model::{cap, ChannelConfig, CoefficientPair, EveGains, SCFDesign, ScalingPair};
use crate::scf::rates_raw;

/// Coefficient bound used when the caller does not choose one.
pub const DEFAULT_A_MAX: i64 = 8;

const LOG_T_MIN: f64 = -20.0;
const LOG_T_MAX: f64 = 20.0;
const GRID: usize = 512;
const STARTS: usize = 5;
const TOL: f64 = 1e-10;
const BISECT_TOL: f64 = 1e-12;
const TIE: f64 = 1e-12;

/// Function of `(a, t)` being maximized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Objective {
    /// `R_s(a, beta)`.
    Unconstrained,
    /// `R_s(a, beta)` subject to `R_CF^B <= cap`; infeasible points are `-inf`.
    BRateCap(f64),
    /// `min(C(P_R) / R_CF^A, 1) R_s(a, beta)`. The factor is 1 whenever
    /// `R_CF^A <= C(P_R)`, including non-positive `R_CF^A`.
    RelayLimited,
    /// `sum_i min(R_i(h), R_i(h')) - C(h1'^2 P_A + h2'^2 P_B)`.
    Eve(EveGains),
    /// The eavesdropper objective times
    /// `min(C(h2^2 P_R) / min(R_A(h), R_A(h')), 1)`.
    EveRelayLimited(EveGains),
}

fn scale_factor(budget: f64, rate: f64) -> f64 {
    if rate <= budget {
        1.0
    } else {
        budget / rate
    }
}

impl Objective {
    /// Objective value at `(a, beta)`; `-inf` where a constraint fails or the
    /// rates are undefined.
    pub fn evaluate(&self, a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> f64 {
        self.evaluate_parts(a, beta, cfg).map_or(f64::NEG_INFINITY, |p| p.value)
    }

    /// Whether a constraint or scaling factor is active at `(a, beta)`.
    pub fn is_active(&self, a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> bool {
        self.evaluate_parts(a, beta, cfg).is_some_and(|p| p.active)
    }

    fn evaluate_parts(&self, a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> Option<Parts> {
        let (pa, pb) = (cfg.p_a, cfg.p_b);
        match *self {
            Objective::Unconstrained => {
                let (ra, rb) = rates_raw(a, beta, pa, pb).ok()?;
                Some(Parts { value: ra + rb - cap(pa + pb), active: false })
            }
            Objective::BRateCap(limit) => {
                let (ra, rb) = rates_raw(a, beta, pa, pb).ok()?;
                if rb > limit {
                    return None;
                }
                Some(Parts { value: ra + rb - cap(pa + pb), active: limit - rb < 1e-7 })
            }
            Objective::RelayLimited => {
                let (ra, rb) = rates_raw(a, beta, pa, pb).ok()?;
                let f = scale_factor(cap(cfg.p_r), ra);
                Some(Parts { value: f * (ra + rb - cap(pa + pb)), active: f < 1.0 })
            }
            Objective::Eve(g) => {
                let e = eve_parts(a, beta, cfg, &g)?;
                Some(Parts { value: e.sum, active: false })
            }
            Objective::EveRelayLimited(g) => {
                let e = eve_parts(a, beta, cfg, &g)?;
                let f = scale_factor(cap(g.h2 * g.h2 * cfg.p_r), e.ra);
                Some(Parts { value: f * e.sum, active: f < 1.0 })
            }
        }
    }

    /// Rates induced by `(a, beta)` under this objective. For the
    /// eavesdropper objectives the per-node rates are the minima over the
    /// relay and eavesdropper gains, and the leakage bound is taken at the
    /// eavesdropper.
    pub fn design(&self, a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig) -> Option<SCFDesign> {
        match self {
            Objective::Eve(g) | Objective::EveRelayLimited(g) => {
                let e = eve_parts(a, beta, cfg, g)?;
                Some(SCFDesign {
                    coeffs: a,
                    scalings: beta,
                    r_cf_a: e.ra,
                    r_cf_b: e.rb,
                    objective: e.sum,
                    leakage_bound: e.eve_sum - e.rb.max(0.0),
                })
            }
            _ => crate::scf::design(a, beta, cfg).ok(),
        }
    }
}

struct Parts {
    value: f64,
    active: bool,
}

struct EveParts {
    ra: f64,
    rb: f64,
    eve_sum: f64,
    sum: f64,
}

fn eve_parts(a: CoefficientPair, beta: ScalingPair, cfg: &ChannelConfig, g: &EveGains) -> Option<EveParts> {
    let (pa, pb) = (cfg.p_a, cfg.p_b);
    let (ra_h, rb_h) = rates_raw(a, beta, g.h1 * g.h1 * pa, g.h2 * g.h2 * pb).ok()?;
    let (ra_e, rb_e) = rates_raw(a, beta, g.h1p * g.h1p * pa, g.h2p * g.h2p * pb).ok()?;
    let (ra, rb) = (ra_h.min(ra_e), rb_h.min(rb_e));
    let eve_sum = cap(g.h1p * g.h1p * pa + g.h2p * g.h2p * pb);
    Some(EveParts { ra, rb, eve_sum, sum: ra + rb - eve_sum })
}

/// Best scaling ratio for one coefficient pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaOptimum {
    pub ratio: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Maximizes `objective` over `t = beta_A / beta_B` for a fixed pair.
///
/// The search runs in `log2 t` over `[-20, 20]`: a 512-point grid, golden
/// refinement of the five best local maxima, and bisection onto every
/// feasibility boundary crossed by the grid. Fails with
/// [`RateError::InfeasibleConstraint`] when no grid point is feasible.
pub fn optimize_beta(
    a: CoefficientPair,
    cfg: &ChannelConfig,
    objective: &Objective,
) -> Result<BetaOptimum, RateError> {
    let f = |u: f64| objective.evaluate(a, ScalingPair::from_ratio(u.exp2()), cfg);
    let infeasible = || match objective {
        Objective::BRateCap(cap) => RateError::InfeasibleConstraint { cap: *cap },
        _ => RateError::DegenerateNoise,
    };
    let mut best = multistart_max(f, LOG_T_MIN, LOG_T_MAX, GRID, STARTS, TOL).ok_or_else(infeasible)?;

    if matches!(objective, Objective::BRateCap(_)) {
        let step = (LOG_T_MAX - LOG_T_MIN) / (GRID - 1) as f64;
        let mut prev_u = LOG_T_MIN;
        let mut prev_ok = f(prev_u).is_finite();
        for i in 1..GRID {
            let u = LOG_T_MIN + step * i as f64;
            let ok = f(u).is_finite();
            best.evaluations += 1;
            if ok != prev_ok {
                let (mut good, mut bad) = if prev_ok { (prev_u, u) } else { (u, prev_u) };
                while (good - bad).abs() > BISECT_TOL {
                    let mid = 0.5 * (good + bad);
                    best.evaluations += 1;
                    if f(mid).is_finite() {
                        good = mid;
                    } else {
                        bad = mid;
                    }
                }
                // polish inside the feasible cell adjoining the boundary
                let (lo, hi) = if good < bad { ((good - step).max(LOG_T_MIN), good) } else { (good, (good + step).min(LOG_T_MAX)) };
                let m = golden_section_max(f, lo, hi, TOL);
                best.evaluations += m.evaluations;
                if m.value > best.value {
                    best.x = m.x;
                    best.value = m.value;
                }
            }
            prev_u = u;
            prev_ok = ok;
        }
    }
    Ok(BetaOptimum { ratio: best.x.exp2(), value: best.value, evaluations: best.evaluations })
}

/// Outcome of the joint search over `(a, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub best: SCFDesign,
    /// Maximized objective value; equals `objective.evaluate` at `best`.
    pub value: f64,
    /// True when a rate cap or scaling factor is active at the optimum.
    pub constrained: bool,
    pub evaluations: usize,
}

/// Maximizes `objective` over canonical, gcd-reduced pairs with entries up
/// to `a_max` in magnitude and over the scaling ratio.
///
/// Pairs are searched in parallel. Among values within `1e-12` of each
/// other the earliest pair in [`CoefficientPair::enumerate`] order wins, so
/// the result does not depend on scheduling.
pub fn search_coefficients(
    cfg: &ChannelConfig,
    a_max: i64,
    objective: &Objective,
) -> Result<OptimizationResult, RateError> {
    assert!(a_max >= 1, "a_max must be at least 1");
    let pairs = CoefficientPair::enumerate(a_max);
    let results: Vec<(CoefficientPair, Result<BetaOptimum, RateError>)> =
        pairs.par_iter().map(|&a| (a, optimize_beta(a, cfg, objective))).collect();

    let evaluations = results.iter().map(|(_, r)| r.as_ref().map_or(0, |o| o.evaluations)).sum();
    let mut best: Option<(CoefficientPair, BetaOptimum)> = None;
    let mut first_err = None;
    for (a, r) in results {
        match r {
            Ok(o) => {
                if best.map_or(true, |(_, b)| o.value > b.value + TIE) {
                    best = Some((a, o));
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    let (a, o) = match best {
        Some(b) => b,
        None => return Err(first_err.unwrap_or(RateError::DegenerateNoise)),
    };
    let beta = ScalingPair::from_ratio(o.ratio);
    let design = objective.design(a, beta, cfg).ok_or(RateError::DegenerateNoise)?;
    Ok(OptimizationResult {
        best: design,
        value: o.value,
        constrained: objective.is_active(a, beta, cfg),
        evaluations,
    })
}

/// Analytic maximum of `R_s` over `(a, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedForm {
    pub coeffs: CoefficientPair,
    /// `beta_A / beta_B = sqrt(P_B (1 + P_A) / (P_A (1 + P_B)))`.
    pub ratio: f64,
    pub value: f64,
}

/// Closed-form optimum of the secrecy objective, attained at `a = (1, 1)`.
///
/// Evaluated as `log2((sqrt((1+P_A)(1+P_B)) + sqrt(P_A P_B))^2 / (1+P_A+P_B)) / 2 - 1`,
/// which avoids the cancellation in the equivalent difference-of-roots form.
pub fn closed_form_optimum(cfg: &ChannelConfig) -> ClosedForm {
    let (pa, pb) = (cfg.p_a, cfg.p_b);
    let s = ((1.0 + pa) * (1.0 + pb)).sqrt() + (pa * pb).sqrt();
    let value = 0.5 * (s * s / (1.0 + pa + pb)).log2() - 1.0;
    let ratio = (pb * (1.0 + pa) / (pa * (1.0 + pb))).sqrt();
    ClosedForm { coeffs: CoefficientPair::UNIT, ratio, value }
}
