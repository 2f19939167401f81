use std::collections::BTreeMap;

use clap::Args;
use serde::Serialize;

use scf_secrecy::model::clamp_rate;
use scf_secrecy::{
    gaussian_capacity, search_coefficients, secrecy_upper_bound, sigma_threshold, ChannelConfig, EveGains, Objective,
    UpperBoundResult,
};

use crate::channel::ChannelArgs;
use crate::error::CliError;
use crate::schemes::Scheme;

#[derive(Debug, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
}

#[derive(Debug, Serialize)]
struct Value {
    raw: f64,
    clamped: f64,
}

#[derive(Debug, Serialize)]
struct Optimum {
    objective: &'static str,
    a1: i64,
    a2: i64,
    beta_ratio: f64,
    value: f64,
    constrained: bool,
    evaluations: usize,
}

#[derive(Debug, Serialize)]
struct RateReport {
    config: ChannelConfig,
    gains: EveGains,
    a_max: i64,
    /// `null` when the threshold is infinite.
    sigma_threshold: Option<f64>,
    upper_bound: UpperBoundResult,
    /// Schemes undefined for this configuration map to `null`.
    rates: BTreeMap<&'static str, Option<Value>>,
    optimum: Optimum,
}

pub fn run(args: &RateArgs) -> Result<String, CliError> {
    let inputs = args.channel.resolve()?;
    let cfg = inputs.channel()?;
    let eve = inputs.eve(&cfg)?;

    let mut rates = BTreeMap::new();
    for scheme in Scheme::ALL {
        let v = if scheme.needs_collocated() && cfg.sigma2 > 0.0 {
            None
        } else {
            let raw = scheme.rate(&cfg, &eve, inputs.a_max)?;
            Some(Value { raw, clamped: clamp_rate(raw) })
        };
        rates.insert(scheme.label(), v);
    }

    let bar = sigma_threshold(&cfg);
    // the LC objective: the jammer rate is capped once sigma exceeds sigma_bar
    let (name, objective) = if cfg.sigma() > bar {
        ("jammer-cap", Objective::BRateCap(gaussian_capacity(cfg.p_b / cfg.sigma2)?))
    } else {
        ("unconstrained", Objective::Unconstrained)
    };
    let opt = search_coefficients(&cfg, inputs.a_max, &objective)?;
    let report = RateReport {
        config: cfg,
        gains: inputs.gains,
        a_max: inputs.a_max,
        sigma_threshold: bar.is_finite().then_some(bar),
        upper_bound: secrecy_upper_bound(&cfg)?,
        rates,
        optimum: Optimum {
            objective: name,
            a1: opt.best.coeffs.a1,
            a2: opt.best.coeffs.a2,
            beta_ratio: opt.best.scalings.ratio(),
            value: opt.value,
            constrained: opt.constrained,
            evaluations: opt.evaluations,
        },
    };
    Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n")
}
