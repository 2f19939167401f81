use clap::{Args, ValueEnum};
use serde::Serialize;

use scf_secrecy::{search_coefficients, ChannelConfig, EveGains, Objective};

use crate::channel::ChannelArgs;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveKind {
    /// `R_CF^A + R_CF^B - C(P_A + P_B)`.
    Unconstrained,
    /// Scaled by `min(1, C(P_R) / R_CF^A)`.
    RelayLimited,
    /// Jammer computation rate capped at `--cap`.
    JammerCap,
    /// External eavesdropper with the `--h*` gains.
    Eve,
    EveRelayLimited,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[arg(long, value_enum, default_value = "unconstrained")]
    pub objective: ObjectiveKind,
    /// Jammer rate cap in bits per channel use, for `jammer-cap`.
    #[arg(long)]
    pub cap: Option<f64>,
}

#[derive(Debug, Serialize)]
struct OptimizeReport {
    config: ChannelConfig,
    gains: EveGains,
    objective: String,
    cap: Option<f64>,
    a_max: i64,
    a1: i64,
    a2: i64,
    beta_ratio: f64,
    value: f64,
    r_cf_a: f64,
    r_cf_b: f64,
    leakage_bound: f64,
    constrained: bool,
    evaluations: usize,
}

pub fn run(args: &OptimizeArgs) -> Result<String, CliError> {
    let inputs = args.channel.resolve()?;
    let cfg = inputs.channel()?;
    let gains = inputs.eve(&cfg)?.gains;
    let objective = match args.objective {
        ObjectiveKind::Unconstrained => Objective::Unconstrained,
        ObjectiveKind::RelayLimited => Objective::RelayLimited,
        ObjectiveKind::JammerCap => {
            let cap = args.cap.ok_or_else(|| CliError::usage("--objective jammer-cap needs --cap"))?;
            if !(cap.is_finite() && cap >= 0.0) {
                return Err(CliError::usage(format!("--cap must be a non-negative rate, got {cap}")));
            }
            Objective::BRateCap(cap)
        }
        ObjectiveKind::Eve => Objective::Eve(gains),
        ObjectiveKind::EveRelayLimited => Objective::EveRelayLimited(gains),
    };
    let opt = search_coefficients(&cfg, inputs.a_max, &objective)?;
    let name = args.objective.to_possible_value().expect("no skipped variants").get_name().to_string();
    let report = OptimizeReport {
        config: cfg,
        gains,
        objective: name,
        cap: args.cap.filter(|_| args.objective == ObjectiveKind::JammerCap),
        a_max: inputs.a_max,
        a1: opt.best.coeffs.a1,
        a2: opt.best.coeffs.a2,
        beta_ratio: opt.best.scalings.ratio(),
        value: opt.value,
        r_cf_a: opt.best.r_cf_a,
        r_cf_b: opt.best.r_cf_b,
        leakage_bound: opt.best.leakage_bound,
        constrained: opt.constrained,
        evaluations: opt.evaluations,
    };
    Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n")
}
