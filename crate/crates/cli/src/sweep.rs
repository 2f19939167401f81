use clap::{Args, ValueEnum};
use rayon::prelude::*;

use scf_secrecy::{db_to_linear, SweepResult};

use crate::channel::{ChannelArgs, Inputs};
use crate::error::CliError;
use crate::schemes::Scheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    Pa,
    Pb,
    Pr,
    Sigma2,
    /// Eavesdropper gain of the jammer, in linear units.
    H2p,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub channel: ChannelArgs,
    #[arg(long, value_enum)]
    pub vary: Vary,
    /// First abscissa; linear for `h2p`.
    #[arg(long, visible_alias = "from", allow_hyphen_values = true)]
    pub from_db: f64,
    /// Last abscissa; linear for `h2p`.
    #[arg(long, visible_alias = "to", allow_hyphen_values = true)]
    pub to_db: f64,
    /// Number of grid points, endpoints included.
    #[arg(long)]
    pub steps: usize,
    /// Powers set equal to the varied one.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub tie: Vec<Vary>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "upper,lc,rb")]
    pub schemes: Vec<Scheme>,
}

/// `steps` evenly spaced points from `from` to `to` inclusive.
pub fn linspace(from: f64, to: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if steps < 2 {
        return Err(CliError::usage(format!("--steps must be at least 2, got {steps}")));
    }
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(CliError::usage(format!("need finite bounds with from < to, got {from} and {to}")));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps).map(|i| if i == steps - 1 { to } else { from + (to - from) * i as f64 / last }).collect())
}

/// Points `from, from + step, ...` up to `to` (inclusive within 1e-9 steps).
pub fn stepped(from: f64, to: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(from.is_finite() && to.is_finite() && from < to && step > 0.0 && step.is_finite()) {
        return Err(CliError::usage(format!("need from < to and a positive step, got {from}, {to}, {step}")));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|i| from + step * i as f64).collect())
}

/// Evaluates `schemes` at every abscissa in parallel; rows keep the order
/// of `xs`.
pub fn tabulate<F>(x_label: &str, xs: &[f64], schemes: &[Scheme], point: F) -> Result<SweepResult, CliError>
where
    F: Fn(f64) -> Inputs + Sync,
{
    let rows: Vec<Vec<f64>> = xs
        .par_iter()
        .map(|&x| {
            let inputs = point(x);
            let cfg = inputs.channel()?;
            let eve = inputs.eve(&cfg)?;
            schemes.iter().map(|s| s.rate(&cfg, &eve, inputs.a_max)).collect()
        })
        .collect::<Result<_, CliError>>()?;
    let labels = schemes.iter().map(|s| s.label().to_string()).collect();
    let mut out = SweepResult::new(x_label, labels);
    for (&x, rates) in xs.iter().zip(rows) {
        out.push(x, rates).expect("grid is increasing and rows are full");
    }
    Ok(out)
}

pub fn run(args: &SweepArgs, raw: bool) -> Result<String, CliError> {
    let base = args.channel.resolve()?;
    if args.schemes.is_empty() {
        return Err(CliError::usage("--schemes is empty"));
    }
    let powers = [Vary::Pa, Vary::Pb, Vary::Pr];
    if !args.tie.is_empty() && !powers.contains(&args.vary) {
        return Err(CliError::usage("--tie only applies when varying pa, pb or pr"));
    }
    if let Some(t) = args.tie.iter().find(|t| !powers.contains(t)) {
        return Err(CliError::usage(format!("cannot tie {t:?} to a power")));
    }
    let xs = linspace(args.from_db, args.to_db, args.steps)?;
    let x_label = if args.vary == Vary::H2p { "h2p" } else { "x_db" };
    let point = |x: f64| {
        let mut inputs = base;
        for v in std::iter::once(&args.vary).chain(&args.tie) {
            match v {
                Vary::Pa => inputs.p_a = Some(db_to_linear(x)),
                Vary::Pb => inputs.p_b = Some(db_to_linear(x)),
                Vary::Pr => inputs.p_r = Some(db_to_linear(x)),
                Vary::Sigma2 => inputs.sigma2 = db_to_linear(x),
                Vary::H2p => inputs.gains.h2p = x,
            }
        }
        inputs
    };
    Ok(tabulate(x_label, &xs, &args.schemes, point)?.to_csv(raw))
}
