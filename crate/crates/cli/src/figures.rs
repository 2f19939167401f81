//! Fixed sweeps reproducing the comparison figures. Each figure pins the
//! powers not on its axis and lists its curves; the axis range defaults
//! below and can be overridden.

use clap::{Args, ValueEnum};

use scf_secrecy::{db_to_linear, EveGains, DEFAULT_A_MAX};

use crate::channel::Inputs;
use crate::error::CliError;
use crate::schemes::Scheme::{self, *};
use crate::sweep::{stepped, tabulate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lower")]
pub enum Figure {
    Fig4,
    Fig5a,
    Fig5b,
    Fig5c,
    Fig6a,
    Fig6b,
    Fig6c,
    Fig6d,
    Fig6e,
    Fig6f,
    Fig7a,
    Fig7b,
    Fig9,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub name: Figure,
    /// First abscissa; dB except for fig9.
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
}

const BASELINES: [Scheme; 7] = [Upper, Capacity, Lc, Rb, Sun, Zhang, He];
const NOISY: [Scheme; 6] = [Upper, Capacity, Lc, Rb, Combined, He];
const OWN: [Scheme; 5] = [Upper, Capacity, Lc, Rb, Combined];

/// `(from, to, step)` of the default axis.
fn default_range(fig: Figure) -> (f64, f64, f64) {
    match fig {
        Figure::Fig4 | Figure::Fig6d | Figure::Fig6e | Figure::Fig6f => (0.0, 40.0, 0.5),
        Figure::Fig5a | Figure::Fig5c | Figure::Fig6c | Figure::Fig7b => (0.0, 30.0, 0.5),
        Figure::Fig5b | Figure::Fig7a => (-5.0, 20.0, 0.5),
        Figure::Fig6a | Figure::Fig6b => (0.0, 20.0, 0.5),
        Figure::Fig9 => (0.5, 3.0, 0.05),
    }
}

fn schemes(fig: Figure) -> &'static [Scheme] {
    match fig {
        Figure::Fig4 => &[Upper, Capacity, Lc, Rb, Sun, Zhang, He, He2, Vatedka],
        Figure::Fig5a | Figure::Fig6a | Figure::Fig6b | Figure::Fig6c => &BASELINES,
        Figure::Fig6d | Figure::Fig6e | Figure::Fig6f => &BASELINES,
        Figure::Fig5b | Figure::Fig5c => &NOISY,
        Figure::Fig7a | Figure::Fig7b => &OWN,
        Figure::Fig9 => &[Upper, Capacity, Rb, EveRb],
    }
}

/// Channel at abscissa `x` (dB, or the linear gain `h2'` for fig9).
fn point(fig: Figure, x: f64) -> Inputs {
    let db = db_to_linear;
    let (pa, pb, pr, s2) = match fig {
        Figure::Fig4 => (x, x, x, f64::NEG_INFINITY),
        Figure::Fig5a => (30.0, 30.0, x, f64::NEG_INFINITY),
        Figure::Fig5b | Figure::Fig7a => (30.0, 30.0, 30.0, x),
        Figure::Fig5c | Figure::Fig7b => (20.0, 20.0, x, 3.0),
        Figure::Fig6a => (x, 20.0, 20.0, f64::NEG_INFINITY),
        Figure::Fig6b => (20.0, x, 20.0, f64::NEG_INFINITY),
        Figure::Fig6c => (20.0, 20.0, x, f64::NEG_INFINITY),
        Figure::Fig6d => (x, x + 10.0, x, f64::NEG_INFINITY),
        Figure::Fig6e => (x, x - 10.0, x, f64::NEG_INFINITY),
        Figure::Fig6f => (x, x - 10.0, 20.0, f64::NEG_INFINITY),
        Figure::Fig9 => (20.0, 20.0, 20.0, f64::NEG_INFINITY),
    };
    let mut gains = EveGains::unit();
    if fig == Figure::Fig9 {
        gains.h2p = x;
    }
    Inputs { p_a: Some(db(pa)), p_b: Some(db(pb)), p_r: Some(db(pr)), sigma2: db(s2), gains, a_max: DEFAULT_A_MAX }
}

pub fn run(args: &FigureArgs, raw: bool) -> Result<String, CliError> {
    let fig = args.name;
    let (from, to, step) = default_range(fig);
    let xs = stepped(args.from.unwrap_or(from), args.to.unwrap_or(to), args.step.unwrap_or(step))?;
    let x_label = if fig == Figure::Fig9 { "h2p" } else { "x_db" };
    Ok(tabulate(x_label, &xs, schemes(fig), |x| point(fig, x))?.to_csv(raw))
}
