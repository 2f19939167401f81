//! Channel parameters from flags and an optional JSON file. Flags win over
//! the file; powers are given in dB, gains linearly.

use std::path::PathBuf;

use clap::Args;
use serde::Deserialize;

use scf_secrecy::{db_to_linear, ChannelConfig, EveChannelConfig, EveGains, DEFAULT_A_MAX};

use crate::error::CliError;

#[derive(Debug, Clone, Default, Args)]
pub struct ChannelArgs {
    /// Source power P_A in dB.
    #[arg(long, allow_hyphen_values = true)]
    pub pa_db: Option<String>,
    /// Jammer power P_B in dB.
    #[arg(long, allow_hyphen_values = true)]
    pub pb_db: Option<String>,
    /// Relay power P_R in dB.
    #[arg(long, allow_hyphen_values = true)]
    pub pr_db: Option<String>,
    /// Jammer-to-destination noise variance in dB; "-inf" for a collocated
    /// jammer (the default).
    #[arg(long, allow_hyphen_values = true)]
    pub sigma2_db: Option<String>,
    #[arg(long)]
    pub h1: Option<f64>,
    #[arg(long)]
    pub h2: Option<f64>,
    #[arg(long)]
    pub h1p: Option<f64>,
    #[arg(long)]
    pub h2p: Option<f64>,
    #[arg(long)]
    pub h3: Option<f64>,
    /// Largest coefficient magnitude searched.
    #[arg(long)]
    pub a_max: Option<i64>,
    /// JSON file with the same fields as the flags, in kebab-case.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Number {
    Num(f64),
    Text(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct ConfigFile {
    pa_db: Option<Number>,
    pb_db: Option<Number>,
    pr_db: Option<Number>,
    sigma2_db: Option<Number>,
    h1: Option<f64>,
    h2: Option<f64>,
    h1p: Option<f64>,
    h2p: Option<f64>,
    h3: Option<f64>,
    a_max: Option<i64>,
}

pub fn parse_db(field: &str, text: &str) -> Result<f64, CliError> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("--{field}: cannot parse {text:?} as a number")))?;
    if v.is_nan() || v == f64::INFINITY {
        return Err(CliError::usage(format!("--{field}: {text:?} is not a finite dB value")));
    }
    Ok(v)
}

fn number(field: &str, n: &Number) -> Result<f64, CliError> {
    match n {
        Number::Num(v) => Ok(*v),
        Number::Text(t) => parse_db(field, t),
    }
}

/// Channel inputs in linear units; powers stay unset when neither the flags
/// nor the file give them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inputs {
    pub p_a: Option<f64>,
    pub p_b: Option<f64>,
    pub p_r: Option<f64>,
    pub sigma2: f64,
    pub gains: EveGains,
    pub a_max: i64,
}

impl ChannelArgs {
    pub fn resolve(&self) -> Result<Inputs, CliError> {
        let file = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("--config {}: {e}", path.display())))?;
                serde_json::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::usage(format!("--config {}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let db = |field: &str, flag: &Option<String>, fallback: &Option<Number>| -> Result<Option<f64>, CliError> {
            match (flag, fallback) {
                (Some(t), _) => parse_db(field, t).map(Some),
                (None, Some(n)) => number(field, n).map(Some),
                (None, None) => Ok(None),
            }
        };
        let p_a = db("pa-db", &self.pa_db, &file.pa_db)?.map(db_to_linear);
        let p_b = db("pb-db", &self.pb_db, &file.pb_db)?.map(db_to_linear);
        let p_r = db("pr-db", &self.pr_db, &file.pr_db)?.map(db_to_linear);
        let sigma2 = db("sigma2-db", &self.sigma2_db, &file.sigma2_db)?.map_or(0.0, db_to_linear);
        let unit = EveGains::unit();
        let gains = EveGains {
            h1: self.h1.or(file.h1).unwrap_or(unit.h1),
            h2: self.h2.or(file.h2).unwrap_or(unit.h2),
            h1p: self.h1p.or(file.h1p).unwrap_or(unit.h1p),
            h2p: self.h2p.or(file.h2p).unwrap_or(unit.h2p),
            h3: self.h3.or(file.h3).unwrap_or(unit.h3),
        };
        gains.validate()?;
        let a_max = self.a_max.or(file.a_max).unwrap_or(DEFAULT_A_MAX);
        if a_max < 1 {
            return Err(CliError::usage(format!("--a-max must be at least 1, got {a_max}")));
        }
        Ok(Inputs { p_a, p_b, p_r, sigma2, gains, a_max })
    }
}

fn require(name: &str, v: Option<f64>) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::usage(format!("missing --{name}")))
}

impl Inputs {
    pub fn channel(&self) -> Result<ChannelConfig, CliError> {
        Ok(ChannelConfig::new(
            require("pa-db", self.p_a)?,
            require("pb-db", self.p_b)?,
            require("pr-db", self.p_r)?,
            self.sigma2,
        )?)
    }

    pub fn eve(&self, cfg: &ChannelConfig) -> Result<EveChannelConfig, CliError> {
        Ok(EveChannelConfig::new(cfg.p_a, cfg.p_b, cfg.p_r, self.gains)?)
    }
}
