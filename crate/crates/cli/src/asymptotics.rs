use clap::{Args, ValueEnum};

use scf_secrecy::asymptotics::{gap_g, gap_g0, scenario_reference, AsymptoticScenario, Reference, RelayMode, TableRow};
use scf_secrecy::db_to_linear;
use scf_secrecy::model::fixed6;

use crate::channel::parse_db;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GapScheme {
    Upper,
    Rb,
    Lc,
    He,
    Zhang,
    Sun,
}

impl GapScheme {
    fn row(self) -> TableRow {
        match self {
            GapScheme::Upper => TableRow::UpperBound,
            GapScheme::Rb => TableRow::Rb,
            GapScheme::Lc => TableRow::Lc,
            GapScheme::He => TableRow::HeCf,
            GapScheme::Zhang => TableRow::ZhangMf,
            GapScheme::Sun => TableRow::SunAf,
        }
    }

    fn label(self) -> &'static str {
        match self {
            GapScheme::Upper => "upper",
            GapScheme::Rb => "rb",
            GapScheme::Lc => "lc",
            GapScheme::He => "he",
            GapScheme::Zhang => "zhang",
            GapScheme::Sun => "sun",
        }
    }
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    /// `P_B / P_A`.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// `P_R / P_A`.
    #[arg(long, conflicts_with = "pr_db", required_unless_present = "pr_db")]
    pub gamma: Option<f64>,
    /// Fixed relay power in dB.
    #[arg(long, allow_hyphen_values = true)]
    pub pr_db: Option<String>,
    /// Increasing source powers in dB.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "40,60,80")]
    pub pa_db_list: Vec<f64>,
    #[arg(long, value_enum)]
    pub scheme: GapScheme,
}

/// An interval reference is written `lo..hi`.
fn reference_cell(r: Reference) -> String {
    match r {
        Reference::Value(v) => fixed6(v),
        Reference::Interval { lo, hi } => format!("{}..{}", fixed6(lo), fixed6(hi)),
    }
}

pub fn run(args: &AsymptoticsArgs) -> Result<String, CliError> {
    if args.pa_db_list.len() < 3 {
        return Err(CliError::usage(format!("--pa-db-list needs at least 3 points, got {}", args.pa_db_list.len())));
    }
    let relay = match (&args.gamma, &args.pr_db) {
        (Some(gamma), _) => RelayMode::Proportional { gamma: *gamma },
        (None, Some(pr)) => RelayMode::Fixed { p_r: db_to_linear(parse_db("pr-db", pr)?) },
        (None, None) => return Err(CliError::usage("one of --gamma or --pr-db is required")),
    };
    let p_a: Vec<f64> = args.pa_db_list.iter().map(|&d| db_to_linear(d)).collect();
    let scenario = AsymptoticScenario::new(args.alpha, relay, p_a)?;
    let g0 = gap_g0(&scenario);
    let g = gap_g(args.scheme.row(), &scenario);
    let reference = scenario_reference(args.scheme.row(), &scenario);

    let mut out = format!("P_A_db,G0,G_{},table1_reference,residual\n", args.scheme.label());
    for (i, db) in args.pa_db_list.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fixed6(*db),
            fixed6(g0[i]),
            fixed6(g[i]),
            reference_cell(reference),
            fixed6(reference.distance(g[i]))
        ));
    }
    Ok(out)
}
