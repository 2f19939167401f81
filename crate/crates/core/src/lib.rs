//! Secrecy rates of the two-hop untrusted-relay channel with a cooperative
//! jammer, achieved by scaled compute-and-forward, together with the
//! comparison schemes, high-SNR gap analysis and an exact-arithmetic
//! simulator of the lattice-chain encoder.

pub mod asymptotics;
pub mod baseline;
pub mod error;
pub mod golden;
pub mod lattice_sim;
pub mod model;
pub mod optimizer;
pub mod scf;
pub mod schemes;

pub use baseline::{
    af_rate_sun, cf_rate_he, cf_rate_he_symmetric, cnf_rate_he2, gaussian_capacity, mf_rate_zhang,
    mf_rate_zhang_symmetric, perfect_rate_vatedka, secrecy_upper_bound, UpperBoundResult,
};
pub use error::{ConfigError, RateError, SimError};
pub use model::{
    db_to_linear, linear_to_db, ChannelConfig, CoefficientPair, EveChannelConfig, EveGains, SCFDesign,
    ScalingPair, SweepResult, SweepRow,
};
pub use optimizer::{
    closed_form_optimum, optimize_beta, search_coefficients, Objective, OptimizationResult, DEFAULT_A_MAX,
};
pub use scf::{
    computation_rate, eve_computation_rate, eve_leakage_bound, eve_noise_term, leakage_bound, noise_term,
    scf_objective, sigma_threshold, Node,
};
pub use schemes::{
    combined_lower_bound, corollary_collocated, corollary_symmetric, eve_rb_rate, lc_rate, rb_rate,
};
