use thiserror::Error;

/// Rejected channel or code parameters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("{field} must be strictly positive, got {value}")]
    NonPositivePower { field: &'static str, value: f64 },
    #[error("sigma2 must be non-negative, got {value}")]
    NegativeSigma { value: f64 },
    #[error("channel gain {field} must be strictly positive, got {value}")]
    NonPositiveGain { field: &'static str, value: f64 },
    #[error("{field} must be finite, got {value}")]
    NonFinite { field: &'static str, value: f64 },
    #[error("integer coefficients must be nonzero, got ({a1}, {a2})")]
    ZeroCoefficient { a1: i64, a2: i64 },
    #[error("scaling coefficient {field} must be strictly positive, got {value}")]
    NonPositiveScaling { field: &'static str, value: f64 },
    #[error("invalid asymptotic scenario: {0}")]
    InvalidScenario(&'static str),
}

/// Failures while evaluating a rate expression.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RateError {
    #[error("SNR must be non-negative, got {0}")]
    NegativeSnr(f64),
    #[error("transmit rate must be non-negative, got {0}")]
    NegativeRate(f64),
    #[error("jammer power is zero; the upper bound degenerates to 0")]
    DegenerateJammer,
    #[error("effective noise N(a, beta) vanished")]
    DegenerateNoise,
    #[error("this rate is defined only for a jammer collocated with the destination (sigma2 = 0), got sigma2 = {sigma2}")]
    JammerNotCollocated { sigma2: f64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("no scaling ratio satisfies the jammer-rate cap {cap}")]
    InfeasibleConstraint { cap: f64 },
}

/// Failures of the exact-arithmetic lattice simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("modulus must be strictly positive")]
    ZeroModulus,
    #[error("{what} index {value} outside [0, {bound})")]
    IndexOutOfRange { what: &'static str, value: i64, bound: i64 },
    #[error("vector has {got} coordinates, chain has {expected} dimensions")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("lattice chain is not nested: m_b = {m_b} and m_s*m_e = {coarse} do not divide one another")]
    NestingViolation { m_b: i64, coarse: i64 },
    #[error("enumeration budget exceeded: {required} > {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("invalid chain parameter: {0}")]
    InvalidChain(&'static str),
    #[error("exhaustive enumeration supports one dimension, chain has {0}")]
    UnsupportedDims(usize),
    #[error("bin label {label} outside [0, {bins})")]
    LabelOutOfRange { label: u64, bins: u64 },
    #[error("invalid binning parameters: {0}")]
    InvalidBinning(&'static str),
}
