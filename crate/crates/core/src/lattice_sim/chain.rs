//! Encoding, relay combination and destination recovery over scalar nested
//! lattices.
//!
//! Lattice points are integers: the message `T` lies in `[0, m_s)`, the
//! randomization point `V` is a multiple of `m_s` in `[0, m_s m_e)` and the
//! jammer point `V_B` lies in `[0, m_b)`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use super::modular::{mod_int, mod_lattice};
use super::Q;
use crate::error::SimError;
use crate::model::CoefficientPair;

/// Reduction applied by the relay before forwarding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RelayMode {
    /// Modulo the source coarse lattice `m_s m_e Z`.
    Plain,
    /// Modulo the mid lattice `m_s Z`.
    Chain,
}

/// Nested scalar lattices `Z ⊃ m_s Z ⊃ m_s m_e Z` for the source and
/// `m_b Z` for the jammer, with scaling and integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarLatticeChain {
    pub m_s: i64,
    pub m_e: i64,
    pub m_b: i64,
    pub beta_a: Q,
    pub beta_b: Q,
    pub coeffs: CoefficientPair,
    pub dims: usize,
}

impl ScalarLatticeChain {
    pub fn new(
        m_s: i64,
        m_e: i64,
        m_b: i64,
        beta_a: Q,
        beta_b: Q,
        coeffs: CoefficientPair,
        dims: usize,
    ) -> Result<Self, SimError> {
        if m_s < 1 || m_e < 1 || m_b < 1 {
            return Err(SimError::InvalidChain("moduli must be positive"));
        }
        if beta_a <= Q::zero() || beta_b <= Q::zero() {
            return Err(SimError::InvalidChain("scalings must be positive"));
        }
        if coeffs.a1 == 0 || coeffs.a2 == 0 {
            return Err(SimError::InvalidChain("coefficients must be nonzero"));
        }
        if dims == 0 {
            return Err(SimError::InvalidChain("at least one dimension"));
        }
        Ok(Self { m_s, m_e, m_b, beta_a, beta_b, coeffs, dims })
    }

    /// Unit scalings, coefficients `(1, 1)`, one dimension.
    pub fn simple(m_s: i64, m_e: i64, m_b: i64) -> Result<Self, SimError> {
        Self::new(m_s, m_e, m_b, Q::one(), Q::one(), CoefficientPair::UNIT, 1)
    }

    /// `m_s m_e`, the source coarse modulus.
    pub fn coarse(&self) -> i64 {
        self.m_s * self.m_e
    }

    /// Whether `m_b` and `m_s m_e` divide one another.
    pub fn is_nested(&self) -> bool {
        let c = self.coarse();
        c % self.m_b == 0 || self.m_b % c == 0
    }

    pub fn check_nesting(&self) -> Result<(), SimError> {
        if self.is_nested() {
            Ok(())
        } else {
            Err(SimError::NestingViolation { m_b: self.m_b, coarse: self.coarse() })
        }
    }

    /// Size of the relay output alphabet per dimension.
    pub fn relay_alphabet(&self, mode: RelayMode) -> i64 {
        match mode {
            RelayMode::Plain => self.coarse(),
            RelayMode::Chain => self.m_s,
        }
    }

    fn check_len<T>(&self, v: &[T]) -> Result<(), SimError> {
        if v.len() != self.dims {
            return Err(SimError::DimensionMismatch { expected: self.dims, got: v.len() });
        }
        Ok(())
    }

    fn relay_modulus(&self, mode: RelayMode) -> Q {
        Q::from_integer(self.relay_alphabet(mode))
    }
}

fn in_range(what: &'static str, value: i64, bound: i64) -> Result<(), SimError> {
    if value < 0 || value >= bound {
        return Err(SimError::IndexOutOfRange { what, value, bound });
    }
    Ok(())
}

fn dither_at(dither: Option<&[Q]>, i: usize) -> Q {
    dither.map_or_else(Q::zero, |d| d[i])
}

/// Source channel input `[(T + V)/beta_A + D] mod (m_s m_e / beta_A)` with
/// `V = m_s * random_index`.
pub fn encode_source(
    chain: &ScalarLatticeChain,
    message: &[i64],
    random_index: &[i64],
    dither: Option<&[Q]>,
) -> Result<Vec<Q>, SimError> {
    chain.check_len(message)?;
    chain.check_len(random_index)?;
    if let Some(d) = dither {
        chain.check_len(d)?;
    }
    let modulus = Q::from_integer(chain.coarse()) / chain.beta_a;
    (0..chain.dims)
        .map(|i| {
            in_range("message", message[i], chain.m_s)?;
            in_range("random", random_index[i], chain.m_e)?;
            let point = Q::from_integer(message[i] + chain.m_s * random_index[i]);
            mod_lattice(point / chain.beta_a + dither_at(dither, i), modulus)
        })
        .collect()
}

/// Jammer channel input `[V_B/beta_B + D] mod (m_b / beta_B)`.
pub fn encode_jammer(chain: &ScalarLatticeChain, v_b: &[i64], dither: Option<&[Q]>) -> Result<Vec<Q>, SimError> {
    chain.check_len(v_b)?;
    if let Some(d) = dither {
        chain.check_len(d)?;
    }
    let modulus = Q::from_integer(chain.m_b) / chain.beta_b;
    (0..chain.dims)
        .map(|i| {
            in_range("jammer", v_b[i], chain.m_b)?;
            mod_lattice(Q::from_integer(v_b[i]) / chain.beta_b + dither_at(dither, i), modulus)
        })
        .collect()
}

/// Undoes the dither and scaling of a channel input: `[beta (x - D)] mod m`.
pub fn lattice_point(x: &[Q], beta: Q, dither: Option<&[Q]>, modulus: i64) -> Result<Vec<i64>, SimError> {
    let m = Q::from_integer(modulus);
    x.iter()
        .enumerate()
        .map(|(i, &xi)| {
            let p = mod_lattice(beta * (xi - dither_at(dither, i)), m)?;
            if !p.is_integer() {
                return Err(SimError::InvalidChain("channel input does not map back to a lattice point"));
            }
            Ok(p.to_integer())
        })
        .collect()
}

/// `U = a1 (T + V) + a2 V_B`, with `v_a` the randomization lattice point.
pub fn relay_combine(chain: &ScalarLatticeChain, t_a: &[i64], v_a: &[i64], v_b: &[i64]) -> Result<Vec<i64>, SimError> {
    chain.check_len(t_a)?;
    chain.check_len(v_a)?;
    chain.check_len(v_b)?;
    let CoefficientPair { a1, a2 } = chain.coeffs;
    Ok((0..chain.dims).map(|i| a1 * (t_a[i] + v_a[i]) + a2 * v_b[i]).collect())
}

/// `(U / a1) mod m_s m_e` in plain mode, `(U / a1) mod m_s` in chain mode.
pub fn relay_modulo(chain: &ScalarLatticeChain, u_r: &[i64], mode: RelayMode) -> Result<Vec<Q>, SimError> {
    chain.check_len(u_r)?;
    let m = chain.relay_modulus(mode);
    let a1 = Q::from_integer(chain.coeffs.a1);
    u_r.iter().map(|&u| mod_lattice(Q::from_integer(u) / a1, m)).collect()
}

/// Destination estimate of the message: `[u~ - (a2/a1) V_B]` reduced modulo
/// the relay lattice and then modulo `m_s`.
pub fn destination_recover(
    chain: &ScalarLatticeChain,
    u_tilde: &[Q],
    v_b: &[i64],
    mode: RelayMode,
) -> Result<Vec<Q>, SimError> {
    chain.check_nesting()?;
    chain.check_len(u_tilde)?;
    chain.check_len(v_b)?;
    let m = chain.relay_modulus(mode);
    let ratio = Q::new(chain.coeffs.a2, chain.coeffs.a1);
    let m_s = Q::from_integer(chain.m_s);
    (0..chain.dims)
        .map(|i| {
            let coset = mod_lattice(u_tilde[i] - ratio * Q::from_integer(v_b[i]), m)?;
            mod_lattice(coset, m_s)
        })
        .collect()
}

/// One transmission through the chain.
#[derive(Debug, Clone, PartialEq)]
pub struct SimOutcome {
    pub t_a: Vec<i64>,
    pub v_a: Vec<i64>,
    pub v_b: Vec<i64>,
    pub d_a: Option<Vec<Q>>,
    pub d_b: Option<Vec<Q>>,
    pub u_r: Vec<i64>,
    pub u_tilde: Vec<Q>,
    pub recovered: Vec<Q>,
    pub exact_match: bool,
}

/// Denominator of the dither grid.
pub const DITHER_DENOMINATOR: i64 = 64;

fn draw_dither<R: Rng>(rng: &mut R, cell: Q, dims: usize) -> Vec<Q> {
    (0..dims).map(|_| cell * Q::new(rng.gen_range(0..DITHER_DENOMINATOR), DITHER_DENOMINATOR)).collect()
}

/// Draws a uniform message, randomization point and jammer point (and
/// dithers when `dithered`), sends them through the noiseless channel and
/// recovers the message at the destination.
pub fn run_trial<R: Rng>(
    chain: &ScalarLatticeChain,
    mode: RelayMode,
    dithered: bool,
    rng: &mut R,
) -> Result<SimOutcome, SimError> {
    let n = chain.dims;
    let t_a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..chain.m_s)).collect();
    let idx: Vec<i64> = (0..n).map(|_| rng.gen_range(0..chain.m_e)).collect();
    let v_b: Vec<i64> = (0..n).map(|_| rng.gen_range(0..chain.m_b)).collect();
    let (d_a, d_b) = if dithered {
        let cell_a = Q::from_integer(chain.coarse()) / chain.beta_a;
        let cell_b = Q::from_integer(chain.m_b) / chain.beta_b;
        (Some(draw_dither(rng, cell_a, n)), Some(draw_dither(rng, cell_b, n)))
    } else {
        (None, None)
    };

    let x_a = encode_source(chain, &t_a, &idx, d_a.as_deref())?;
    let x_b = encode_jammer(chain, &v_b, d_b.as_deref())?;

    // relay decoding is granted: the lattice points are read off the inputs
    let tv = lattice_point(&x_a, chain.beta_a, d_a.as_deref(), chain.coarse())?;
    let vb = lattice_point(&x_b, chain.beta_b, d_b.as_deref(), chain.m_b)?;
    let v_a: Vec<i64> = tv.iter().map(|&p| p - mod_int(p, chain.m_s)).collect();
    let t_rx: Vec<i64> = tv.iter().map(|&p| mod_int(p, chain.m_s)).collect();

    let u_r = relay_combine(chain, &t_rx, &v_a, &vb)?;
    let u_tilde = relay_modulo(chain, &u_r, mode)?;
    let recovered = destination_recover(chain, &u_tilde, &v_b, mode)?;
    let exact_match = recovered.iter().zip(&t_a).all(|(r, &t)| *r == Q::from_integer(t));
    Ok(SimOutcome { t_a, v_a, v_b, d_a, d_b, u_r, u_tilde, recovered, exact_match })
}
