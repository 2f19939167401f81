//! Random binning of outer codewords: messages label bins, and the encoder
//! sends a codeword drawn uniformly from the labelled bin.
//!
//! Codewords are sequences of length `ceil(l')` over an inner alphabet and
//! are identified by their base-`inner_alphabet` index.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::SimError;

/// Largest codebook size or table size built.
pub const BINNING_BUDGET: u128 = 1 << 22;

/// Parameters of a binning code for `l` source symbols of entropy `h` bits,
/// inner codes of dimension `n`, transmit rate `r_t` and randomization rate
/// `r_o` (bits per dimension).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BinningCodeSpec {
    pub l: u32,
    pub h: f64,
    pub n: u32,
    pub r_t: f64,
    pub r_o: f64,
    /// `l h / (n (r_t - r_o))`.
    pub l_prime: f64,
    /// `2^floor(l h)`.
    pub bins: u64,
    /// `2^floor(l' n r_o)`.
    pub bin_size: u64,
    pub seed: u64,
}

fn pow2(exp: f64) -> Result<u64, SimError> {
    if exp >= 63.0 {
        return Err(SimError::InvalidBinning("more than 2^62 bins or codewords per bin"));
    }
    Ok(1u64 << exp as u32)
}

impl BinningCodeSpec {
    pub fn new(l: u32, h: f64, n: u32, r_t: f64, r_o: f64, seed: u64) -> Result<Self, SimError> {
        if l == 0 || n == 0 {
            return Err(SimError::InvalidBinning("l and n must be positive"));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(SimError::InvalidBinning("source entropy must be positive"));
        }
        if !(r_o >= 0.0 && r_t > r_o && r_t.is_finite()) {
            return Err(SimError::InvalidBinning("rates must satisfy 0 <= r_o < r_t"));
        }
        let l_prime = l as f64 * h / (n as f64 * (r_t - r_o));
        let bins = pow2((l as f64 * h).floor())?;
        let bin_size = pow2((l_prime * n as f64 * r_o).floor())?;
        Ok(Self { l, h, n, r_t, r_o, l_prime, bins, bin_size, seed })
    }

    /// Codeword length `ceil(l')`.
    pub fn codeword_len(&self) -> u32 {
        self.l_prime.ceil() as u32
    }
}

/// A realized binning code.
#[derive(Debug, Clone, PartialEq)]
pub struct BinningCode {
    pub spec: BinningCodeSpec,
    pub inner_alphabet: u64,
    bins: Vec<Vec<u64>>,
    /// Bin of each codeword; `None` for codewords dropped from full bins.
    owner: Vec<Option<u32>>,
}

impl BinningCode {
    pub fn codebook_size(&self) -> u64 {
        self.owner.len() as u64
    }

    pub fn bin(&self, label: u64) -> Option<&[u64]> {
        self.bins.get(label as usize).map(|b| b.as_slice())
    }

    pub fn bin_count(&self) -> usize {
        self.bins.len()
    }

    pub fn empty_bins(&self) -> usize {
        self.bins.iter().filter(|b| b.is_empty()).count()
    }

    pub fn empty_fraction(&self) -> f64 {
        self.empty_bins() as f64 / self.bins.len() as f64
    }

    /// Bin label of a codeword index, if it was kept.
    pub fn label_of(&self, codeword: u64) -> Option<u64> {
        self.owner.get(codeword as usize).copied().flatten().map(u64::from)
    }

    /// Inner-alphabet symbols of a codeword, most significant first.
    pub fn symbols(&self, codeword: u64) -> Vec<u64> {
        let len = self.spec.codeword_len() as usize;
        let mut out = vec![0; len];
        let mut rest = codeword;
        for slot in out.iter_mut().rev() {
            *slot = rest % self.inner_alphabet;
            rest /= self.inner_alphabet;
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn clear_bin(&mut self, label: u64) {
        for c in std::mem::take(&mut self.bins[label as usize]) {
            self.owner[c as usize] = None;
        }
    }
}

/// Assigns each of the `inner_alphabet^ceil(l')` codewords to a uniformly
/// random bin. A codeword whose bin already holds `bin_size` codewords is
/// dropped from the code.
pub fn build_binning_code(spec: &BinningCodeSpec, inner_alphabet: u64) -> Result<BinningCode, SimError> {
    if inner_alphabet < 2 {
        return Err(SimError::InvalidBinning("inner alphabet needs at least two symbols"));
    }
    if spec.bins > u32::MAX as u64 {
        return Err(SimError::InvalidBinning("more than 2^32 bins"));
    }
    let table = spec.bins as u128 * spec.bin_size as u128;
    if table > BINNING_BUDGET {
        return Err(SimError::BudgetExceeded { required: table, budget: BINNING_BUDGET });
    }
    let mut codewords: u128 = 1;
    for _ in 0..spec.codeword_len() {
        codewords = codewords.saturating_mul(inner_alphabet as u128);
    }
    if codewords > BINNING_BUDGET {
        return Err(SimError::BudgetExceeded { required: codewords, budget: BINNING_BUDGET });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut bins: Vec<Vec<u64>> = vec![Vec::new(); spec.bins as usize];
    let mut owner = vec![None; codewords as usize];
    for (c, slot) in owner.iter_mut().enumerate() {
        let b = rng.gen_range(0..spec.bins) as usize;
        if (bins[b].len() as u64) < spec.bin_size {
            bins[b].push(c as u64);
            *slot = Some(b as u32);
        }
    }
    Ok(BinningCode { spec: *spec, inner_alphabet, bins, owner })
}

/// Result of encoding and decoding a message sequence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundTrip {
    pub sent: Vec<u64>,
    /// Decoded labels; `None` when the received codeword belongs to no bin.
    pub decoded: Vec<Option<u64>>,
    /// Messages whose bin was empty; their codeword was drawn from the
    /// whole codebook.
    pub empty_bin: Vec<bool>,
}

impl RoundTrip {
    pub fn mismatches(&self) -> usize {
        self.decoded.iter().zip(&self.sent).filter(|(d, &m)| **d != Some(m)).count()
    }

    pub fn empty_bin_events(&self) -> usize {
        self.empty_bin.iter().filter(|&&e| e).count()
    }
}

/// Encodes each message label with a uniformly chosen codeword of its bin
/// and decodes by looking up the codeword's bin.
pub fn binning_roundtrip(code: &BinningCode, messages: &[u64], seed: u64) -> Result<RoundTrip, SimError> {
    let bins = code.bin_count() as u64;
    if let Some(&label) = messages.iter().find(|&&m| m >= bins) {
        return Err(SimError::LabelOutOfRange { label, bins });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut decoded = Vec::with_capacity(messages.len());
    let mut empty_bin = Vec::with_capacity(messages.len());
    for &m in messages {
        let bin = &code.bins[m as usize];
        let (codeword, empty) = match bin.choose(&mut rng) {
            Some(&c) => (c, false),
            None => (rng.gen_range(0..code.codebook_size()), true),
        };
        decoded.push(code.label_of(codeword));
        empty_bin.push(empty);
    }
    Ok(RoundTrip { sent: messages.to_vec(), decoded, empty_bin })
}
