use num_integer::Integer;
use num_traits::Zero;

use super::Q;
use crate::error::SimError;

/// `x - m floor(x / m)`, the representative of `x` in `[0, m)`.
pub fn mod_lattice(x: Q, modulus: Q) -> Result<Q, SimError> {
    if modulus <= Q::zero() {
        return Err(SimError::ZeroModulus);
    }
    Ok(x - modulus * (x / modulus).floor())
}

/// Integer residue in `[0, m)`.
pub(crate) fn mod_int(x: i64, m: i64) -> i64 {
    x.mod_floor(&m)
}
