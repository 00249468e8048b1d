//! Closed-form dimensions of spaces of cusp forms on `Gamma0(N)`, `N | 4`.

use crate::error::{Error, Result};

/// `dim S_k(Gamma0(N))` for `N` in `{1, 2, 4}` and even `k >= 2`.
pub fn dim_cusp(level: u64, k: i64) -> Result<u64> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::UnsupportedWeight(k));
    }
    let k = k as u64;
    match level {
        1 => Ok(if k == 2 {
            0
        } else if k % 12 == 2 {
            k / 12 - 1
        } else {
            k / 12
        }),
        // Genus zero for both levels: no weight 2 cusp forms.
        2 => Ok(if k == 2 { 0 } else { k / 4 - 1 }),
        4 => Ok(if k == 2 { 0 } else { k / 2 - 2 }),
        other => Err(Error::UnsupportedLevel(other)),
    }
}
