//! New-subspace dimensions at levels 1, 2, 4 and the Atkin-Lehner split at 2.
//!
//! The split is computed twice. The trace method compares `U_2` on level 2
//! with `T_2` on level 1: an old pair `f(z), f(2z)` contributes `a_2(f)` to
//! both traces, and a newform with Atkin-Lehner eigenvalue `lambda` has
//! `a_2 = -lambda 2^{r/2-1}`. The oracle counts Fricke signs on the
//! structure basis `Delta_2 A^a Bminus^b`, where `Delta_2` is Fricke-even and
//! `A`, `Bminus` are Fricke-odd, and old pairs contribute trace zero.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::dims::dim_cusp;
use super::hecke::{hecke_trace, HeckeOperator};
use crate::error::{Error, Result};

/// Largest weight accepted by [`newform_counts`].
pub const MAX_WEIGHT: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NewformCounts {
    pub r: u64,
    pub tau1: u64,
    pub tau2: u64,
    pub tau4: u64,
    #[serde(rename = "tauPlus")]
    pub tau_plus: u64,
    #[serde(rename = "tauMinus")]
    pub tau_minus: u64,
    #[serde(rename = "dimS_r_Gamma0_4")]
    pub dim_s4: u64,
}

impl NewformCounts {
    /// Counts with every entry zero, as in weight 2.
    pub fn zero(r: u64) -> Self {
        NewformCounts { r, tau1: 0, tau2: 0, tau4: 0, tau_plus: 0, tau_minus: 0, dim_s4: 0 }
    }
}

/// `(tau1, tau2, tau4)` by inclusion-exclusion over the divisors of 4.
pub fn new_dimensions(r: u64) -> Result<(u64, u64, u64)> {
    let k = r as i64;
    let d1 = dim_cusp(1, k)?;
    let d2 = dim_cusp(2, k)?;
    let d4 = dim_cusp(4, k)?;
    let tau2 = d2
        .checked_sub(2 * d1)
        .ok_or_else(|| Error::Consistency(format!("negative level-2 new dimension in weight {r}")))?;
    let tau4 = d4
        .checked_sub(3 * d1 + 2 * tau2)
        .ok_or_else(|| Error::Consistency(format!("negative level-4 new dimension in weight {r}")))?;
    Ok((d1, tau2, tau4))
}

fn check_weight(r: u64) -> Result<()> {
    if r % 2 != 0 || r < 2 {
        return Err(Error::UnsupportedWeight(r as i64));
    }
    if r > MAX_WEIGHT {
        return Err(Error::OutOfRange { what: "weight r", value: r as i64, min: 2, max: MAX_WEIGHT as i64 });
    }
    Ok(())
}

fn split(tau2: u64, difference: i64, method: &str, r: u64) -> Result<(u64, u64)> {
    let t = tau2 as i64;
    if (t + difference) % 2 != 0 || difference.abs() > t {
        return Err(Error::Consistency(format!(
            "{method} in weight {r}: difference {difference} incompatible with tau2 = {tau2}"
        )));
    }
    Ok((((t + difference) / 2) as u64, ((t - difference) / 2) as u64))
}

/// Atkin-Lehner split from the trace of `U_2` minus the trace of `T_2`.
pub fn al_split_trace(r: u64) -> Result<(u64, u64)> {
    check_weight(r)?;
    let (_, tau2, _) = new_dimensions(r)?;
    if r < 8 {
        return Ok((0, 0));
    }
    let k = r as i64;
    let diff = hecke_trace(HeckeOperator::U2Level2, k)? - hecke_trace(HeckeOperator::T2Level1, k)?;
    let unit = BigInt::from(1u8) << (r / 2 - 1) as usize;
    if &diff % &unit != BigInt::from(0) {
        return Err(Error::Consistency(format!("trace difference {diff} in weight {r} is not divisible by {unit}")));
    }
    let d = -(diff / unit);
    let d = i64::try_from(&d).map_err(|_| Error::Consistency(format!("trace difference overflow in weight {r}")))?;
    split(tau2, d, "trace method", r)
}

/// Signed count of `2a + 4b = r - 8`, the trace of the Fricke involution.
pub fn fricke_trace(r: u64) -> i64 {
    if r < 8 {
        return 0;
    }
    let m = r - 8;
    (0..=m / 4).map(|b| if ((m - 4 * b) / 2 + b) % 2 == 0 { 1 } else { -1 }).sum()
}

/// Atkin-Lehner split from the Fricke sign count.
pub fn al_split_oracle(r: u64) -> Result<(u64, u64)> {
    if r % 2 != 0 {
        return Err(Error::UnsupportedWeight(r as i64));
    }
    if r < 8 {
        return Ok((0, 0));
    }
    let d2 = dim_cusp(2, r as i64)?;
    let d1 = dim_cusp(1, r as i64)?;
    split(d2 - 2 * d1, fricke_trace(r), "oracle", r)
}

fn memo() -> &'static Mutex<HashMap<u64, NewformCounts>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, NewformCounts>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All newform bookkeeping in weight `r`, memoized.
///
/// Fails hard if the trace method and the oracle disagree.
pub fn newform_counts(r: u64) -> Result<NewformCounts> {
    check_weight(r)?;
    if let Some(c) = memo().lock().expect("newform memo poisoned").get(&r) {
        return Ok(*c);
    }
    let (tau1, tau2, tau4) = new_dimensions(r)?;
    let trace = al_split_trace(r)?;
    let oracle = al_split_oracle(r)?;
    if trace != oracle {
        return Err(Error::Consistency(format!(
            "Atkin-Lehner split in weight {r}: trace method {trace:?}, oracle {oracle:?}"
        )));
    }
    let counts = NewformCounts {
        r,
        tau1,
        tau2,
        tau4,
        tau_plus: trace.0,
        tau_minus: trace.1,
        dim_s4: dim_cusp(4, r as i64)?,
    };
    memo().lock().expect("newform memo poisoned").insert(r, counts);
    Ok(counts)
}

/// One row of a regression fixtures file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub r: u64,
    pub tau1: u64,
    pub tau2: u64,
    pub tau4: u64,
    #[serde(rename = "tauPlus")]
    pub tau_plus: u64,
    #[serde(rename = "tauMinus")]
    pub tau_minus: u64,
}

impl From<NewformCounts> for FixtureEntry {
    fn from(c: NewformCounts) -> Self {
        FixtureEntry { r: c.r, tau1: c.tau1, tau2: c.tau2, tau4: c.tau4, tau_plus: c.tau_plus, tau_minus: c.tau_minus }
    }
}

/// A fixture row that the engine does not reproduce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureMismatch {
    pub expected: FixtureEntry,
    pub computed: FixtureEntry,
}

pub fn parse_fixtures(json: &str) -> Result<Vec<FixtureEntry>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(format!("fixtures: {e}")))
}

/// Recomputes every fixture row and returns the ones that differ.
pub fn check_fixtures(entries: &[FixtureEntry]) -> Result<Vec<FixtureMismatch>> {
    let mut out = Vec::new();
    for e in entries {
        let computed = FixtureEntry::from(newform_counts(e.r)?);
        if computed != *e {
            out.push(FixtureMismatch { expected: *e, computed });
        }
    }
    Ok(out)
}
