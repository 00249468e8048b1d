//! Classical generators as q-expansions.
//!
//! `E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n` with constants `-24`, `240`,
//! `-504` for `k = 2, 4, 6`. The cusp forms `Delta` and `Delta_2` are expanded
//! directly from their eta products.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::series::QExpansion;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StandardSeries {
    E2,
    E4,
    E6,
    Delta,
    /// `eta(z)^8 eta(2z)^8`, the weight 8 cusp form of level 2.
    Delta2,
    /// `2 E2(2z) - E2(z)`, weight 2 on `Gamma0(2)`.
    A,
    /// `E4(z) - 4 E4(2z)`, weight 4 on `Gamma0(2)`.
    Bminus,
}

impl StandardSeries {
    pub const ALL: [StandardSeries; 7] = [
        StandardSeries::E2,
        StandardSeries::E4,
        StandardSeries::E6,
        StandardSeries::Delta,
        StandardSeries::Delta2,
        StandardSeries::A,
        StandardSeries::Bminus,
    ];

    pub fn weight(self) -> u32 {
        match self {
            StandardSeries::E2 | StandardSeries::A => 2,
            StandardSeries::E4 | StandardSeries::Bminus => 4,
            StandardSeries::E6 => 6,
            StandardSeries::Delta2 => 8,
            StandardSeries::Delta => 12,
        }
    }
}

impl FromStr for StandardSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "E2" => StandardSeries::E2,
            "E4" => StandardSeries::E4,
            "E6" => StandardSeries::E6,
            "Delta" => StandardSeries::Delta,
            "Delta2" => StandardSeries::Delta2,
            "A" => StandardSeries::A,
            "Bminus" => StandardSeries::Bminus,
            other => return Err(Error::Parse(format!("unknown series {other:?}"))),
        })
    }
}

/// `sigma_k(n)`, the sum of `d^k` over divisors of `n`.
pub fn sigma(n: u64, k: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

fn eisenstein(constant: i64, k: u32, precision: usize) -> QExpansion {
    let mut coeffs = vec![BigInt::one()];
    for n in 1..=precision as u64 {
        coeffs.push(sigma(n, k - 1) * constant);
    }
    QExpansion::from_bigints(coeffs, precision)
}

/// `prod_{n >= 1} prod_{(m, e)} (1 - q^{mn})^e` to `O(q^{P+1})`.
pub fn eta_product(factors: &[(usize, u32)], precision: usize) -> QExpansion {
    let mut f = vec![BigInt::zero(); precision + 1];
    f[0] = BigInt::one();
    for &(m, e) in factors {
        let mut step = m;
        while step <= precision {
            for _ in 0..e {
                for i in (step..=precision).rev() {
                    let t = f[i - step].clone();
                    f[i] -= t;
                }
            }
            step += m;
        }
    }
    QExpansion::from_bigints(f, precision)
}

pub fn standard_series(name: StandardSeries, precision: usize) -> QExpansion {
    let p = precision;
    match name {
        StandardSeries::E2 => eisenstein(-24, 2, p),
        StandardSeries::E4 => eisenstein(240, 4, p),
        StandardSeries::E6 => eisenstein(-504, 6, p),
        StandardSeries::Delta => {
            if p == 0 {
                return QExpansion::zero(0);
            }
            eta_product(&[(1, 24)], p - 1).shift(1)
        }
        StandardSeries::Delta2 => {
            if p == 0 {
                return QExpansion::zero(0);
            }
            eta_product(&[(1, 8), (2, 8)], p - 1).shift(1)
        }
        StandardSeries::A => {
            let e2 = eisenstein(-24, 2, p);
            let e2_2 = eisenstein(-24, 2, p / 2).dilate(2).truncate(p).expect("dilated far enough");
            e2_2.scale_int(2).sub(&e2)
        }
        StandardSeries::Bminus => {
            let e4 = eisenstein(240, 4, p);
            let e4_2 = eisenstein(240, 4, p / 2).dilate(2).truncate(p).expect("dilated far enough");
            e4.sub(&e4_2.scale_int(4))
        }
    }
}
