//! Echelon bases of `S_k(SL_2(Z))` and `S_k(Gamma0(2))`.
//!
//! Level 1 uses `Delta^j E4^a E6^b` with `12j + 4a + 6b = k`, level 2 uses
//! `Delta_2 A^a Bminus^b` with `2a + 4b = k - 8`. Both families have leading
//! terms `q, q^2, ..., q^d` after echelonization, and the echelon form is
//! integral.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::dims::dim_cusp;
use super::series::QExpansion;
use super::standard::{standard_series, StandardSeries};
use crate::error::{Error, Result};

/// Precision used throughout: `2 dim + 10`.
pub fn default_precision(dim: u64) -> usize {
    2 * dim as usize + 10
}

fn powers(base: &QExpansion, max: usize) -> Vec<QExpansion> {
    let mut out = vec![QExpansion::one(base.precision())];
    for i in 0..max {
        let next = out[i].mul(base);
        out.push(next);
    }
    out
}

fn generators(level: u64, k: i64, precision: usize, dim: usize) -> Vec<QExpansion> {
    let k = k as usize;
    match level {
        1 => {
            let delta = standard_series(StandardSeries::Delta, precision);
            let e4 = powers(&standard_series(StandardSeries::E4, precision), k / 4);
            let e6 = standard_series(StandardSeries::E6, precision);
            let delta_pows = powers(&delta, dim);
            (1..=dim)
                .map(|j| {
                    let m = k - 12 * j;
                    let (a, b) = if m % 4 == 0 { (m / 4, 0) } else { ((m - 6) / 4, 1) };
                    let mut f = delta_pows[j].mul(&e4[a]);
                    if b == 1 {
                        f = f.mul(&e6);
                    }
                    f
                })
                .collect()
        }
        2 => {
            let m = k - 8;
            let d2 = standard_series(StandardSeries::Delta2, precision);
            let a = powers(&standard_series(StandardSeries::A, precision), m / 2);
            let b = powers(&standard_series(StandardSeries::Bminus, precision), m / 4);
            (0..=m / 4).map(|j| d2.mul(&a[(m - 4 * j) / 2]).mul(&b[j])).collect()
        }
        _ => unreachable!("level checked by caller"),
    }
}

/// Reduced row echelon form. Returns pivot columns alongside the rows.
pub fn echelonize(rows: &[QExpansion]) -> (Vec<QExpansion>, Vec<usize>) {
    let mut rows: Vec<Vec<BigRational>> = rows.iter().map(|r| r.coefficients().to_vec()).collect();
    let precision = rows.iter().map(|r| r.len() - 1).min().unwrap_or(0);
    for r in rows.iter_mut() {
        r.truncate(precision + 1);
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..=precision {
        let Some(found) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = BigRational::one() / rows[rank][col].clone();
        for c in rows[rank].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *c -= &factor * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    let series = rows.into_iter().map(|r| QExpansion::new(r, precision)).collect();
    (series, pivots)
}

/// Echelonized integral basis of `S_k(Gamma0(N))`, `N` in `{1, 2}`, with
/// basis element `i` having leading term `q^{i+1}`.
pub fn cusp_basis(level: u64, k: i64, precision: usize) -> Result<Vec<QExpansion>> {
    if level != 1 && level != 2 {
        return Err(Error::UnsupportedLevel(level));
    }
    if k < 4 {
        return Err(Error::UnsupportedWeight(k));
    }
    let dim = dim_cusp(level, k)?;
    let needed = default_precision(dim);
    if precision < needed {
        return Err(Error::Precision(format!(
            "S_{k}(Gamma0({level})) has dimension {dim}; precision {precision} is below {needed}"
        )));
    }
    if dim == 0 {
        return Ok(vec![]);
    }
    let gens = generators(level, k, precision, dim as usize);
    let (basis, pivots) = echelonize(&gens);
    let expected: Vec<usize> = (1..=dim as usize).collect();
    if pivots != expected {
        return Err(Error::Consistency(format!(
            "echelon pivots {pivots:?} for S_{k}(Gamma0({level})), expected {expected:?}"
        )));
    }
    if let Some(bad) = basis.iter().position(|f| !f.is_integral()) {
        return Err(Error::Consistency(format!("echelon basis element {bad} of S_{k}(Gamma0({level})) is not integral")));
    }
    Ok(basis)
}
