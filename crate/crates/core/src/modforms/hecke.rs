//! Hecke operators at 2 acting on the echelon bases.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::basis::{cusp_basis, default_precision};
use super::dims::dim_cusp;
use super::series::QExpansion;
use crate::error::{Error, Result};

/// The two operators needed for the Atkin-Lehner split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeckeOperator {
    /// `T_2` on `S_k(SL_2(Z))`.
    T2Level1,
    /// `U_2` on `S_k(Gamma0(2))`.
    U2Level2,
}

impl HeckeOperator {
    pub fn level(self) -> u64 {
        match self {
            HeckeOperator::T2Level1 => 1,
            HeckeOperator::U2Level2 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HeckeOperator::T2Level1 => "T2_level1",
            HeckeOperator::U2Level2 => "U2_level2",
        }
    }
}

impl fmt::Display for HeckeOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HeckeOperator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T2_level1" | "T2" => Ok(HeckeOperator::T2Level1),
            "U2_level2" | "U2" => Ok(HeckeOperator::U2Level2),
            other => Err(Error::Parse(format!("unknown Hecke operator {other:?}"))),
        }
    }
}

fn apply(op: HeckeOperator, k: i64, f: &QExpansion) -> Result<QExpansion> {
    let half = f.precision() / 2;
    let power: BigRational = BigRational::from_integer(BigInt::from(2u32).pow((k - 1) as u32));
    let mut out = Vec::with_capacity(half + 1);
    for n in 0..=half {
        let mut c = f.coefficient(2 * n)?.clone();
        if op == HeckeOperator::T2Level1 && n % 2 == 0 {
            c += &power * f.coefficient(n / 2)?;
        }
        out.push(c);
    }
    Ok(QExpansion::new(out, half))
}

/// Matrix of `op` on the echelon basis of weight `k` at precision `precision`.
///
/// Row `i` lists the coordinates of `op(f_i)` in the basis, so the matrix
/// acts on row vectors. Every image is checked against the basis through
/// the full precision it is known to.
pub fn hecke_matrix(op: HeckeOperator, k: i64, precision: usize) -> Result<Vec<Vec<BigInt>>> {
    let dim = dim_cusp(op.level(), k)?;
    if dim == 0 {
        return Ok(vec![]);
    }
    let needed = default_precision(dim);
    if precision < needed {
        return Err(Error::Precision(format!("{op} in weight {k} needs precision {needed}, got {precision}")));
    }
    let basis = cusp_basis(op.level(), k, precision)?;
    let d = basis.len();
    let mut matrix = Vec::with_capacity(d);
    for (i, f) in basis.iter().enumerate() {
        let image = apply(op, k, f)?;
        let p = image.precision();
        let mut residual = image.clone();
        let mut row = Vec::with_capacity(d);
        for (j, g) in basis.iter().enumerate() {
            let c = image.coefficient(j + 1)?.clone();
            if !c.is_integer() {
                return Err(Error::Consistency(format!("{op} weight {k}: entry ({i},{j}) = {c} is not integral")));
            }
            residual = residual.sub(&g.truncate(p)?.scale(&c));
            row.push(c.to_integer());
        }
        if !residual.is_zero() {
            return Err(Error::Consistency(format!(
                "{op} weight {k}: image of basis element {i} leaves the span at precision {p}"
            )));
        }
        matrix.push(row);
    }
    Ok(matrix)
}

/// Trace of `op` in weight `k` at the default precision.
pub fn hecke_trace(op: HeckeOperator, k: i64) -> Result<BigInt> {
    let dim = dim_cusp(op.level(), k)?;
    let m = hecke_matrix(op, k, default_precision(dim))?;
    Ok(m.iter().enumerate().map(|(i, row)| row[i].clone()).fold(BigInt::zero(), |a, b| a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(m: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
        m.iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
    }

    #[test]
    fn tau_two_and_delta2() {
        assert_eq!(ints(&hecke_matrix(HeckeOperator::T2Level1, 12, 30).unwrap()), vec![vec![-24]]);
        assert_eq!(ints(&hecke_matrix(HeckeOperator::U2Level2, 8, 30).unwrap()), vec![vec![-8]]);
        assert!(hecke_matrix(HeckeOperator::U2Level2, 6, 30).unwrap().is_empty());
        assert!(hecke_matrix(HeckeOperator::U2Level2, 2, 0).unwrap().is_empty());
    }

    #[test]
    fn weight_24_level_one_trace() {
        // T_2 eigenvalues in weight 24 are 540 +- 12 sqrt(144169).
        assert_eq!(hecke_trace(HeckeOperator::T2Level1, 24).unwrap(), BigInt::from(1080));
    }

    #[test]
    fn precision_independence() {
        for k in [16, 24, 30] {
            for op in [HeckeOperator::T2Level1, HeckeOperator::U2Level2] {
                let d = dim_cusp(op.level(), k).unwrap();
                let p = default_precision(d);
                assert_eq!(hecke_matrix(op, k, p).unwrap(), hecke_matrix(op, k, p + 20).unwrap());
            }
        }
    }
}
