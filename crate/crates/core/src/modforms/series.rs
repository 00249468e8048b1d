//! Truncated power series with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `a_0 + a_1 q + ... + a_P q^P + O(q^{P+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QExpansion {
    coeffs: Vec<BigRational>,
}

impl QExpansion {
    /// Pads with zeros or cuts to exactly `precision + 1` coefficients.
    pub fn new(mut coeffs: Vec<BigRational>, precision: usize) -> Self {
        coeffs.resize(precision + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], precision: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(), precision)
    }

    pub fn from_bigints(coeffs: Vec<BigInt>, precision: usize) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect(), precision)
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(vec![], precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::new(vec![BigRational::one()], precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; an error beyond the precision.
    pub fn coefficient(&self, n: usize) -> Result<&BigRational> {
        self.coeffs.get(n).ok_or_else(|| {
            Error::Precision(format!("coefficient {n} requested from a series known to O(q^{})", self.coeffs.len()))
        })
    }

    /// Lowers the precision; raising it would invent coefficients and is refused.
    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision > self.precision() {
            return Err(Error::Precision(format!(
                "cannot extend a series known to O(q^{}) to O(q^{})",
                self.precision() + 1,
                precision + 1
            )));
        }
        Ok(Self { coeffs: self.coeffs[..=precision].to_vec() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        Self { coeffs: (0..=p).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        Self { coeffs: (0..=p).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Cauchy product, truncated at the smaller precision.
    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        let integral = self.is_integral() && other.is_integral();
        if integral {
            // Integer fast path: avoids a gcd per term.
            let a: Vec<BigInt> = self.coeffs[..=p].iter().map(|c| c.numer().clone()).collect();
            let b: Vec<BigInt> = other.coeffs[..=p].iter().map(|c| c.numer().clone()).collect();
            let mut out = vec![BigInt::zero(); p + 1];
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (j, bj) in b[..=p - i].iter().enumerate() {
                    if !bj.is_zero() {
                        out[i + j] += ai * bj;
                    }
                }
            }
            return Self::from_bigints(out, p);
        }
        let mut out = vec![BigRational::zero(); p + 1];
        for (i, ai) in self.coeffs[..=p].iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in other.coeffs[..=p - i].iter().enumerate() {
                if !bj.is_zero() {
                    out[i + j] += ai * bj;
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.precision());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `f(q) -> f(q^m)`; the result is known to `O(q^{m(P+1)})`.
    pub fn dilate(&self, m: usize) -> Self {
        assert!(m >= 1, "dilation factor must be positive");
        let p = m * (self.precision() + 1) - 1;
        let mut out = vec![BigRational::zero(); p + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * m] = c.clone();
        }
        Self { coeffs: out }
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{i}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} + O(q^{})", terms.join(" + "), self.precision() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn product_truncates() {
        let a = QExpansion::from_ints(&[1, 1], 2);
        let b = QExpansion::from_ints(&[1, -1], 2);
        assert_eq!(a.mul(&b), QExpansion::from_ints(&[1, 0, -1], 2));
        let c = QExpansion::from_ints(&[1, 1], 5);
        assert_eq!(a.mul(&c).precision(), 2);
    }

    #[test]
    fn truncation_and_reads() {
        let geom = QExpansion::from_ints(&[1; 10], 9);
        let t = geom.truncate(3).unwrap();
        assert_eq!(t, QExpansion::from_ints(&[1, 1, 1, 1], 3));
        assert!(matches!(t.coefficient(4), Err(Error::Precision(_))));
        assert!(t.truncate(5).is_err());
    }

    #[test]
    fn binomial_coefficient() {
        let f = QExpansion::from_ints(&[1, -1], 8).pow(8);
        assert_eq!(f.coefficient(2).unwrap(), &int(28));
        assert_eq!(f.coefficient(8).unwrap(), &int(1));
    }

    #[test]
    fn rational_products() {
        let half = QExpansion::new(vec![BigRational::new(1.into(), 2.into()), int(1)], 3);
        let sq = half.mul(&half);
        assert_eq!(sq.coefficient(0).unwrap(), &BigRational::new(1.into(), 4.into()));
        assert_eq!(sq.coefficient(1).unwrap(), &int(1));
        assert!(!sq.is_integral());
    }

    #[test]
    fn dilation_and_shift() {
        let f = QExpansion::from_ints(&[1, 2, 3], 2);
        let g = f.dilate(2);
        assert_eq!(g.precision(), 5);
        assert_eq!(g, QExpansion::from_ints(&[1, 0, 2, 0, 3, 0], 5));
        assert_eq!(f.shift(1), QExpansion::from_ints(&[0, 1, 2, 3], 3));
        assert_eq!(f.shift(1).valuation(), Some(1));
    }
}
