//! Local Euler factors of lifted L-functions.
//!
//! A factor is a polynomial `P(X)` in `X = p^{-s}` with constant term `1`,
//! standing for `L_p(s) = 1 / P(p^{-s})`. Shifts by half-integers need
//! `sqrt(p)`, so coefficients live in `Q(sqrt(p))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `a + b sqrt(p)` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    pub a: BigRational,
    pub b: BigRational,
    pub p: u64,
}

impl Surd {
    pub fn rational(p: u64, a: BigRational) -> Self {
        Self { a, b: BigRational::zero(), p }
    }

    pub fn zero(p: u64) -> Self {
        Self::rational(p, BigRational::zero())
    }

    pub fn one(p: u64) -> Self {
        Self::rational(p, BigRational::one())
    }

    pub fn sqrt_p(p: u64) -> Self {
        Self { a: BigRational::zero(), b: BigRational::one(), p }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `p^{e/2}` for any integer `e`.
    pub fn half_power(p: u64, e: i64) -> Self {
        let whole = e.div_euclid(2);
        let base = BigRational::from_integer(BigInt::from(p));
        let r = if whole >= 0 { base.pow(whole as u32) } else { BigRational::one() / base.pow((-whole) as u32) };
        if e.rem_euclid(2) == 0 {
            Self::rational(p, r)
        } else {
            Self { a: BigRational::zero(), b: r, p }
        }
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        Surd { a: &self.a + &o.a, b: &self.b + &o.b, p: self.p }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        Surd { a: &self.a - &o.a, b: &self.b - &o.b, p: self.p }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { a: -&self.a, b: -&self.b, p: self.p }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        let p = BigRational::from_integer(BigInt::from(self.p));
        Surd { a: &self.a * &o.a + p * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a, p: self.p }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt({})", self.b, self.p),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "({} {sign} {}*sqrt({}))", self.a, self.b.abs(), self.p)
            }
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `P(X)` with `P(0) = 1`, over `Q(sqrt(p))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EulerFactor {
    pub p: u64,
    /// Coefficients from `X^0` upward; no trailing zeros.
    pub coeffs: Vec<Surd>,
}

impl EulerFactor {
    /// Trivial factor `1`.
    pub fn one(p: u64) -> Result<Self> {
        Self::from_surds(p, vec![Surd::one(p)])
    }

    pub fn from_surds(p: u64, mut coeffs: Vec<Surd>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Argument(format!("{p} is not prime")));
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(Surd::is_zero) {
            coeffs.pop();
        }
        if coeffs.first() != Some(&Surd::one(p)) {
            return Err(Error::Argument("an Euler factor needs constant term 1".into()));
        }
        Ok(Self { p, coeffs })
    }

    pub fn from_polynomial(p: u64, poly: &Polynomial) -> Result<Self> {
        Self::from_surds(p, poly.coeffs().iter().map(|c| Surd::rational(p, c.clone())).collect())
    }

    pub fn from_ints(p: u64, coeffs: &[i64]) -> Result<Self> {
        Self::from_polynomial(p, &Polynomial::from_ints(coeffs))
    }

    /// `1 - a X + chi p^{k-1} X^2` for a weight `k` Hecke eigenform unramified at `p`.
    pub fn gl2_unramified(p: u64, a_p: i64, k: u32) -> Result<Self> {
        let pk = BigInt::from(p).pow(k - 1);
        Self::from_polynomial(
            p,
            &Polynomial::new(vec![
                BigRational::one(),
                BigRational::from_integer(BigInt::from(-a_p)),
                BigRational::from_integer(pk),
            ]),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The polynomial, if all coefficients are rational.
    pub fn rational_polynomial(&self) -> Option<Polynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_rational().then(|| c.a.clone()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    fn require_rational(&self) -> Result<Polynomial> {
        self.rational_polynomial()
            .ok_or_else(|| Error::Argument("factor has coefficients involving sqrt(p); rational input required".into()))
    }
}

impl fmt::Display for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(poly) = self.rational_polynomial() {
            return f.write_str(&poly.display_with("X"));
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*X"),
                _ => format!("{c}*X^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Degree-4 spinor factor as the product of two degree-2 factors.
pub fn spinor_product(e1: &EulerFactor, e2: &EulerFactor) -> Result<EulerFactor> {
    if e1.p != e2.p {
        return Err(Error::Argument(format!("Euler factors at different primes {} and {}", e1.p, e2.p)));
    }
    let p = e1.p;
    let mut out = vec![Surd::zero(p); e1.coeffs.len() + e2.coeffs.len() - 1];
    for (i, a) in e1.coeffs.iter().enumerate() {
        for (j, b) in e2.coeffs.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    EulerFactor::from_surds(p, out)
}

/// Whether a half-integer shift may introduce `sqrt(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ShiftMode {
    Rational,
    Surd,
}

/// A shift `s -> s + t` with `t = half_steps / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HalfInteger {
    pub half_steps: i64,
}

impl HalfInteger {
    pub fn integer(t: i64) -> Self {
        Self { half_steps: 2 * t }
    }

    pub fn is_integer(self) -> bool {
        self.half_steps % 2 == 0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.half_steps / 2)
        } else {
            write!(f, "{}/2", self.half_steps)
        }
    }
}

impl std::str::FromStr for HalfInteger {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected an integer or n/2, got {s:?}"));
        match s.trim().split_once('/') {
            Some((n, "2")) => Ok(Self { half_steps: n.trim().parse().map_err(|_| bad())? }),
            Some(_) => Err(bad()),
            None => Ok(Self::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

/// `P(X) -> P(p^{-t} X)`, the factor of `L_p(s + t)`.
pub fn shift(e: &EulerFactor, t: HalfInteger, mode: ShiftMode) -> Result<EulerFactor> {
    if mode == ShiftMode::Rational && !t.is_integer() {
        return Err(Error::Mode { exponent: t.to_string() });
    }
    let coeffs = e
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c * &Surd::half_power(e.p, -t.half_steps * n as i64))
        .collect();
    EulerFactor::from_surds(e.p, coeffs)
}

/// `num(X) / den(X)` in lowest terms, with `den(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalFactor {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl RationalFactor {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::Argument("denominator must not vanish at X = 0".into()));
        }
        let g = numerator.gcd(&denominator);
        let (num, _) = numerator.div_rem(&g);
        let (den, _) = denominator.div_rem(&g);
        let c = BigRational::one() / den.coeff(0);
        Ok(Self { numerator: num.scale(&c), denominator: den.scale(&c) })
    }

    /// True when the value is `1 / P(X)` for a polynomial `P`.
    pub fn is_inverse_polynomial(&self) -> bool {
        self.numerator == Polynomial::one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator == Polynomial::one()
    }
}

impl fmt::Display for RationalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator.display_with("X"), self.denominator.display_with("X"))
    }
}

fn linear(c: BigInt) -> Polynomial {
    Polynomial::new(vec![BigRational::one(), BigRational::from_integer(c)])
}

fn power(p: u64, e: i64) -> Result<BigInt> {
    u32::try_from(e)
        .map(|e| BigInt::from(p).pow(e))
        .map_err(|_| Error::Argument(format!("weight too small for exponent {e}")))
}

/// The correction `(1 - p^{k-1}X)(1 - p^{k-2}X) / (1 + eps p^{k-2}X)`, reduced.
pub fn sk_correction(p: u64, k: i64, eps: i8) -> Result<RationalFactor> {
    if eps != 1 && eps != -1 {
        return Err(Error::Argument(format!("epsilon must be +1 or -1, got {eps}")));
    }
    let (a, b) = (power(p, k - 1)?, power(p, k - 2)?);
    let num = &linear(-a) * &linear(-b.clone());
    RationalFactor::new(num, linear(b * BigInt::from(eps)))
}

/// Local factor at `p` of `zeta(s-k+1) zeta(s-k+2) L(f,s)`, times the
/// correction when `p` divides `M`.
///
/// The result is in lowest terms; it need not be an inverse polynomial.
pub fn sk_classical_factor(p: u64, k: i64, eps: Option<i8>, in_m: bool, ef: &EulerFactor) -> Result<RationalFactor> {
    if ef.p != p {
        return Err(Error::Argument(format!("factor of f is at {}, not {p}", ef.p)));
    }
    let f = ef.require_rational()?;
    let zeta = &linear(-power(p, k - 1)?) * &linear(-power(p, k - 2)?);
    let base = RationalFactor::new(Polynomial::one(), &zeta * &f)?;
    if !in_m {
        return Ok(base);
    }
    let eps = eps.ok_or_else(|| Error::Argument("a place dividing M needs its sign epsilon_p".into()))?;
    let corr = sk_correction(p, k, eps)?;
    RationalFactor::new(&base.numerator * &corr.numerator, &base.denominator * &corr.denominator)
}
