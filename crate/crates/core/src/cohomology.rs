//! Endoscopic and Saito-Kurokawa parts of the inner cohomology of Siegel
//! threefolds, as representations of `Sp(4, F_2) = S_6` at level 2 and as
//! dimension breakdowns at other prime levels.
//!
//! The level-2 formulas only need the newform counts of [`crate::modforms`]
//! and the local types they imply at 2:
//!
//! | newforms counted by | local type at 2 |
//! |---|---|
//! | `tau1` (level 1) | unramified principal series |
//! | `tauMinus` | Steinberg |
//! | `tauPlus` | `xi_u`-twisted Steinberg |
//! | `tau4` | depth-zero cuspidal |

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modforms::{dim_cusp, newform_counts, NewformCounts};
use crate::packets::{restrict_endo, GL2LocalType};
use crate::repdims::{decompose_at_q2, RepLabel, Sign};
use crate::symgroup::MultiplicityVector;

/// Highest weight `(lambda1, lambda2)` of the coefficient system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub lambda1: u64,
    pub lambda2: u64,
}

impl Weight {
    pub fn new(lambda1: u64, lambda2: u64) -> Result<Self> {
        if lambda1 < lambda2 {
            return Err(Error::Argument(format!("weight needs lambda1 >= lambda2, got ({lambda1}, {lambda2})")));
        }
        Ok(Self { lambda1, lambda2 })
    }

    /// Parallel weight `lambda1 = lambda2 = lambda`.
    pub fn parallel(lambda: u64) -> Self {
        Self { lambda1: lambda, lambda2: lambda }
    }

    pub fn r1(&self) -> u64 {
        self.lambda1 + self.lambda2 + 4
    }

    pub fn r2(&self) -> u64 {
        self.lambda1 - self.lambda2 + 2
    }

    /// Classical Siegel weight `(k1, k2)`.
    pub fn k1(&self) -> u64 {
        self.lambda1 + 3
    }

    pub fn k2(&self) -> u64 {
        self.lambda2 + 3
    }

    /// `lambda1 + lambda2` even; otherwise `-1` in `Gamma(2)` acts by `-1` on the
    /// coefficients and all level-2 cohomology vanishes.
    pub fn has_even_parity(&self) -> bool {
        (self.lambda1 + self.lambda2) % 2 == 0
    }

    pub fn is_parallel(&self) -> bool {
        self.lambda1 == self.lambda2
    }

    /// `k = lambda1 + 3` for parallel weight.
    pub fn k(&self) -> Result<u64> {
        self.require_parallel()?;
        Ok(self.lambda1 + 3)
    }

    /// `r = 2k - 2`, the elliptic weight underlying a Saito-Kurokawa lift.
    pub fn r(&self) -> Result<u64> {
        Ok(2 * self.k()? - 2)
    }

    fn require_parallel(&self) -> Result<()> {
        if !self.is_parallel() {
            return Err(Error::Hypothesis(format!(
                "Saito-Kurokawa formulas need lambda1 = lambda2, got ({}, {})",
                self.lambda1, self.lambda2
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda1, self.lambda2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HodgeType {
    H30,
    H21,
    H12,
    H03,
    H11,
    H22,
}

impl HodgeType {
    pub fn name(self) -> &'static str {
        match self {
            HodgeType::H30 => "H30",
            HodgeType::H21 => "H21",
            HodgeType::H12 => "H12",
            HodgeType::H03 => "H03",
            HodgeType::H11 => "H11",
            HodgeType::H22 => "H22",
        }
    }

    /// The complex-conjugate Hodge type.
    pub fn conjugate(self) -> Self {
        match self {
            HodgeType::H30 => HodgeType::H03,
            HodgeType::H03 => HodgeType::H30,
            HodgeType::H21 => HodgeType::H12,
            HodgeType::H12 => HodgeType::H21,
            HodgeType::H11 => HodgeType::H22,
            HodgeType::H22 => HodgeType::H11,
        }
    }
}

impl fmt::Display for HodgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = match self {
            HodgeType::H30 => (3, 0),
            HodgeType::H21 => (2, 1),
            HodgeType::H12 => (1, 2),
            HodgeType::H03 => (0, 3),
            HodgeType::H11 => (1, 1),
            HodgeType::H22 => (2, 2),
        };
        write!(f, "({a},{b})")
    }
}

/// A coefficient times a catalogued `q = 2` label, before expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: u64,
    pub label: String,
}

/// One Hodge piece as an `S_6`-representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyPiece {
    #[serde(rename = "hodgeType")]
    pub hodge_type: HodgeType,
    pub mult: MultiplicityVector,
    #[serde(rename = "totalDim")]
    pub total_dim: u64,
    /// The unexpanded terms, zero coefficients dropped.
    pub terms: Vec<Term>,
}

impl CohomologyPiece {
    fn from_terms(hodge_type: HodgeType, raw: &[(u64, &str)]) -> Result<Self> {
        let mut mult = MultiplicityVector::zero();
        let mut terms = Vec::new();
        for &(c, label) in raw {
            if c == 0 {
                continue;
            }
            mult += decompose_at_q2(&RepLabel::parse_q2(label)?)?.scaled(c);
            terms.push(Term { coefficient: c, label: label.to_string() });
        }
        Ok(Self { hodge_type, total_dim: mult.total_dimension(), mult, terms })
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_zero()
    }

    /// The piece of conjugate Hodge type, which is isomorphic.
    pub fn conjugate(&self) -> Self {
        Self { hodge_type: self.hodge_type.conjugate(), ..self.clone() }
    }
}

/// Endoscopic `H30` and `H21` from arbitrary count tables at weights `r1`, `r2`.
///
/// Bilinear in the two inputs.
pub fn endo_level2_from_counts(c1: &NewformCounts, c2: &NewformCounts) -> Result<(CohomologyPiece, CohomologyPiece)> {
    let (p1, m1, s1, n1) = (c1.tau_plus, c1.tau_minus, c1.tau1, c1.tau4);
    let (p2, m2, s2, n2) = (c2.tau_plus, c2.tau_minus, c2.tau1, c2.tau4);
    let (t1, t2) = (c1.tau2, c2.tau2);
    let same = p1 * p2 + m1 * m2;
    let mixed = p1 * m2 + m1 * p2;
    let h30 = CohomologyPiece::from_terms(HodgeType::H30, &[(mixed, "theta5"), (same, "theta2"), (n1 * n2, "chi9(1)")])?;
    let h21 = CohomologyPiece::from_terms(
        HodgeType::H21,
        &[
            (n1 * n2, "chi13(1)"),
            (n1 * t2 + t1 * n2, "chi12(1)"),
            (same, "theta1"),
            (same, "theta4"),
            (mixed, "theta3"),
            (mixed, "theta4"),
            (s1 * n2 + n1 * s2, "chi2(1)"),
            (s1 * t2 + t1 * s2, "chi10(0)"),
            (s1 * s2, "chi1(0,0)"),
        ],
    )?;
    Ok((h30, h21))
}

fn counts(r: u64) -> Result<NewformCounts> {
    newform_counts(r)
}

/// Endoscopic `H30` and `H21` at level 2.
///
/// Odd `lambda1 + lambda2` gives zero pieces.
pub fn endo_level2(w: Weight) -> Result<(CohomologyPiece, CohomologyPiece)> {
    if !w.has_even_parity() {
        let zero = NewformCounts::zero(0);
        return endo_level2_from_counts(&zero, &zero);
    }
    endo_level2_from_counts(&counts(w.r1())?, &counts(w.r2())?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(lhs: i64, rhs: i64) -> Self {
        Self { lhs, rhs, holds: lhs == rhs }
    }
}

/// Odd weights carry no forms on `Gamma0(4)`, which contains `-1`.
fn dim_s4(r: u64) -> Result<u64> {
    if r % 2 == 1 {
        return Ok(0);
    }
    dim_cusp(4, r as i64)
}

/// `dim H21 - dim H30` against `5 dim S_{r1}(Gamma0(4)) dim S_{r2}(Gamma0(4))`.
///
/// The right side uses only the closed dimension formula.
pub fn endo_identity(w: Weight) -> Result<IdentityCheck> {
    let (h30, h21) = endo_level2(w)?;
    let lhs = h21.total_dim as i64 - h30.total_dim as i64;
    let rhs = 5 * dim_s4(w.r1())? as i64 * dim_s4(w.r2())? as i64;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Number of automorphic pairs with the given local types at the level prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub first: GL2LocalType,
    pub second: GL2LocalType,
    pub count: i64,
}

/// Labels with multiplicities and the total dimension of one Hodge piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionBreakdown {
    pub dim: u64,
    /// Label text to total multiplicity, sorted by label.
    pub labels: BTreeMap<String, u64>,
    /// Present at `q = 2` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<MultiplicityVector>,
}

impl DimensionBreakdown {
    fn new(q: u64) -> Self {
        Self { dim: 0, labels: BTreeMap::new(), mult: (q == 2).then(MultiplicityVector::zero) }
    }
}

/// Endoscopic `H30` (packet sign minus) and `H21` (sign plus) at prime-power
/// level `q`, summed over caller-supplied pair counts.
///
/// Pairs whose local types carry no invariants contribute zero.
pub fn endo_prime(q: u64, pairs: &[PairCount]) -> Result<(DimensionBreakdown, DimensionBreakdown)> {
    if let Some(bad) = pairs.iter().find(|p| p.count < 0) {
        return Err(Error::Argument(format!("negative count {} for ({}, {})", bad.count, bad.first, bad.second)));
    }
    let mut h30 = DimensionBreakdown::new(q);
    let mut h21 = DimensionBreakdown::new(q);
    for pc in pairs.iter().filter(|p| p.count > 0) {
        let n = pc.count as u64;
        for (sign, acc) in [(Sign::Minus, &mut h30), (Sign::Plus, &mut h21)] {
            let out = restrict_endo(&pc.first, &pc.second, sign, q)?;
            acc.dim += n * out.dim;
            for s in &out.summands {
                *acc.labels.entry(s.label.to_string()).or_default() += n * s.multiplicity;
            }
            if let Some(m) = acc.mult.as_mut() {
                *m += out.multiplicities()?.scaled(n);
            }
        }
    }
    Ok((h30, h21))
}

/// The local types at 2 of the newforms counted in `c`, with their counts.
pub fn level2_local_types(c: &NewformCounts) -> Vec<(GL2LocalType, u64)> {
    vec![
        (GL2LocalType::spherical(), c.tau1),
        (GL2LocalType::steinberg(), c.tau_minus),
        (GL2LocalType::xi_u_steinberg(), c.tau_plus),
        (GL2LocalType::depth_zero(1), c.tau4),
    ]
}

/// Pair counts at 2 for weight `w`, derived from the newform engine.
pub fn level2_pair_counts(w: Weight) -> Result<Vec<PairCount>> {
    if !w.has_even_parity() {
        return Ok(vec![]);
    }
    let (c1, c2) = (counts(w.r1())?, counts(w.r2())?);
    let mut out = Vec::new();
    for (a, n) in level2_local_types(&c1) {
        for (b, m) in level2_local_types(&c2) {
            if n * m > 0 {
                out.push(PairCount { first: a.clone(), second: b, count: (n * m) as i64 });
            }
        }
    }
    Ok(out)
}

/// Saito-Kurokawa `H30` and `H11` from a count table, for `k` of the given parity.
pub fn sk_level2_from_counts(k_even: bool, c: &NewformCounts) -> Result<(CohomologyPiece, CohomologyPiece)> {
    let first = [(c.tau_plus, "theta1"), (c.tau_minus, "theta2"), (c.tau1, "chi6(0)")];
    let second = [(c.tau4, "chi8(1)"), (c.tau_plus, "theta5"), (c.tau_minus, "theta3")];
    let (a, b) = if k_even { (first, second) } else { (second, first) };
    Ok((CohomologyPiece::from_terms(HodgeType::H30, &a)?, CohomologyPiece::from_terms(HodgeType::H11, &b)?))
}

/// Saito-Kurokawa `H30` and `H11` at level 2; needs parallel weight.
pub fn sk_level2(w: Weight) -> Result<(CohomologyPiece, CohomologyPiece)> {
    let k = w.k()?;
    sk_level2_from_counts(k.is_even(), &counts(w.r()?)?)
}

/// `dim H11 + dim H30` against `5 dim S_r(Gamma0(4))`.
pub fn sk_identity(w: Weight) -> Result<IdentityCheck> {
    let (h30, h11) = sk_level2(w)?;
    let rhs = 5 * dim_cusp(4, w.r()? as i64)? as i64;
    Ok(IdentityCheck::new((h11.total_dim + h30.total_dim) as i64, rhs))
}

/// Level and weight data of a Yoshida-type lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YoshidaLevel {
    pub level: u64,
    /// Exponent `j` of `Sym^j`, when weights were supplied.
    #[serde(rename = "symPower", skip_serializing_if = "Option::is_none")]
    pub sym_power: Option<u64>,
    /// Exponent of `det`, when weights were supplied.
    #[serde(rename = "detPower", skip_serializing_if = "Option::is_none")]
    pub det_power: Option<u64>,
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        if m % p == 0 {
            m /= p;
        }
        p += 1;
    }
    true
}

/// `lcm(N1, N2)` for squarefree levels sharing a prime, with the lift's
/// `Sym^{r2-2} (x) det^{(r1-r2)/2+2}` type when `(r1, r2)` is given.
pub fn yoshida_level(n1: u64, n2: u64, weights: Option<(u64, u64)>) -> Result<YoshidaLevel> {
    for n in [n1, n2] {
        if !is_squarefree(n) {
            return Err(Error::Argument(format!("level {n} is not a squarefree positive integer")));
        }
    }
    if n1.gcd(&n2) == 1 {
        return Err(Error::Hypothesis(format!("levels {n1} and {n2} are coprime; the lift needs a common prime")));
    }
    let (sym_power, det_power) = match weights {
        None => (None, None),
        Some((r1, r2)) => {
            if r1 % 2 != 0 || r2 % 2 != 0 || r2 < 2 || r1 <= r2 {
                return Err(Error::Argument(format!("weights need r1 > r2 >= 2, both even; got ({r1}, {r2})")));
            }
            (Some(r2 - 2), Some((r1 - r2) / 2 + 2))
        }
    };
    Ok(YoshidaLevel { level: n1.lcm(&n2), sym_power, det_power })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VanishingFlags {
    /// Whole Eisenstein-type inner part vanishes: `lambda1 > lambda2 > 0`.
    #[serde(rename = "innerEVanishes")]
    pub inner_e_vanishes: bool,
    /// Endoscopic `H^3` vanishes at level 2: `lambda1 = lambda2`, since `r2 = 2`.
    #[serde(rename = "endoH3VanishesAtLevel2")]
    pub endo_h3_vanishes_at_level2: bool,
}

pub fn vanishing_flags(w: Weight) -> VanishingFlags {
    VanishingFlags {
        inner_e_vanishes: w.lambda1 > w.lambda2 && w.lambda2 > 0,
        endo_h3_vanishes_at_level2: w.lambda1 == w.lambda2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Sp4F2Irrep as S;

    #[test]
    fn weight_bookkeeping() {
        let w = Weight::new(7, 1).unwrap();
        assert_eq!((w.r1(), w.r2(), w.k1(), w.k2()), (12, 8, 10, 4));
        assert!(Weight::new(1, 7).is_err());
        let p = Weight::parallel(5);
        assert_eq!((p.k().unwrap(), p.r().unwrap()), (8, 14));
        assert!(w.k().is_err());
    }

    #[test]
    fn endoscopic_example() {
        let (h30, h21) = endo_level2(Weight::new(7, 1).unwrap()).unwrap();
        assert!(h30.is_zero());
        let expected = MultiplicityVector::from_pairs(&[(S::Chi12, 1), (S::Theta1, 1), (S::Theta3, 1), (S::Theta4, 1)]);
        assert_eq!(h21.mult, expected);
        assert_eq!(h21.total_dim, 40);
        let id = endo_identity(Weight::new(7, 1).unwrap()).unwrap();
        assert_eq!(id, IdentityCheck { lhs: 40, rhs: 40, holds: true });
        assert_eq!(h21.conjugate().hodge_type, HodgeType::H12);
    }

    #[test]
    fn saito_kurokawa_example() {
        let (h30, h11) = sk_level2(Weight::parallel(5)).unwrap();
        assert_eq!(h30.mult, MultiplicityVector::from_pairs(&[(S::Theta1, 1), (S::Theta2, 1)]));
        assert_eq!(h30.total_dim, 14);
        assert_eq!(h11.mult, MultiplicityVector::from_pairs(&[(S::Chi8, 1), (S::Theta5, 1), (S::Theta3, 1)]));
        assert_eq!(h11.total_dim, 11);
        assert_eq!(sk_identity(Weight::parallel(5)).unwrap(), IdentityCheck { lhs: 25, rhs: 25, holds: true });
        let (a, b) = sk_level2(Weight::parallel(0)).unwrap();
        assert!(a.is_zero() && b.is_zero());
        assert!(sk_level2(Weight::new(3, 1).unwrap()).is_err());
    }

    #[test]
    fn yoshida() {
        assert_eq!(yoshida_level(6, 10, None).unwrap().level, 30);
        assert!(matches!(yoshida_level(3, 5, None), Err(Error::Hypothesis(_))));
        assert_eq!(yoshida_level(2, 2, None).unwrap().level, 2);
        assert!(matches!(yoshida_level(4, 2, None), Err(Error::Argument(_))));
        let y = yoshida_level(6, 10, Some((12, 8))).unwrap();
        assert_eq!((y.sym_power, y.det_power), (Some(6), Some(4)));
    }

    #[test]
    fn flags() {
        assert!(vanishing_flags(Weight::new(7, 1).unwrap()).inner_e_vanishes);
        assert!(vanishing_flags(Weight::parallel(5)).endo_h3_vanishes_at_level2);
        assert!(!vanishing_flags(Weight::new(3, 0).unwrap()).inner_e_vanishes);
    }

    #[test]
    fn prime_level_rows() {
        assert_eq!(endo_prime(3, &[]).unwrap().0.dim, 0);
        let st = PairCount { first: GL2LocalType::steinberg(), second: GL2LocalType::steinberg(), count: 1 };
        let (h30, _) = endo_prime(3, &[st.clone()]).unwrap();
        assert_eq!(h30.dim, 15);
        assert_eq!(h30.labels.keys().collect::<Vec<_>>(), vec!["theta3(0)"]);
        assert!(h30.mult.is_none());
        let neg = PairCount { count: -1, ..st };
        assert!(matches!(endo_prime(3, &[neg]), Err(Error::Argument(_))));
    }
}
