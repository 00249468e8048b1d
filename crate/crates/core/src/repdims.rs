//! Dimension polynomials of the finite-field representations that occur as
//! parahoric restrictions, and the index maps used to name them.
//!
//! The data lives in `data/catalogue.json`, a versioned file that stores every
//! polynomial in its printed form. It is parsed once on first use.
//!
//! Labels for even `q` use Enomoto's names for `Sp(4, F_q)`, labels for odd `q`
//! use Shinoda's names for `GSp(4, F_q)`. Parameters are character indices with
//! respect to fixed generators, so the trivial character is the index `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::symgroup::{MultiplicityVector, Sp4F2Irrep};

/// Version of the catalogue data layout understood by this crate.
pub const CATALOGUE_SCHEMA_VERSION: u32 = 1;

const CATALOGUE_JSON: &str = include_str!("../data/catalogue.json");

/// A polynomial in `q` whose values at integers `q >= 2` are meant to be integers.
///
/// Coefficients are rational because of the `/2` factors in the unipotent
/// dimensions; integrality is checked on evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial(Polynomial);

impl IntPolynomial {
    pub fn zero() -> Self {
        Self(Polynomial::zero())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Polynomial::parse(text, 'q').map(Self)
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self(p)
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scaled(&self, c: u64) -> Self {
        Self(self.0.scale(&BigRational::from_integer(c.into())))
    }

    /// Value at `q`; fails if it is not a non-negative integer.
    pub fn eval(&self, q: u64) -> Result<u64> {
        let v = self.0.eval(&BigRational::from_integer(q.into()));
        if !v.is_integer() || v.is_negative() {
            return Err(Error::Consistency(format!("{self} takes the value {v} at q = {q}")));
        }
        v.to_integer()
            .to_u64()
            .ok_or_else(|| Error::Consistency(format!("{self} overflows at q = {q}")))
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial(&self.0 * &rhs.0)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with("q"))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Even `q`, representations of `Sp(4, F_q)`.
    Enomoto,
    /// Odd `q`, representations of `GSp(4, F_q)`.
    Shinoda,
}

impl Convention {
    pub fn for_q(q: u64) -> Self {
        if q % 2 == 0 {
            Convention::Enomoto
        } else {
            Convention::Shinoda
        }
    }
}

/// A character index together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParamValue {
    pub value: u64,
    pub modulus: u64,
}

impl ParamValue {
    pub fn new(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        Self { value: value.rem_euclid(m) as u64, modulus }
    }
}

/// Name of an irreducible (or catalogued) finite-field representation with parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepLabel {
    pub convention: Convention,
    pub family: String,
    pub params: Vec<ParamValue>,
}

impl RepLabel {
    pub fn new(convention: Convention, family: &str, params: Vec<ParamValue>) -> Self {
        Self { convention, family: family.to_string(), params }
    }

    /// Enomoto label with indices all taken modulo `modulus`.
    pub fn enomoto(family: &str, params: &[u64], modulus: u64) -> Self {
        let params = params.iter().map(|&v| ParamValue::new(v as i128, modulus)).collect();
        Self::new(Convention::Enomoto, family, params)
    }

    /// Parses `chi1(0,0)` or `theta2` as an Enomoto label at `q = 2`.
    pub fn parse_q2(text: &str) -> Result<Self> {
        let text = text.trim();
        let (family, params) = match text.split_once('(') {
            Some((f, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced label {text:?}")))?;
                let values = inner
                    .split(',')
                    .map(|s| s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad label {text:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                (f, values)
            }
            None => (text, vec![]),
        };
        // At q = 2 every index group is Z/1 or Z/3; the value is kept as written.
        let params = params.into_iter().map(|v| ParamValue { value: v, modulus: 0 }).collect();
        Ok(Self::new(Convention::Enomoto, family, params))
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.value.to_string()).collect();
            write!(f, "({})", ps.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for RepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One constituent of a restriction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub label: RepLabel,
    pub multiplicity: u64,
}

/// Result of a parahoric restriction lookup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionOutcome {
    pub q: u64,
    pub convention: Convention,
    pub summands: Vec<Summand>,
    pub dim_poly: IntPolynomial,
    pub dim: u64,
    /// Symbolic name of the local representation, when the table records one.
    pub descriptor: Option<String>,
    /// False when the packet member itself does not exist.
    pub member_exists: bool,
}

impl RestrictionOutcome {
    pub fn zero(q: u64, member_exists: bool) -> Self {
        Self {
            q,
            convention: Convention::for_q(q),
            summands: vec![],
            dim_poly: IntPolynomial::zero(),
            dim: 0,
            descriptor: None,
            member_exists,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0 && self.summands.is_empty()
    }

    /// Sum of the catalogued dimension polynomials of the summands.
    pub fn summand_dim_poly(&self) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::zero();
        for s in &self.summands {
            acc = &acc + &dim_polynomial(&s.label)?.scaled(s.multiplicity);
        }
        Ok(acc)
    }

    /// Multiplicities over the eleven `Sp(4, F_2)` irreducibles; only for `q = 2`.
    pub fn multiplicities(&self) -> Result<MultiplicityVector> {
        if self.q != 2 {
            return Err(Error::Argument(format!("no Sp(4,F_2) decomposition at q = {}", self.q)));
        }
        let mut acc = MultiplicityVector::zero();
        for s in &self.summands {
            acc += decompose_at_q2(&s.label)?.scaled(s.multiplicity);
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// Catalogue

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "+1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" | "−" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        }
    }
}

/// Unordered pair shapes of the packet table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PacketCase {
    PsPs,
    StPs,
    CuspPs,
    XiStSt,
    StSt,
    CuspSt,
    CuspIso,
    CuspNoniso,
}

/// Rows of the endoscopic restriction table, without the sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndoCase {
    PsPs,
    PsSt,
    StSt,
    StXu,
    StXt,
    PsCusp,
    StCusp,
    CuspIso,
    CuspNoniso,
}

impl EndoCase {
    pub const ALL: [EndoCase; 9] = [
        EndoCase::PsPs,
        EndoCase::PsSt,
        EndoCase::StSt,
        EndoCase::StXu,
        EndoCase::StXt,
        EndoCase::PsCusp,
        EndoCase::StCusp,
        EndoCase::CuspIso,
        EndoCase::CuspNoniso,
    ];
}

/// The `sigma` column of the Saito-Kurokawa table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkSigma {
    Ps,
    St,
    Xu,
    Xt,
    Cusp,
}

/// The `sigma_S` column: trivial outside `S`, Steinberg on `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaS {
    One,
    St,
}

/// Parameter expressions allowed in label templates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamExpr {
    /// `k_i` modulo `q - 1`.
    K(usize),
    /// `-k_i` modulo `q - 1`.
    KNeg(usize),
    /// `k_a - k_b` modulo `q - 1`.
    KDiff(usize, usize),
    /// Canonical cuspidal parameter `l_i` modulo `q^2 - 1`.
    L(usize),
    /// `kappa^{-1}(l_i)` modulo `q + 1`.
    KappaInvL(usize),
    /// `kappa^*(l_i)` modulo `q + 1`.
    KappaStarL(usize),
    /// `k~_i` modulo `q + 1`.
    KTilde(usize),
    /// `kappa^{-1}(l_2 - l_1)` modulo `q + 1`.
    KappaInvLRatio,
    /// Index of the trivial character of `F_q^x`.
    Trivial,
}

#[derive(Debug, Clone, Deserialize)]
pub struct LabelTemplate {
    pub family: String,
    pub params: Vec<ParamExpr>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub convention: Convention,
    pub name: String,
    pub dim: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketRow {
    pub case: PacketCase,
    pub plus: String,
    pub minus: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndoRow {
    pub case: EndoCase,
    pub sign: Sign,
    /// `None` when the row does not occur for even `q`.
    pub even: Option<Vec<LabelTemplate>>,
    pub odd: Option<Vec<LabelTemplate>>,
    pub dim: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkRow {
    pub sigma: SkSigma,
    pub sigma_s: SigmaS,
    pub descriptor: String,
    pub even: Option<Vec<LabelTemplate>>,
    pub odd: Option<Vec<LabelTemplate>>,
    pub dim: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalogue {
    schema_version: u32,
    families: Vec<FamilyEntry>,
    packets: Vec<PacketRow>,
    endo_rows: Vec<EndoRow>,
    sk_rows: Vec<SkRow>,
    q2_decompositions: BTreeMap<String, BTreeMap<String, u64>>,
}

/// The parsed catalogue.
#[derive(Debug)]
pub struct Catalogue {
    pub schema_version: u32,
    pub families: Vec<FamilyEntry>,
    pub packets: Vec<PacketRow>,
    pub endo_rows: Vec<EndoRow>,
    pub sk_rows: Vec<SkRow>,
    family_dims: BTreeMap<(Convention, String), IntPolynomial>,
    endo_dims: BTreeMap<(EndoCase, Sign), IntPolynomial>,
    sk_dims: BTreeMap<(SkSigma, SigmaS), IntPolynomial>,
    q2: BTreeMap<String, MultiplicityVector>,
}

impl Catalogue {
    /// Parses catalogue JSON, checking the version and every polynomial.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawCatalogue = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.schema_version != CATALOGUE_SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "catalogue schema version {} is not {CATALOGUE_SCHEMA_VERSION}",
                raw.schema_version
            )));
        }
        let mut family_dims = BTreeMap::new();
        for f in &raw.families {
            family_dims.insert((f.convention, f.name.clone()), IntPolynomial::parse(&f.dim)?);
        }
        let mut endo_dims = BTreeMap::new();
        for r in &raw.endo_rows {
            if endo_dims.insert((r.case, r.sign), IntPolynomial::parse(&r.dim)?).is_some() {
                return Err(Error::Parse(format!("duplicate row {:?} {}", r.case, r.sign)));
            }
        }
        let mut sk_dims = BTreeMap::new();
        for r in &raw.sk_rows {
            if sk_dims.insert((r.sigma, r.sigma_s), IntPolynomial::parse(&r.dim)?).is_some() {
                return Err(Error::Parse(format!("duplicate row {:?} {:?}", r.sigma, r.sigma_s)));
            }
        }
        let mut q2 = BTreeMap::new();
        for (label, parts) in &raw.q2_decompositions {
            let mut v = MultiplicityVector::zero();
            for (irrep, m) in parts {
                let r = Sp4F2Irrep::from_label(irrep)
                    .ok_or_else(|| Error::Parse(format!("unknown Sp(4,F_2) label {irrep:?}")))?;
                v += MultiplicityVector::from_pairs(&[(r, *m)]);
            }
            q2.insert(label.clone(), v);
        }
        Ok(Self {
            schema_version: raw.schema_version,
            families: raw.families,
            packets: raw.packets,
            endo_rows: raw.endo_rows,
            sk_rows: raw.sk_rows,
            family_dims,
            endo_dims,
            sk_dims,
            q2,
        })
    }

    pub fn endo_row(&self, case: EndoCase, sign: Sign) -> Option<&EndoRow> {
        self.endo_rows.iter().find(|r| r.case == case && r.sign == sign)
    }

    pub fn sk_row(&self, sigma: SkSigma, sigma_s: SigmaS) -> Option<&SkRow> {
        self.sk_rows.iter().find(|r| r.sigma == sigma && r.sigma_s == sigma_s)
    }

    pub fn packet_row(&self, case: PacketCase) -> &PacketRow {
        self.packets.iter().find(|r| r.case == case).expect("every packet case is catalogued")
    }

    /// Labels with a recorded decomposition at `q = 2`.
    pub fn q2_labels(&self) -> impl Iterator<Item = &str> {
        self.q2.keys().map(String::as_str)
    }
}

/// The shipped catalogue.
pub fn catalogue() -> &'static Catalogue {
    static CAT: OnceLock<Catalogue> = OnceLock::new();
    CAT.get_or_init(|| Catalogue::from_json(CATALOGUE_JSON).expect("shipped catalogue is valid"))
}

/// A row of either restriction table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RowRef {
    Endo(EndoCase, Sign),
    Sk(SkSigma, SigmaS),
}

/// Dimension polynomial of a catalogued family.
pub fn dim_polynomial(label: &RepLabel) -> Result<IntPolynomial> {
    catalogue()
        .family_dims
        .get(&(label.convention, label.family.clone()))
        .cloned()
        .ok_or_else(|| Error::Catalogue(format!("{:?} family {}", label.convention, label.family)))
}

/// Printed total dimension of a table row, including composite and zero rows.
pub fn row_dim_polynomial(row: RowRef) -> Result<IntPolynomial> {
    let cat = catalogue();
    match row {
        RowRef::Endo(case, sign) => cat.endo_dims.get(&(case, sign)).cloned(),
        RowRef::Sk(sigma, s) => cat.sk_dims.get(&(sigma, s)).cloned(),
    }
    .ok_or_else(|| Error::Catalogue(format!("no row {row:?}")))
}

pub fn evaluate_dim(label: &RepLabel, q: u64) -> Result<u64> {
    check_q_at_least_two(q)?;
    dim_polynomial(label)?.eval(q)
}

pub fn evaluate_row_dim(row: RowRef, q: u64) -> Result<u64> {
    check_q_at_least_two(q)?;
    row_dim_polynomial(row)?.eval(q)
}

fn check_q_at_least_two(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::OutOfRange { what: "q", value: q as i64, min: 2, max: i64::MAX });
    }
    Ok(())
}

/// Decomposition of an even-`q` label at `q = 2` into `Sp(4, F_2)` irreducibles.
pub fn decompose_at_q2(label: &RepLabel) -> Result<MultiplicityVector> {
    if label.convention != Convention::Enomoto {
        return Err(Error::Catalogue(format!("{label} is not an even-q label")));
    }
    let name = label.to_string();
    if let Some(r) = Sp4F2Irrep::from_label(&name) {
        return Ok(MultiplicityVector::unit(r));
    }
    catalogue()
        .q2
        .get(&name)
        .copied()
        .ok_or_else(|| Error::Catalogue(format!("no q = 2 decomposition recorded for {name}")))
}

// ---------------------------------------------------------------------------
// Index maps

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

pub fn check_prime_power(q: u64) -> Result<()> {
    if is_prime_power(q) {
        Ok(())
    } else {
        Err(Error::Argument(format!("q = {q} is not a prime power")))
    }
}

/// `kappa: Z/(q+1) -> Z/(q^2-1)`, `x -> (q-1) x`.
pub fn kappa(x: u64, q: u64) -> u64 {
    let big = q * q - 1;
    ((q - 1) * (x % (q + 1))) % big
}

/// Inverse of `kappa` on its image, the multiples of `q - 1`.
pub fn kappa_inv(l: u64, q: u64) -> Result<u64> {
    let big = q * q - 1;
    let l = l % big;
    if l % (q - 1) != 0 {
        return Err(Error::NotInImage { value: l, small: q + 1, big });
    }
    Ok((l / (q - 1)) % (q + 1))
}

/// `kappa^*: Z/(q^2-1) -> Z/(q+1)`, reduction.
pub fn kappa_star(l: u64, q: u64) -> u64 {
    l % (q + 1)
}

/// Canonical representative of a cuspidal parameter under `l ~ q l`.
///
/// Fails for multiples of `q + 1`, which do not give cuspidal representations.
pub fn canonical_cuspidal(l: u64, q: u64) -> Result<u64> {
    let big = q * q - 1;
    let l = l % big;
    if l % (q + 1) == 0 {
        return Err(Error::Argument(format!(
            "l = {l} is divisible by q+1 = {}; Lambda = Lambda^q is not cuspidal",
            q + 1
        )));
    }
    Ok(l.min((q * l) % big))
}

/// The index maps for a pair of cuspidal parameters at even `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndoRowParameters {
    pub kappa_inv_l1: Option<u64>,
    pub kappa_inv_l2: Option<u64>,
    pub kappa_star_sum: u64,
    pub kappa_star_diff: u64,
    pub k_tilde1: u64,
    pub k_tilde2: u64,
}

pub fn endo_row_parameters(l1: u64, l2: u64, q: u64) -> Result<EndoRowParameters> {
    check_prime_power(q)?;
    if q % 2 != 0 {
        return Err(Error::Argument(format!("index maps k~ need even q, got {q}")));
    }
    let big = q * q - 1;
    let (l1, l2) = (l1 % big, l2 % big);
    let sum = kappa_star((l1 + l2) % big, q);
    let diff = kappa_star((l1 + big - l2) % big, q);
    let half = (q + 2) / 2;
    Ok(EndoRowParameters {
        kappa_inv_l1: kappa_inv(l1, q).ok(),
        kappa_inv_l2: kappa_inv(l2, q).ok(),
        kappa_star_sum: sum,
        kappa_star_diff: diff,
        k_tilde1: (half * sum) % (q + 1),
        k_tilde2: (half * diff) % (q + 1),
    })
}

/// Values that parameter templates are evaluated against.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParamContext {
    pub q: u64,
    pub k: [Option<u64>; 4],
    pub l: [Option<u64>; 2],
}

impl ParamContext {
    fn k(&self, i: usize) -> Result<u64> {
        self.k
            .get(i.wrapping_sub(1))
            .copied()
            .flatten()
            .ok_or_else(|| Error::Consistency(format!("template refers to unset k{i}")))
    }

    fn l(&self, i: usize) -> Result<u64> {
        self.l
            .get(i.wrapping_sub(1))
            .copied()
            .flatten()
            .ok_or_else(|| Error::Consistency(format!("template refers to unset l{i}")))
    }

    pub fn eval(&self, expr: ParamExpr) -> Result<ParamValue> {
        let q = self.q;
        let small = q - 1;
        let big = q * q - 1;
        Ok(match expr {
            ParamExpr::K(i) => ParamValue::new(self.k(i)? as i128, small),
            ParamExpr::KNeg(i) => ParamValue::new(-(self.k(i)? as i128), small),
            ParamExpr::KDiff(a, b) => ParamValue::new(self.k(a)? as i128 - self.k(b)? as i128, small),
            ParamExpr::L(i) => ParamValue::new(self.l(i)? as i128, big),
            ParamExpr::KappaInvL(i) => ParamValue::new(kappa_inv(self.l(i)?, q)? as i128, q + 1),
            ParamExpr::KappaStarL(i) => ParamValue::new(kappa_star(self.l(i)?, q) as i128, q + 1),
            ParamExpr::KTilde(i) => {
                let p = endo_row_parameters(self.l(1)?, self.l(2)?, q)?;
                let v = if i == 1 { p.k_tilde1 } else { p.k_tilde2 };
                ParamValue::new(v as i128, q + 1)
            }
            ParamExpr::KappaInvLRatio => {
                let d = (self.l(2)? + big - self.l(1)?) % big;
                ParamValue::new(kappa_inv(d, q)? as i128, q + 1)
            }
            ParamExpr::Trivial => ParamValue::new(0, small),
        })
    }

    /// Instantiates templates, merging equal labels.
    pub fn instantiate(&self, convention: Convention, templates: &[LabelTemplate]) -> Result<Vec<Summand>> {
        let mut out: Vec<Summand> = Vec::new();
        for t in templates {
            let params = t.params.iter().map(|&e| self.eval(e)).collect::<Result<Vec<_>>>()?;
            let label = RepLabel::new(convention, &t.family, params);
            match out.iter_mut().find(|s| s.label == label) {
                Some(s) => s.multiplicity += 1,
                None => out.push(Summand { label, multiplicity: 1 }),
            }
        }
        Ok(out)
    }
}

/// `(q^2 + 1) d1 d2` with `d = q` for Steinberg, `q - 1` for depth-zero cuspidal
/// and `q + 1` for principal series inputs.
pub fn difference_law_rhs(case: EndoCase) -> IntPolynomial {
    let q = IntPolynomial::parse("q").expect("valid");
    let qm = IntPolynomial::parse("q-1").expect("valid");
    let qp = IntPolynomial::parse("q+1").expect("valid");
    let (d1, d2) = match case {
        EndoCase::PsPs => (&qp, &qp),
        EndoCase::PsSt => (&qp, &q),
        EndoCase::StSt | EndoCase::StXu | EndoCase::StXt => (&q, &q),
        EndoCase::PsCusp => (&qp, &qm),
        EndoCase::StCusp => (&q, &qm),
        EndoCase::CuspIso | EndoCase::CuspNoniso => (&qm, &qm),
    };
    let base = IntPolynomial::parse("q^2+1").expect("valid");
    &(&base * d1) * d2
}

/// Dimension of `Pi_+` minus `Pi_-` as printed, treating absent rows as zero.
pub fn paired_row_difference(case: EndoCase) -> Result<IntPolynomial> {
    let plus = row_dim_polynomial(RowRef::Endo(case, Sign::Plus))?;
    let minus = row_dim_polynomial(RowRef::Endo(case, Sign::Minus)).unwrap_or_default();
    Ok(&plus - &minus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_loads_and_is_versioned() {
        let cat = catalogue();
        assert_eq!(cat.schema_version, CATALOGUE_SCHEMA_VERSION);
        assert_eq!(cat.endo_rows.len(), 15);
        assert_eq!(cat.sk_rows.len(), 9);
        assert_eq!(cat.packets.len(), 8);
    }

    #[test]
    fn rejects_wrong_version() {
        let text = CATALOGUE_JSON.replacen("\"schema_version\": 1", "\"schema_version\": 7", 1);
        assert!(matches!(Catalogue::from_json(&text), Err(Error::Parse(_))));
    }

    #[test]
    fn printed_row_values() {
        let row = RowRef::Endo(EndoCase::PsPs, Sign::Plus);
        assert_eq!(evaluate_row_dim(row, 2).unwrap(), 45);
        assert_eq!(evaluate_row_dim(RowRef::Endo(EndoCase::StSt, Sign::Minus), 3).unwrap(), 15);
        assert!(row_dim_polynomial(RowRef::Endo(EndoCase::StXt, Sign::Minus)).unwrap().is_zero());
        assert_eq!(evaluate_row_dim(RowRef::Endo(EndoCase::CuspIso, Sign::Plus), 2).unwrap(), 10);
        assert_eq!(evaluate_row_dim(RowRef::Endo(EndoCase::CuspNoniso, Sign::Plus), 2).unwrap(), 5);
        assert_eq!(evaluate_row_dim(RowRef::Sk(SkSigma::St, SigmaS::St), 2).unwrap(), 5);
    }

    #[test]
    fn unknown_labels_are_catalogue_errors() {
        let bogus = RepLabel::enomoto("chi99", &[], 1);
        assert!(matches!(dim_polynomial(&bogus), Err(Error::Catalogue(_))));
        assert!(matches!(decompose_at_q2(&RepLabel::enomoto("chi1", &[1, 0], 3)), Err(Error::Catalogue(_))));
    }

    #[test]
    fn q2_decompositions() {
        let v = decompose_at_q2(&RepLabel::parse_q2("chi1(0,0)").unwrap()).unwrap();
        assert_eq!(v.total_dimension(), 45);
        assert_eq!(v.get(Sp4F2Irrep::Theta1), 2);
        let v = decompose_at_q2(&RepLabel::parse_q2("chi2(1)").unwrap()).unwrap();
        assert_eq!(v.total_dimension(), 15);
        let v = decompose_at_q2(&RepLabel::parse_q2("chi12(1)").unwrap()).unwrap();
        assert_eq!(v, MultiplicityVector::unit(Sp4F2Irrep::Chi12));
    }

    #[test]
    fn index_maps() {
        assert_eq!(kappa(1, 2), 1);
        assert_eq!(kappa_inv(1, 2).unwrap(), 1);
        assert_eq!(kappa_star(5, 4), 0);
        assert_eq!(kappa(2, 4), 6);
        assert_eq!(kappa_inv(6, 4).unwrap(), 2);
        assert!(matches!(kappa_inv(5, 4), Err(Error::NotInImage { value: 5, small: 5, big: 15 })));
        let p = endo_row_parameters(1, 2, 2).unwrap();
        assert_eq!((p.k_tilde1, p.k_tilde2), (0, 1));
        assert!(endo_row_parameters(1, 2, 3).is_err());
    }

    #[test]
    fn cuspidal_canonical_form() {
        assert_eq!(canonical_cuspidal(1, 2).unwrap(), 1);
        assert_eq!(canonical_cuspidal(2, 2).unwrap(), 1);
        assert!(canonical_cuspidal(3, 2).is_err());
        assert_eq!(canonical_cuspidal(7, 3).unwrap(), 5);
        assert!(canonical_cuspidal(4, 3).is_err());
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..30).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }
}
