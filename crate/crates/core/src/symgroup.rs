//! Partitions and the ordinary character theory of the symmetric group.
//!
//! Irreducible characters of `S_n` are indexed by partitions of `n`; the same
//! partitions index conjugacy classes through cycle type. Character values are
//! computed by the Murnaghan–Nakayama rule on beta-sets, dimensions by the hook
//! length formula. The second half of the module fixes the dictionary between
//! the eleven irreducible representations of `Sp(4, F_2) ≅ S_6` in Enomoto's
//! notation and partitions of six.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`partitions_of`].
pub const MAX_N: u32 = 20;

/// An integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Argument(format!("partition {parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// The one-row partition `[n]`.
    pub fn row(n: u32) -> Self {
        Self { parts: if n == 0 { vec![] } else { vec![n] } }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: u32) -> Self {
        Self { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Self { parts }
    }

    /// Hook lengths of all boxes, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.parts[j] - 1 - i as u32;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Order of the centralizer of a permutation with this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            z *= (part as u128).pow(mult) * factorial(mult) as u128;
        }
        z
    }

    /// Exponent notation as used in printed tables, e.g. `[4,1^2]`.
    pub fn exponent_notation(&self) -> String {
        let mut groups: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let start = i;
            while i < self.parts.len() && self.parts[i] == part {
                i += 1;
            }
            let mult = i - start;
            groups.push(if mult == 1 { part.to_string() } else { format!("{part}^{mult}") });
        }
        format!("[{}]", groups.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Accepts `[4,1,1]`, `4,1,1` and exponent notation `[4,1^2]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        if body.trim().is_empty() {
            return Partition::new(parts);
        }
        for item in body.split(',') {
            let item = item.trim();
            let (base, mult) = match item.split_once('^') {
                Some((b, m)) => (b, m),
                None => (item, "1"),
            };
            let bad = |_| Error::Parse(format!("bad partition {s:?}"));
            let base: u32 = base.trim().parse().map_err(bad)?;
            let mult: usize = mult.trim().parse().map_err(bad)?;
            parts.extend(std::iter::repeat_n(base, mult));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// All partitions of `n` in reverse lexicographic order, `[n]` first.
pub fn partitions_of(n: u32) -> Result<Vec<Partition>> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n as i64, min: 1, max: MAX_N as i64 });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Dimension of the irreducible representation indexed by `lambda`:
/// `n!` over the product of hook lengths.
pub fn irrep_dimension(lambda: &Partition) -> u64 {
    let n = lambda.n();
    // Interleave multiplication and division to stay inside u128 for n <= 20.
    let num = factorial(n) as u128;
    let den: u128 = lambda.hook_lengths().iter().map(|&h| h as u128).product();
    (num / den) as u64
}

thread_local! {
    static CHARACTER_MEMO: RefCell<HashMap<(Vec<u32>, Vec<u32>), i64>> = RefCell::new(HashMap::new());
}

/// Value of the irreducible character `chi_lambda` on the class of cycle type `mu`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::Argument(format!(
            "character {lambda} of S_{} evaluated on class {mu} of S_{}",
            lambda.n(),
            mu.n()
        )));
    }
    Ok(murnaghan_nakayama(&lambda.parts, &mu.parts))
}

fn murnaghan_nakayama(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = CHARACTER_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    // Beta-set of lambda: lambda_i + (len - 1 - i), strictly decreasing.
    let len = lambda.len() as u32;
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i as u32).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&g| g > target && g < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let k = next.len() as u32;
        let mut shape: Vec<u32> = next.iter().enumerate().map(|(i, &g)| g - (k - 1 - i as u32)).collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        total += sign * murnaghan_nakayama(&shape, rest);
    }
    CHARACTER_MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// Integer-valued class function on `S_n`, indexed by [`partitions_of`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(n: u32, values: Vec<i64>) -> Result<Self> {
        let classes = partitions_of(n)?.len();
        if values.len() != classes {
            return Err(Error::Argument(format!(
                "class function on S_{n} needs {classes} values, got {}",
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    pub fn zero(n: u32) -> Result<Self> {
        let classes = partitions_of(n)?.len();
        Ok(Self { n, values: vec![0; classes] })
    }

    pub fn character(lambda: &Partition) -> Result<Self> {
        let n = lambda.n();
        let values = partitions_of(n)?
            .iter()
            .map(|mu| character_value(lambda, mu))
            .collect::<Result<_>>()?;
        Ok(Self { n, values })
    }

    /// Character of the regular representation: `n!` at the identity, 0 elsewhere.
    pub fn regular(n: u32) -> Result<Self> {
        let mut f = Self::zero(n)?;
        let last = f.values.len() - 1;
        f.values[last] = factorial(n) as i64;
        Ok(f)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Argument("class functions on different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, values })
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { n: self.n, values: self.values.iter().map(|v| v * c).collect() }
    }

    /// `<f, g> = sum over classes of f(mu) g(mu) / z_mu`.
    pub fn inner_product(&self, other: &Self) -> Result<BigRational> {
        if self.n != other.n {
            return Err(Error::Argument("class functions on different groups".into()));
        }
        let classes = partitions_of(self.n)?;
        let mut acc = BigRational::zero();
        for ((mu, a), b) in classes.iter().zip(&self.values).zip(&other.values) {
            acc += BigRational::new((*a as i128 * *b as i128).into(), mu.centralizer_order().into());
        }
        Ok(acc)
    }
}

/// Inner products that are not non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("class function is not a character; offending inner products: {}", describe(.offending))]
pub struct DecompositionFailure {
    pub offending: Vec<(Partition, BigRational)>,
}

fn describe(items: &[(Partition, BigRational)]) -> String {
    items.iter().map(|(p, v)| format!("{p}: {v}")).collect::<Vec<_>>().join(", ")
}

/// Multiplicities of all irreducibles of `S_n` in `phi`, in partition order.
pub fn decompose_general(phi: &ClassFunction) -> std::result::Result<Vec<(Partition, u64)>, DecompositionFailure> {
    let classes = partitions_of(phi.n).expect("class function carries a valid n");
    let mut out = Vec::with_capacity(classes.len());
    let mut offending = Vec::new();
    for lambda in &classes {
        let chi = ClassFunction::character(lambda).expect("valid partition");
        let m = phi.inner_product(&chi).expect("same group");
        if !m.is_integer() || m.is_negative() {
            offending.push((lambda.clone(), m));
        } else {
            out.push((lambda.clone(), m.to_integer().to_u64().expect("multiplicity fits u64")));
        }
    }
    if offending.is_empty() {
        Ok(out)
    } else {
        Err(DecompositionFailure { offending })
    }
}

/// The eleven irreducible representations of `Sp(4, F_2)` in Enomoto's notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sp4F2Irrep {
    #[serde(rename = "theta0")]
    Theta0,
    #[serde(rename = "theta1")]
    Theta1,
    #[serde(rename = "theta2")]
    Theta2,
    #[serde(rename = "theta3")]
    Theta3,
    #[serde(rename = "theta4")]
    Theta4,
    #[serde(rename = "theta5")]
    Theta5,
    #[serde(rename = "chi5(1)")]
    Chi5,
    #[serde(rename = "chi8(1)")]
    Chi8,
    #[serde(rename = "chi9(1)")]
    Chi9,
    #[serde(rename = "chi12(1)")]
    Chi12,
    #[serde(rename = "chi13(1)")]
    Chi13,
}

impl Sp4F2Irrep {
    pub const ALL: [Sp4F2Irrep; 11] = [
        Sp4F2Irrep::Theta0,
        Sp4F2Irrep::Theta1,
        Sp4F2Irrep::Theta2,
        Sp4F2Irrep::Theta3,
        Sp4F2Irrep::Theta4,
        Sp4F2Irrep::Theta5,
        Sp4F2Irrep::Chi5,
        Sp4F2Irrep::Chi8,
        Sp4F2Irrep::Chi9,
        Sp4F2Irrep::Chi12,
        Sp4F2Irrep::Chi13,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Sp4F2Irrep::Theta0 => "theta0",
            Sp4F2Irrep::Theta1 => "theta1",
            Sp4F2Irrep::Theta2 => "theta2",
            Sp4F2Irrep::Theta3 => "theta3",
            Sp4F2Irrep::Theta4 => "theta4",
            Sp4F2Irrep::Theta5 => "theta5",
            Sp4F2Irrep::Chi5 => "chi5(1)",
            Sp4F2Irrep::Chi8 => "chi8(1)",
            Sp4F2Irrep::Chi9 => "chi9(1)",
            Sp4F2Irrep::Chi12 => "chi12(1)",
            Sp4F2Irrep::Chi13 => "chi13(1)",
        }
    }

    /// Label with Greek letters, for human-readable output.
    pub fn pretty(self) -> &'static str {
        match self {
            Sp4F2Irrep::Theta0 => "θ0",
            Sp4F2Irrep::Theta1 => "θ1",
            Sp4F2Irrep::Theta2 => "θ2",
            Sp4F2Irrep::Theta3 => "θ3",
            Sp4F2Irrep::Theta4 => "θ4",
            Sp4F2Irrep::Theta5 => "θ5",
            Sp4F2Irrep::Chi5 => "χ5(1)",
            Sp4F2Irrep::Chi8 => "χ8(1)",
            Sp4F2Irrep::Chi9 => "χ9(1)",
            Sp4F2Irrep::Chi12 => "χ12(1)",
            Sp4F2Irrep::Chi13 => "χ13(1)",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.label() == s || r.pretty() == s)
    }

    /// Partition of six attached to this representation by the fixed dictionary.
    pub fn partition(self) -> Partition {
        let parts: &[u32] = match self {
            Sp4F2Irrep::Theta0 => &[6],
            Sp4F2Irrep::Theta1 => &[4, 2],
            Sp4F2Irrep::Theta2 => &[2, 2, 2],
            Sp4F2Irrep::Theta3 => &[5, 1],
            Sp4F2Irrep::Theta4 => &[3, 2, 1],
            Sp4F2Irrep::Theta5 => &[1, 1, 1, 1, 1, 1],
            Sp4F2Irrep::Chi5 => &[2, 2, 1, 1],
            Sp4F2Irrep::Chi8 => &[3, 3],
            Sp4F2Irrep::Chi9 => &[2, 1, 1, 1, 1],
            Sp4F2Irrep::Chi12 => &[4, 1, 1],
            Sp4F2Irrep::Chi13 => &[3, 1, 1, 1],
        };
        Partition { parts: parts.to_vec() }
    }

    /// Dimension as tabulated alongside the dictionary.
    pub fn dim(self) -> u64 {
        match self {
            Sp4F2Irrep::Theta0 | Sp4F2Irrep::Theta5 => 1,
            Sp4F2Irrep::Theta1 | Sp4F2Irrep::Chi5 => 9,
            Sp4F2Irrep::Theta2 | Sp4F2Irrep::Theta3 | Sp4F2Irrep::Chi8 | Sp4F2Irrep::Chi9 => 5,
            Sp4F2Irrep::Theta4 => 16,
            Sp4F2Irrep::Chi12 | Sp4F2Irrep::Chi13 => 10,
        }
    }

    pub fn from_partition(p: &Partition) -> Option<Self> {
        Self::ALL.into_iter().find(|r| &r.partition() == p)
    }
}

impl fmt::Display for Sp4F2Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One row of the `Sp(4, F_2) ≅ S_6` dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DictionaryEntry {
    pub irrep: Sp4F2Irrep,
    pub partition: Partition,
    pub dim: u64,
}

pub fn sp4f2_dictionary() -> Vec<DictionaryEntry> {
    Sp4F2Irrep::ALL
        .into_iter()
        .map(|irrep| DictionaryEntry { irrep, partition: irrep.partition(), dim: irrep.dim() })
        .collect()
}

/// Non-negative multiplicities over the eleven irreducibles of `Sp(4, F_2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiplicityVector {
    mult: [u64; 11],
}

impl MultiplicityVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(irrep: Sp4F2Irrep) -> Self {
        let mut v = Self::zero();
        v.mult[irrep.index()] = 1;
        v
    }

    pub fn from_pairs(pairs: &[(Sp4F2Irrep, u64)]) -> Self {
        let mut v = Self::zero();
        for &(irrep, m) in pairs {
            v.mult[irrep.index()] += m;
        }
        v
    }

    pub fn get(&self, irrep: Sp4F2Irrep) -> u64 {
        self.mult[irrep.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn total_dimension(&self) -> u64 {
        Sp4F2Irrep::ALL.iter().map(|&r| self.get(r) * r.dim()).sum()
    }

    pub fn scaled(&self, c: u64) -> Self {
        let mut out = *self;
        out.mult.iter_mut().for_each(|m| *m *= c);
        out
    }

    /// Non-zero entries in dictionary order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Sp4F2Irrep, u64)> + '_ {
        Sp4F2Irrep::ALL.into_iter().map(|r| (r, self.get(r))).filter(|&(_, m)| m > 0)
    }

    /// The `S_6` character with these multiplicities.
    pub fn character(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(6).expect("S_6");
        for (irrep, m) in self.nonzero() {
            let chi = ClassFunction::character(&irrep.partition()).expect("partition of 6");
            acc = acc.add(&chi.scale(m as i64)).expect("same group");
        }
        acc
    }

    /// Human-readable sum such as `θ0 + 2·θ1`.
    pub fn pretty(&self) -> String {
        self.render(Sp4F2Irrep::pretty, "·")
    }

    fn render(&self, name: fn(Sp4F2Irrep) -> &'static str, times: &str) -> String {
        let terms: Vec<String> = self
            .nonzero()
            .map(|(r, m)| if m == 1 { name(r).to_string() } else { format!("{m}{times}{}", name(r)) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl std::ops::Add for MultiplicityVector {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (a, b) in self.mult.iter_mut().zip(rhs.mult) {
            *a += b;
        }
        self
    }
}

impl std::ops::AddAssign for MultiplicityVector {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Sp4F2Irrep::label, "*"))
    }
}

/// Serialized as a map from label to multiplicity, all eleven labels in order.
impl Serialize for MultiplicityVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(11))?;
        for r in Sp4F2Irrep::ALL {
            map.serialize_entry(r.label(), &self.get(r))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MultiplicityVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = std::collections::BTreeMap::<String, u64>::deserialize(d)?;
        let mut v = MultiplicityVector::zero();
        for (k, m) in raw {
            let r = Sp4F2Irrep::from_label(&k)
                .ok_or_else(|| serde::de::Error::custom(format!("unknown Sp(4,F_2) label {k:?}")))?;
            v.mult[r.index()] += m;
        }
        Ok(v)
    }
}

/// Decomposes a class function on `S_6` into the dictionary's irreducibles.
pub fn decompose(phi: &ClassFunction) -> std::result::Result<MultiplicityVector, DecompositionFailure> {
    if phi.n != 6 {
        return Err(DecompositionFailure { offending: vec![(Partition::row(phi.n), BigRational::one())] });
    }
    let parts = decompose_general(phi)?;
    let mut v = MultiplicityVector::zero();
    for (lambda, m) in parts {
        let irrep = Sp4F2Irrep::from_partition(&lambda).expect("dictionary covers every partition of 6");
        v.mult[irrep.index()] = m;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(1).unwrap(), vec![p(&[1])]);
        assert_eq!(
            partitions_of(4).unwrap(),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(6).unwrap().len(), 11);
        assert_eq!(partitions_of(20).unwrap().len(), 627);
    }

    #[test]
    fn partition_range_is_guarded() {
        assert!(matches!(partitions_of(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(partitions_of(21), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn rejects_non_canonical_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(irrep_dimension(&p(&[4, 2])), 9);
        assert_eq!(irrep_dimension(&p(&[3, 2, 1])), 16);
        assert_eq!(irrep_dimension(&Partition::column(6)), 1);
        assert_eq!(irrep_dimension(&p(&[10, 10])), 16796);
    }

    #[test]
    fn characters_on_special_classes() {
        for mu in partitions_of(6).unwrap() {
            assert_eq!(character_value(&Partition::row(6), &mu).unwrap(), 1);
            let sign = if (6 - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(character_value(&Partition::column(6), &mu).unwrap(), sign);
        }
        assert_eq!(character_value(&p(&[5, 1]), &Partition::column(6)).unwrap(), 5);
        // Standard representation: fixed points minus one.
        assert_eq!(character_value(&p(&[5, 1]), &p(&[2, 1, 1, 1, 1])).unwrap(), 3);
        assert!(character_value(&p(&[5, 1]), &p(&[4])).is_err());
    }

    #[test]
    fn parse_exponent_notation() {
        assert_eq!("[4,1^2]".parse::<Partition>().unwrap(), p(&[4, 1, 1]));
        assert_eq!("2^3".parse::<Partition>().unwrap(), p(&[2, 2, 2]));
        assert_eq!(p(&[2, 2, 1, 1]).exponent_notation(), "[2^2,1^2]");
    }

    #[test]
    fn dictionary_labels_round_trip() {
        for r in Sp4F2Irrep::ALL {
            assert_eq!(Sp4F2Irrep::from_label(r.label()), Some(r));
            assert_eq!(Sp4F2Irrep::from_partition(&r.partition()), Some(r));
        }
        let json = serde_json::to_string(&MultiplicityVector::unit(Sp4F2Irrep::Chi12)).unwrap();
        let back: MultiplicityVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, MultiplicityVector::unit(Sp4F2Irrep::Chi12));
    }

    #[test]
    fn decomposition_of_simple_inputs() {
        let reg = ClassFunction::regular(6).unwrap();
        let v = decompose(&reg).unwrap();
        for r in Sp4F2Irrep::ALL {
            assert_eq!(v.get(r), r.dim());
        }
        let triv = ClassFunction::character(&Partition::row(6)).unwrap();
        assert_eq!(decompose(&triv).unwrap(), MultiplicityVector::unit(Sp4F2Irrep::Theta0));
        let combo = triv.add(&ClassFunction::character(&p(&[4, 2])).unwrap().scale(2)).unwrap();
        assert_eq!(
            decompose(&combo).unwrap(),
            MultiplicityVector::from_pairs(&[(Sp4F2Irrep::Theta0, 1), (Sp4F2Irrep::Theta1, 2)])
        );
    }

    #[test]
    fn non_characters_fail_with_inner_products() {
        let mut values = vec![0; 11];
        values[0] = 1; // indicator of the 6-cycle class
        let f = ClassFunction::new(6, values).unwrap();
        let err = decompose(&f).unwrap_err();
        assert!(!err.offending.is_empty());
        assert!(err.offending.iter().all(|(_, m)| !m.is_integer()));
        let negative = ClassFunction::character(&Partition::row(6)).unwrap().scale(-1);
        assert!(decompose(&negative).is_err());
    }
}
