//! Local `L`-packets of `GSp(4)` attached to pairs of `GL(2)` representations,
//! and their restriction to principal congruence subgroups.
//!
//! Inputs are described by [`GL2LocalType`], which records only the data that
//! the tables depend on: tame residue indices of the characters involved, the
//! quadratic twist of a Steinberg representation, and the cuspidal parameter
//! of a depth-zero supercuspidal. Anything wilder is collapsed into a single
//! tag; such inputs have no invariants under the first principal congruence
//! subgroup and restrict to zero.
//!
//! Quadratic twists of Steinberg representations are recorded through flags
//! relative to a base character `mu`: write `mu·xi_t·St` as
//! `Steinberg { mu, twist: xi_t }`, not by shifting the index of `mu`.
//!
//! Central characters of the two inputs are assumed to agree. Only
//! representability is checked, for example that `xi_t` is not used at even `q`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use self::Cuspidal as Cusp;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::repdims::{
    canonical_cuspidal, catalogue, check_prime_power, row_dim_polynomial, Convention, EndoCase,
    PacketCase, ParamContext, RestrictionOutcome, RowRef, SigmaS, Sign, SkSigma,
};

/// A character of `F^x` up to its unramified part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Character {
    /// At most tamely ramified, with residue index modulo `q - 1`; `0` is unramified.
    Tame(u64),
    /// Wildly ramified.
    Wild,
}

impl Character {
    pub const UNRAMIFIED: Character = Character::Tame(0);

    fn index(self, q: u64) -> Option<u64> {
        match self {
            Character::Tame(k) => Some(k % (q - 1)),
            Character::Wild => None,
        }
    }
}

/// Quadratic twist of a Steinberg representation relative to its base character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct QuadraticTwist {
    /// Twisted by the unramified quadratic character `xi_u`.
    pub unramified: bool,
    /// Twisted by a tamely ramified quadratic character `xi_t` (odd residue characteristic).
    pub tame: bool,
}

impl QuadraticTwist {
    pub const NONE: QuadraticTwist = QuadraticTwist { unramified: false, tame: false };
    pub const XI_U: QuadraticTwist = QuadraticTwist { unramified: true, tame: false };
    pub const XI_T: QuadraticTwist = QuadraticTwist { unramified: false, tame: true };

    fn ratio(self, other: Self) -> Self {
        Self { unramified: self.unramified ^ other.unramified, tame: self.tame ^ other.tame }
    }

    fn is_trivial(self) -> bool {
        !self.unramified && !self.tame
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Cuspidal {
    /// Depth zero, attached to the character `theta^l` of `F_{q^2}^x`.
    DepthZero { l: u64 },
    /// Positive depth; the label only serves to tell representations apart.
    PositiveDepth { label: String },
}

/// Classification of an irreducible generic representation of `GL(2, F)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GL2LocalType {
    PrincipalSeries(Character, Character),
    Steinberg { mu: Character, twist: QuadraticTwist },
    Cuspidal(Cuspidal),
}

impl GL2LocalType {
    /// Unramified principal series.
    pub fn spherical() -> Self {
        GL2LocalType::PrincipalSeries(Character::UNRAMIFIED, Character::UNRAMIFIED)
    }

    pub fn steinberg() -> Self {
        GL2LocalType::Steinberg { mu: Character::UNRAMIFIED, twist: QuadraticTwist::NONE }
    }

    pub fn xi_u_steinberg() -> Self {
        GL2LocalType::Steinberg { mu: Character::UNRAMIFIED, twist: QuadraticTwist::XI_U }
    }

    pub fn xi_t_steinberg() -> Self {
        GL2LocalType::Steinberg { mu: Character::UNRAMIFIED, twist: QuadraticTwist::XI_T }
    }

    pub fn depth_zero(l: u64) -> Self {
        GL2LocalType::Cuspidal(Cusp::DepthZero { l })
    }

    pub fn positive_depth(label: &str) -> Self {
        GL2LocalType::Cuspidal(Cusp::PositiveDepth { label: label.to_string() })
    }

    pub fn is_discrete_series(&self) -> bool {
        !matches!(self, GL2LocalType::PrincipalSeries(..))
    }

    pub fn is_spherical(&self) -> bool {
        matches!(self, GL2LocalType::PrincipalSeries(Character::Tame(0), Character::Tame(0)))
    }

    /// Nonzero invariants under the first principal congruence subgroup of `GL(2, o)`.
    pub fn has_k1_invariants(&self) -> bool {
        match self {
            GL2LocalType::PrincipalSeries(a, b) => *a != Character::Wild && *b != Character::Wild,
            GL2LocalType::Steinberg { mu, .. } => *mu != Character::Wild,
            GL2LocalType::Cuspidal(c) => matches!(c, Cuspidal::DepthZero { .. }),
        }
    }

    /// Dimension of the invariants under the first principal congruence subgroup.
    ///
    /// `q + 1` for tame principal series, `q` for tame Steinberg twists, `q - 1`
    /// for depth-zero cuspidals.
    pub fn k1_invariant_dim(&self, q: u64) -> u64 {
        if !self.has_k1_invariants() {
            return 0;
        }
        match self {
            GL2LocalType::PrincipalSeries(..) => q + 1,
            GL2LocalType::Steinberg { .. } => q,
            GL2LocalType::Cuspidal(_) => q - 1,
        }
    }

    fn uses_xi_t(&self) -> bool {
        matches!(self, GL2LocalType::Steinberg { twist, .. } if twist.tame)
    }

    fn kind_rank(&self) -> u8 {
        match self {
            GL2LocalType::PrincipalSeries(..) => 0,
            GL2LocalType::Steinberg { .. } => 1,
            GL2LocalType::Cuspidal(_) => 2,
        }
    }
}

fn fmt_char(c: Character) -> String {
    match c {
        Character::Tame(k) => k.to_string(),
        Character::Wild => "w".into(),
    }
}

/// Compact text form, read back by [`FromStr`]:
/// `ps`, `ps:K1,K2`, `st`, `st:xu`, `st:xt@K`, `cusp:L`, `cusp:deep`.
impl fmt::Display for GL2LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GL2LocalType::PrincipalSeries(a, b) => write!(f, "ps:{},{}", fmt_char(*a), fmt_char(*b)),
            GL2LocalType::Steinberg { mu, twist } => {
                f.write_str("st")?;
                match (twist.unramified, twist.tame) {
                    (false, false) => {}
                    (true, false) => f.write_str(":xu")?,
                    (false, true) => f.write_str(":xt")?,
                    (true, true) => f.write_str(":xuxt")?,
                }
                if *mu != Character::UNRAMIFIED {
                    write!(f, "@{}", fmt_char(*mu))?;
                }
                Ok(())
            }
            GL2LocalType::Cuspidal(Cusp::DepthZero { l }) => write!(f, "cusp:{l}"),
            GL2LocalType::Cuspidal(Cusp::PositiveDepth { label }) if label.is_empty() => {
                f.write_str("cusp:deep")
            }
            GL2LocalType::Cuspidal(Cusp::PositiveDepth { label }) => write!(f, "cusp:deep:{label}"),
        }
    }
}

fn parse_char(s: &str) -> Result<Character> {
    match s.trim() {
        "w" | "wild" => Ok(Character::Wild),
        t => t
            .parse::<u64>()
            .map(Character::Tame)
            .map_err(|_| Error::Parse(format!("bad character index {t:?}"))),
    }
}

impl FromStr for GL2LocalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let (head, at) = match head.split_once('@') {
            Some((h, a)) => (h, Some(a)),
            None => (head, None),
        };
        match head {
            "ps" => {
                let (a, b) = match rest {
                    None => (Character::UNRAMIFIED, Character::UNRAMIFIED),
                    Some(r) => {
                        let (a, b) = r
                            .split_once(',')
                            .ok_or_else(|| Error::Parse(format!("expected ps:K1,K2, got {s:?}")))?;
                        (parse_char(a)?, parse_char(b)?)
                    }
                };
                Ok(GL2LocalType::PrincipalSeries(a, b))
            }
            "st" => {
                let (flags, at) = match rest.map(|r| r.split_once('@')) {
                    Some(Some((f, a))) => (Some(f), Some(a)),
                    Some(None) => (rest, at),
                    None => (None, at),
                };
                let twist = match flags.map(str::trim) {
                    None | Some("") => QuadraticTwist::NONE,
                    Some("xu") => QuadraticTwist::XI_U,
                    Some("xt") => QuadraticTwist::XI_T,
                    Some("xuxt") | Some("xtxu") => QuadraticTwist { unramified: true, tame: true },
                    Some(other) => return Err(Error::Parse(format!("unknown Steinberg twist {other:?}"))),
                };
                let mu = match at {
                    Some(a) => parse_char(a)?,
                    None => Character::UNRAMIFIED,
                };
                Ok(GL2LocalType::Steinberg { mu, twist })
            }
            "cusp" => match rest.map(str::trim) {
                Some("deep") => Ok(GL2LocalType::positive_depth("")),
                Some(r) if r.starts_with("deep:") => Ok(GL2LocalType::positive_depth(&r[5..])),
                Some(r) => r
                    .parse::<u64>()
                    .map(GL2LocalType::depth_zero)
                    .map_err(|_| Error::Parse(format!("bad cuspidal parameter {r:?}"))),
                None => Err(Error::Parse("cusp needs a parameter, e.g. cusp:1 or cusp:deep".into())),
            },
            _ => Err(Error::Parse(format!("unknown local type {s:?}"))),
        }
    }
}

// ---------------------------------------------------------------------------
// Packets

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PacketMember {
    pub sign: Sign,
    /// Symbolic name, or `cuspidal`.
    pub description: String,
    pub cuspidal: bool,
    pub exists: bool,
}

fn ordered<'a>(a: &'a GL2LocalType, b: &'a GL2LocalType) -> (&'a GL2LocalType, &'a GL2LocalType) {
    if (a.kind_rank(), a) <= (b.kind_rank(), b) {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn packet_case(a: &GL2LocalType, b: &GL2LocalType) -> PacketCase {
    use GL2LocalType::*;
    let (a, b) = ordered(a, b);
    match (a, b) {
        (PrincipalSeries(..), PrincipalSeries(..)) => PacketCase::PsPs,
        (PrincipalSeries(..), Steinberg { .. }) => PacketCase::StPs,
        (PrincipalSeries(..), Cuspidal(_)) => PacketCase::CuspPs,
        (Steinberg { mu: m1, twist: t1 }, Steinberg { mu: m2, twist: t2 }) => {
            if m1 == m2 && t1.ratio(*t2).is_trivial() {
                PacketCase::StSt
            } else {
                PacketCase::XiStSt
            }
        }
        (Steinberg { .. }, Cuspidal(_)) => PacketCase::CuspSt,
        (Cuspidal(c1), Cuspidal(c2)) => {
            if c1 == c2 {
                PacketCase::CuspIso
            } else {
                PacketCase::CuspNoniso
            }
        }
        _ => unreachable!("pair is ordered by kind"),
    }
}

/// The packet `{Pi_+, Pi_-}` attached to an unordered pair.
pub fn endoscopic_packet(a: &GL2LocalType, b: &GL2LocalType) -> (PacketMember, PacketMember) {
    let row = catalogue().packet_row(packet_case(a, b));
    let plus = PacketMember {
        sign: Sign::Plus,
        cuspidal: row.plus == "cuspidal",
        description: row.plus.clone(),
        exists: true,
    };
    let minus = match &row.minus {
        Some(m) => PacketMember { sign: Sign::Minus, cuspidal: m == "cuspidal", description: m.clone(), exists: true },
        None => PacketMember { sign: Sign::Minus, cuspidal: false, description: "none".into(), exists: false },
    };
    (plus, minus)
}

// ---------------------------------------------------------------------------
// Restriction of endoscopic packets

/// Row shape of an input pair, before any `q`-dependent parameters.
fn endo_shape(a: &GL2LocalType, b: &GL2LocalType) -> Result<Option<(EndoCase, GL2LocalType, GL2LocalType)>> {
    use GL2LocalType::*;
    if !a.has_k1_invariants() || !b.has_k1_invariants() {
        return Ok(None);
    }
    let (a, b) = ordered(a, b);
    let case = match (a, b) {
        (PrincipalSeries(..), PrincipalSeries(..)) => EndoCase::PsPs,
        (PrincipalSeries(..), Steinberg { .. }) => EndoCase::PsSt,
        (PrincipalSeries(..), Cuspidal(_)) => EndoCase::PsCusp,
        (Steinberg { mu: m1, twist: t1 }, Steinberg { mu: m2, twist: t2 }) => {
            if m1 != m2 {
                return Err(Error::InconsistentInput(format!(
                    "Steinberg inputs {a} and {b} have different base characters; \
                     record quadratic twists through the twist flags"
                )));
            }
            let r = t1.ratio(*t2);
            if r.tame {
                EndoCase::StXt
            } else if r.unramified {
                EndoCase::StXu
            } else {
                EndoCase::StSt
            }
        }
        (Steinberg { .. }, Cuspidal(_)) => EndoCase::StCusp,
        (Cuspidal(c1), Cuspidal(c2)) => {
            if c1 == c2 {
                EndoCase::CuspIso
            } else {
                EndoCase::CuspNoniso
            }
        }
        _ => unreachable!("pair is ordered by kind"),
    };
    Ok(Some((case, a.clone(), b.clone())))
}

fn reject_xi_t_at_even_q(types: &[&GL2LocalType], q: u64) -> Result<()> {
    if q % 2 == 0 {
        if let Some(t) = types.iter().find(|t| t.uses_xi_t()) {
            return Err(Error::InconsistentInput(format!(
                "{t}: a tamely ramified quadratic character exists only for odd q, got q = {q}"
            )));
        }
    }
    Ok(())
}

fn tame(c: Character, q: u64) -> u64 {
    c.index(q).expect("checked for K^(1) invariants")
}

/// Parameters of the row, read off the ordered pair.
fn endo_context(case: EndoCase, a: &GL2LocalType, b: &GL2LocalType, q: u64) -> Result<ParamContext> {
    use GL2LocalType::*;
    let big = q * q - 1;
    let mut ctx = ParamContext { q, ..Default::default() };
    let cusp_l = |t: &GL2LocalType| match t {
        Cuspidal(Cusp::DepthZero { l }) => *l % big,
        _ => unreachable!("depth zero by shape"),
    };
    // Removes the twist mu_1 from mu_1·rho_2: the index shifts by (q+1) k_1.
    let untwist = |l: u64, k1: u64| (l + big - ((q + 1) * k1) % big) % big;
    match (case, a, b) {
        (EndoCase::PsPs, PrincipalSeries(m1, m2), PrincipalSeries(m3, m4)) => {
            ctx.k = [Some(tame(*m1, q)), Some(tame(*m2, q)), Some(tame(*m3, q)), Some(tame(*m4, q))];
        }
        (EndoCase::PsSt, PrincipalSeries(m1, m2), Steinberg { mu, .. }) => {
            ctx.k = [Some(tame(*m1, q)), Some(tame(*m2, q)), Some(tame(*mu, q)), None];
        }
        (EndoCase::StSt | EndoCase::StXu | EndoCase::StXt, Steinberg { mu, .. }, _) => {
            ctx.k[0] = Some(tame(*mu, q));
        }
        (EndoCase::PsCusp, PrincipalSeries(m1, m2), c) => {
            let k1 = tame(*m1, q);
            ctx.k = [Some(k1), Some(tame(*m2, q)), None, None];
            ctx.l[1] = Some(canonical_cuspidal(untwist(cusp_l(c), k1), q)?);
        }
        (EndoCase::StCusp, Steinberg { mu, .. }, c) => {
            let k1 = tame(*mu, q);
            ctx.k[0] = Some(k1);
            ctx.l[1] = Some(canonical_cuspidal(untwist(cusp_l(c), k1), q)?);
        }
        (EndoCase::CuspIso | EndoCase::CuspNoniso, c1, c2) => {
            let (l1, l2) = (canonical_cuspidal(cusp_l(c1), q)?, canonical_cuspidal(cusp_l(c2), q)?);
            let (l1, l2) = (l1.min(l2), l1.max(l2));
            ctx.l = [Some(l1), Some(l2)];
        }
        _ => unreachable!("shape matches case"),
    }
    Ok(ctx)
}

/// Canonical case of an input pair, with iso/non-iso decided after canonicalization.
fn endo_case_at_q(a: &GL2LocalType, b: &GL2LocalType, q: u64) -> Result<Option<(EndoCase, ParamContext)>> {
    let Some((mut case, a, b)) = endo_shape(a, b)? else {
        return Ok(None);
    };
    if matches!(case, EndoCase::CuspIso | EndoCase::CuspNoniso) {
        case = EndoCase::CuspNoniso;
    }
    let ctx = endo_context(case, &a, &b, q)?;
    if case == EndoCase::CuspNoniso && ctx.l[0] == ctx.l[1] {
        case = EndoCase::CuspIso;
    }
    Ok(Some((case, ctx)))
}

fn outcome_from_row(
    row_ref: RowRef,
    templates: Option<&Vec<crate::repdims::LabelTemplate>>,
    ctx: &ParamContext,
    descriptor: Option<String>,
) -> Result<RestrictionOutcome> {
    let q = ctx.q;
    let convention = Convention::for_q(q);
    let templates = templates.ok_or_else(|| {
        Error::InconsistentInput(format!("row {row_ref:?} does not occur for q = {q}"))
    })?;
    let summands = ctx.instantiate(convention, templates)?;
    let dim_poly = row_dim_polynomial(row_ref)?;
    let out = RestrictionOutcome {
        q,
        convention,
        dim: dim_poly.eval(q)?,
        summands,
        dim_poly,
        descriptor,
        member_exists: true,
    };
    let sum = out.summand_dim_poly()?;
    if sum != out.dim_poly {
        return Err(Error::Consistency(format!(
            "row {row_ref:?}: constituents give {sum}, printed total is {}",
            out.dim_poly
        )));
    }
    Ok(out)
}

/// Invariants of `Pi_sign(a, b)` under the principal congruence subgroup, as a
/// representation of the finite group.
pub fn restrict_endo(a: &GL2LocalType, b: &GL2LocalType, sign: Sign, q: u64) -> Result<RestrictionOutcome> {
    check_prime_power(q)?;
    reject_xi_t_at_even_q(&[a, b], q)?;
    let (_, minus) = endoscopic_packet(a, b);
    let exists = sign == Sign::Plus || minus.exists;
    if !exists {
        return Ok(RestrictionOutcome::zero(q, false));
    }
    let Some((case, ctx)) = endo_case_at_q(a, b, q)? else {
        return Ok(RestrictionOutcome::zero(q, true));
    };
    let row = catalogue()
        .endo_row(case, sign)
        .ok_or_else(|| Error::Consistency(format!("no catalogued row {case:?} {sign}")))?;
    let templates = if q % 2 == 0 { row.even.as_ref() } else { row.odd.as_ref() };
    outcome_from_row(RowRef::Endo(case, sign), templates, &ctx, None)
}

/// The catalogued row an input pair falls into, or `None` when it restricts to zero.
pub fn endo_row_of(a: &GL2LocalType, b: &GL2LocalType, sign: Sign) -> Option<RowRef> {
    let (case, _, _) = endo_shape(a, b).ok()??;
    catalogue().endo_row(case, sign).map(|_| RowRef::Endo(case, sign))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariancePredicates {
    pub spherical: bool,
    pub has_k: bool,
    pub has_k_prime: bool,
}

/// Sphericity and existence of invariants under `K(p)` and `K'(p)`.
pub fn invariance_predicates(a: &GL2LocalType, b: &GL2LocalType, sign: Sign) -> InvariancePredicates {
    let spherical = sign == Sign::Plus && a.is_spherical() && b.is_spherical();
    let has_k = match endo_row_of(a, b, sign) {
        Some(row) => row_dim_polynomial(row).map(|p| !p.is_zero()).unwrap_or(false),
        None => false,
    };
    InvariancePredicates { spherical, has_k, has_k_prime: has_k }
}

/// Representative inputs for a row at `q`, if the row has an instance there.
pub fn endo_sample(case: EndoCase, q: u64) -> Option<(GL2LocalType, GL2LocalType)> {
    use GL2LocalType as T;
    let cusp = T::depth_zero(q - 1);
    Some(match case {
        EndoCase::PsPs => (T::spherical(), T::spherical()),
        EndoCase::PsSt => (T::spherical(), T::steinberg()),
        EndoCase::StSt => (T::steinberg(), T::steinberg()),
        EndoCase::StXu => (T::steinberg(), T::xi_u_steinberg()),
        EndoCase::StXt if q % 2 == 1 => (T::steinberg(), T::xi_t_steinberg()),
        EndoCase::StXt => return None,
        EndoCase::PsCusp => (T::spherical(), cusp),
        EndoCase::StCusp => (T::steinberg(), cusp),
        EndoCase::CuspIso => (cusp.clone(), cusp),
        // Needs a second class with trivial central character; none for q <= 3.
        EndoCase::CuspNoniso if q >= 4 => (cusp, T::depth_zero(2 * (q - 1))),
        EndoCase::CuspNoniso => return None,
    })
}

// ---------------------------------------------------------------------------
// Saito-Kurokawa

/// Local datum of a Saito-Kurokawa lift: `sigma` and whether the place lies in `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SKLocalInput {
    pub sigma: GL2LocalType,
    pub in_s: bool,
}

fn sk_sigma(sigma: &GL2LocalType, q: u64) -> Result<(SkSigma, ParamContext)> {
    use GL2LocalType::*;
    let mut ctx = ParamContext { q, ..Default::default() };
    let case = match sigma {
        PrincipalSeries(a, b) => {
            let (ka, kb) = (tame(*a, q), tame(*b, q));
            if (ka + kb) % (q - 1) != 0 {
                return Err(Error::InconsistentInput(format!(
                    "{sigma} is not of the form mu x mu^-1 (trivial central character)"
                )));
            }
            ctx.k[0] = Some(ka);
            SkSigma::Ps
        }
        Steinberg { mu, twist } => {
            if *mu != Character::UNRAMIFIED {
                return Err(Error::InconsistentInput(format!(
                    "{sigma}: Steinberg inputs with trivial central character are St, xi_u St, xi_t St"
                )));
            }
            if twist.tame {
                SkSigma::Xt
            } else if twist.unramified {
                SkSigma::Xu
            } else {
                SkSigma::St
            }
        }
        Cuspidal(Cusp::DepthZero { l }) => {
            ctx.l[0] = Some(canonical_cuspidal(*l, q)?);
            SkSigma::Cusp
        }
        Cuspidal(Cusp::PositiveDepth { .. }) => unreachable!("filtered by K^(1) check"),
    };
    Ok((case, ctx))
}

/// Invariants of the local Saito-Kurokawa lift `Pi(sigma, sigma_S)`.
pub fn restrict_sk(input: &SKLocalInput, q: u64) -> Result<RestrictionOutcome> {
    check_prime_power(q)?;
    reject_xi_t_at_even_q(&[&input.sigma], q)?;
    if input.in_s && !input.sigma.is_discrete_series() {
        return Err(Error::InconsistentInput(format!(
            "sigma_S = St at a place where {} is not discrete series",
            input.sigma
        )));
    }
    if !input.sigma.has_k1_invariants() {
        return Ok(RestrictionOutcome::zero(q, true));
    }
    let (sigma, ctx) = sk_sigma(&input.sigma, q)?;
    let sigma_s = if input.in_s { SigmaS::St } else { SigmaS::One };
    let row = catalogue()
        .sk_row(sigma, sigma_s)
        .ok_or_else(|| Error::Consistency(format!("no catalogued row {sigma:?} {sigma_s:?}")))?;
    let templates = if q % 2 == 0 { row.even.as_ref() } else { row.odd.as_ref() };
    outcome_from_row(RowRef::Sk(sigma, sigma_s), templates, &ctx, Some(row.descriptor.clone()))
}

/// Representative input for a Saito-Kurokawa row at `q`.
pub fn sk_sample(sigma: SkSigma, sigma_s: SigmaS, q: u64) -> Option<SKLocalInput> {
    use GL2LocalType as T;
    let in_s = sigma_s == SigmaS::St;
    let sigma = match sigma {
        SkSigma::Ps if in_s => return None,
        SkSigma::Ps => T::spherical(),
        SkSigma::St => T::steinberg(),
        SkSigma::Xu => T::xi_u_steinberg(),
        SkSigma::Xt if q % 2 == 1 => T::xi_t_steinberg(),
        SkSigma::Xt => return None,
        SkSigma::Cusp => T::depth_zero(q - 1),
    };
    Some(SKLocalInput { sigma, in_s })
}

/// Whether `(-1)^{#S}` matches the central sign `epsilon(sigma, 1/2)`.
pub fn sk_parity_admissible(size_of_s: usize, epsilon_central: i8) -> bool {
    let parity = if size_of_s % 2 == 0 { 1 } else { -1 };
    parity == epsilon_central
}

/// `epsilon(sigma, 1/2) = (-1)^{k-1} prod eps_p` for a classical form of weight `2k-2`.
pub fn epsilon_central(k: i64, atkin_lehner_signs: &[i8]) -> Result<i8> {
    if let Some(bad) = atkin_lehner_signs.iter().find(|&&e| e != 1 && e != -1) {
        return Err(Error::Argument(format!("Atkin-Lehner sign must be +1 or -1, got {bad}")));
    }
    let base: i8 = if (k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(atkin_lehner_signs.iter().fold(base, |acc, e| acc * e))
}

/// Data of the depth-zero cuspidal representations of `GL(2, Q_2)` of conductor 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level4CuspidalDatum {
    /// `q - 1` at `q = 2`.
    pub dim_invariants: u64,
    pub epsilon: i8,
    /// `L(sigma, s)` as a polynomial in `2^{-s}`; constant `1`.
    pub l_factor: Vec<i64>,
}

impl Level4CuspidalDatum {
    pub fn l_factor_polynomial(&self) -> Polynomial {
        Polynomial::from_ints(&self.l_factor)
    }
}

pub fn level4_cuspidal_datum() -> Level4CuspidalDatum {
    let q = 2;
    Level4CuspidalDatum {
        dim_invariants: GL2LocalType::depth_zero(1).k1_invariant_dim(q),
        epsilon: -1,
        l_factor: vec![1],
    }
}
