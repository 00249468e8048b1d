//! Command-line front end for the `parahoric` calculators.
//!
//! [`run`] is the whole program; `main` only forwards the process arguments
//! and streams, which keeps the binary testable in-process.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use parahoric::cohomology::{self, CohomologyPiece, IdentityCheck, PairCount, Weight};
use parahoric::lfactors::{self, EulerFactor, HalfInteger, RationalFactor, ShiftMode};
use parahoric::modforms::{self, NewformCounts};
use parahoric::packets::{self, GL2LocalType, SKLocalInput};
use parahoric::poly::Polynomial;
use parahoric::repdims::{RestrictionOutcome, Sign};
use parahoric::symgroup::{sp4f2_dictionary, MultiplicityVector};
use parahoric::Error;

mod check;
mod report;

pub use report::{Format, Report};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for a violated invariant or internal consistency failure.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "parahoric", version, about = "Parahoric restrictions, S_6 decompositions and level-2 cohomology of Siegel threefolds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "pretty")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The eleven irreducibles of Sp(4, F_2) = S_6.
    Dict,
    /// Invariants of a local lift under the first principal congruence subgroup.
    #[command(subcommand)]
    Restrict(RestrictCommand),
    /// The two members of the endoscopic packet of a pair.
    Packet {
        first: String,
        second: String,
    },
    /// Newform dimension bookkeeping for levels 1, 2, 4.
    Dims(DimsArgs),
    /// Atkin-Lehner split of the level-2 new space by both methods.
    AlSplit(RangeArgs),
    /// Endoscopic cohomology at level 2, or at a prime level from pair counts.
    Endo(EndoArgs),
    /// Saito-Kurokawa cohomology at level 2.
    Sk {
        /// Parallel weight lambda1 = lambda2.
        #[arg(long)]
        lambda: u64,
    },
    /// Runs every identity and consistency check up to a weight bound.
    Check {
        #[arg(long, default_value_t = 40)]
        rmax: u64,
        /// Worker threads; the report does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Euler factor manipulations.
    #[command(subcommand)]
    Lfactor(LfactorCommand),
}

#[derive(Debug, Subcommand)]
enum RestrictCommand {
    /// Endoscopic lift Pi_sign(first, second).
    Endo {
        first: String,
        second: String,
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long)]
        q: u64,
    },
    /// Saito-Kurokawa lift Pi(sigma, sigma_S).
    Sk {
        sigma: String,
        /// The place lies in S (sigma_S = St).
        #[arg(long)]
        in_s: bool,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Args)]
struct RangeArgs {
    /// A single weight.
    #[arg(long, conflicts_with = "rmax")]
    r: Option<u64>,
    /// All even weights 2..=rmax.
    #[arg(long)]
    rmax: Option<u64>,
}

impl RangeArgs {
    fn weights(&self) -> Result<Vec<u64>, CliError> {
        match (self.r, self.rmax) {
            (Some(r), None) => Ok(vec![r]),
            (None, Some(m)) => Ok((2..=m).step_by(2).collect()),
            (None, None) => Err(CliError::Usage("give --r or --rmax".into())),
            (Some(_), Some(_)) => unreachable!("clap rejects both"),
        }
    }
}

#[derive(Debug, Args)]
struct DimsArgs {
    #[command(flatten)]
    range: RangeArgs,
    /// Compare against a fixtures file instead of listing weights.
    #[arg(long, conflicts_with_all = ["r", "rmax"])]
    fixtures: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
struct EndoArgs {
    /// Weight lambda1 lambda2 for level 2.
    #[arg(long, num_args = 2, value_names = ["L1", "L2"], conflicts_with = "q")]
    lambda: Option<Vec<u64>>,
    /// Prime-power level for caller-supplied pair counts.
    #[arg(long, requires = "pair")]
    q: Option<u64>,
    /// Local types at the level prime and a count, e.g. `--pair st st:xu 3`.
    #[arg(long, num_args = 3, value_names = ["FIRST", "SECOND", "COUNT"], action = clap::ArgAction::Append, allow_hyphen_values = true)]
    pair: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum LfactorCommand {
    /// Product of two factors at the same prime.
    Spinor {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        e1: String,
        #[arg(long, allow_hyphen_values = true)]
        e2: String,
    },
    /// Substitutes X -> p^{-t} X.
    Shift {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        /// Integer or n/2.
        #[arg(long, allow_hyphen_values = true)]
        t: HalfInteger,
        /// Allow sqrt(p) in the result.
        #[arg(long)]
        surd: bool,
    },
    /// Local factor of zeta(s-k+1) zeta(s-k+2) L(f,s), with the level correction.
    Sk {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<i8>,
        #[arg(long)]
        in_m: bool,
        /// Euler factor of f at p.
        #[arg(long, allow_hyphen_values = true)]
        e: String,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Library(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Library(e) => match e {
                Error::Consistency(_) | Error::Catalogue(_) | Error::Precision(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            },
            CliError::Io(_) => EXIT_VIOLATION,
        }
    }

    fn report(&self) -> Value {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage".to_string(), m.clone()),
            CliError::Library(e) => (error_kind(e).to_string(), e.to_string()),
            CliError::Io(e) => ("io".to_string(), e.to_string()),
        };
        json!({ "error": kind, "message": message })
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::OutOfRange { .. } => "out_of_range",
        Error::Argument(_) => "argument",
        Error::Catalogue(_) => "catalogue",
        Error::NotInImage { .. } => "not_in_image",
        Error::InconsistentInput(_) => "inconsistent_input",
        Error::Precision(_) => "precision",
        Error::UnsupportedWeight(_) => "unsupported_weight",
        Error::UnsupportedLevel(_) => "unsupported_level",
        Error::Consistency(_) => "consistency",
        Error::Hypothesis(_) => "hypothesis",
        Error::Mode { .. } => "mode",
        Error::Parse(_) => "parse",
    }
}

/// Runs the program on `argv` (including the program name) and returns the exit code.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let display_only = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if display_only {
                let _ = write!(out, "{text}");
                return EXIT_OK;
            }
            let _ = write!(err, "{text}");
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli.command) {
        Ok((report, code)) => match report.write(cli.format, out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "{}", CliError::Io(e).report());
                EXIT_VIOLATION
            }
        },
        Err(e) => {
            let _ = writeln!(err, "{}", e.report());
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command) -> Result<(Report, i32), CliError> {
    let ok = |r: Report| Ok((r, EXIT_OK));
    match cmd {
        Command::Dict => ok(dict()),
        Command::Restrict(RestrictCommand::Endo { first, second, sign, q }) => {
            let (a, b) = (local_type(first)?, local_type(second)?);
            ok(restriction(packets::restrict_endo(&a, &b, *sign, *q)?))
        }
        Command::Restrict(RestrictCommand::Sk { sigma, in_s, q }) => {
            let input = SKLocalInput { sigma: local_type(sigma)?, in_s: *in_s };
            ok(restriction(packets::restrict_sk(&input, *q)?))
        }
        Command::Packet { first, second } => ok(packet(&local_type(first)?, &local_type(second)?)),
        Command::Dims(args) => dims(args),
        Command::AlSplit(range) => ok(al_split(&range.weights()?)?),
        Command::Endo(args) => ok(endo(args)?),
        Command::Sk { lambda } => ok(sk(*lambda)?),
        Command::Check { rmax, jobs } => check::run(*rmax, *jobs),
        Command::Lfactor(c) => ok(lfactor(c)?),
    }
}

fn local_type(text: &str) -> Result<GL2LocalType, CliError> {
    Ok(text.parse::<GL2LocalType>()?)
}

fn dict() -> Report {
    let entries = sp4f2_dictionary();
    let rows = entries
        .iter()
        .map(|e| vec![e.irrep.label().to_string(), e.irrep.pretty().to_string(), e.partition.to_string(), e.dim.to_string()])
        .collect();
    let json = json!(entries
        .iter()
        .map(|e| json!({ "label": e.irrep.label(), "name": e.irrep.pretty(), "partition": e.partition.to_string(), "dim": e.dim }))
        .collect::<Vec<_>>());
    Report::table(json, vec!["label", "name", "partition", "dim"], rows)
}

fn restriction(outcome: RestrictionOutcome) -> Report {
    let mut rows: Vec<Vec<String>> = outcome
        .summands
        .iter()
        .map(|s| {
            let d = parahoric::repdims::evaluate_dim(&s.label, outcome.q).map(|d| d.to_string()).unwrap_or_default();
            vec![s.label.to_string(), s.multiplicity.to_string(), d]
        })
        .collect();
    rows.push(vec!["total".into(), String::new(), outcome.dim.to_string()]);
    let mut json = serde_json::to_value(&outcome).expect("outcome serializes");
    if outcome.q == 2 {
        if let Ok(m) = outcome.multiplicities() {
            json["mult"] = serde_json::to_value(m).expect("vector serializes");
        }
    }
    let mut text = String::new();
    let terms: Vec<String> = outcome
        .summands
        .iter()
        .map(|s| if s.multiplicity == 1 { s.label.to_string() } else { format!("{}*{}", s.multiplicity, s.label) })
        .collect();
    if !outcome.member_exists {
        text.push_str("packet member does not exist\n");
    }
    text.push_str(&format!("q = {}  ({:?} labels)\n", outcome.q, outcome.convention));
    if let Some(d) = &outcome.descriptor {
        text.push_str(&format!("representation: {d}\n"));
    }
    text.push_str(&format!("invariants: {}\n", if terms.is_empty() { "0".into() } else { terms.join(" + ") }));
    text.push_str(&format!("dimension: {} = {}\n", outcome.dim_poly, outcome.dim));
    Report::table(json, vec!["label", "multiplicity", "dim"], rows).with_pretty(text)
}

fn packet(a: &GL2LocalType, b: &GL2LocalType) -> Report {
    let (plus, minus) = packets::endoscopic_packet(a, b);
    let case = packets::packet_case(a, b);
    let rows = [&plus, &minus]
        .iter()
        .map(|m| vec![m.sign.to_string(), m.description.clone(), m.cuspidal.to_string(), m.exists.to_string()])
        .collect();
    let json = json!({ "case": case, "plus": plus, "minus": minus });
    Report::table(json, vec!["sign", "description", "cuspidal", "exists"], rows)
}

fn counts_row(c: &NewformCounts) -> Vec<String> {
    [c.r, c.tau1, c.tau2, c.tau4, c.tau_plus, c.tau_minus, c.dim_s4].iter().map(u64::to_string).collect()
}

const COUNT_HEADER: [&str; 7] = ["r", "tau1", "tau2", "tau4", "tauPlus", "tauMinus", "dimS_r_Gamma0_4"];

fn dims(args: &DimsArgs) -> Result<(Report, i32), CliError> {
    if let Some(path) = &args.fixtures {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read fixtures {}: {e}", path.display())))?;
        let entries = modforms::parse_fixtures(&text)?;
        let mismatches = modforms::check_fixtures(&entries)?;
        let rows = mismatches
            .iter()
            .map(|m| vec![m.expected.r.to_string(), json!(m.expected).to_string(), json!(m.computed).to_string()])
            .collect();
        let json = json!({ "checked": entries.len(), "mismatches": mismatches });
        let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
        let text = format!("{} fixture rows checked, {} mismatches\n", entries.len(), mismatches.len());
        return Ok((Report::table(json, vec!["r", "expected", "computed"], rows).with_pretty(text), code));
    }
    let counts = args
        .range
        .weights()?
        .into_iter()
        .map(modforms::newform_counts)
        .collect::<Result<Vec<_>, _>>()?;
    let rows = counts.iter().map(counts_row).collect();
    Ok((Report::table(json!(counts), COUNT_HEADER.to_vec(), rows), EXIT_OK))
}

fn al_split(weights: &[u64]) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut json = Vec::new();
    for &r in weights {
        let c = modforms::newform_counts(r)?;
        let trace = modforms::al_split_trace(r)?;
        let oracle = modforms::al_split_oracle(r)?;
        rows.push(vec![
            r.to_string(),
            c.tau2.to_string(),
            trace.0.to_string(),
            trace.1.to_string(),
            oracle.0.to_string(),
            oracle.1.to_string(),
            (trace == oracle).to_string(),
        ]);
        json.push(json!({ "r": r, "tau2": c.tau2, "trace": [trace.0, trace.1], "oracle": [oracle.0, oracle.1], "agree": trace == oracle }));
    }
    Ok(Report::table(
        json!(json),
        vec!["r", "tau2", "trace_plus", "trace_minus", "oracle_plus", "oracle_minus", "agree"],
        rows,
    ))
}

/// One record of the cohomology JSON schema.
fn piece_record(w: Weight, piece: &CohomologyPiece, identity_key: &str, id: &IdentityCheck) -> Value {
    json!({
        "lambda": [w.lambda1, w.lambda2],
        "piece": piece.hodge_type.name(),
        "mult": piece.mult,
        "dim": piece.total_dim,
        "identities": { identity_key: id },
    })
}

fn pieces_report(w: Weight, pieces: [&CohomologyPiece; 2], key: &'static str, id: IdentityCheck) -> Report {
    let json = json!(pieces.iter().map(|p| piece_record(w, p, key, &id)).collect::<Vec<_>>());
    let rows = pieces
        .iter()
        .map(|p| vec![format!("{},{}", w.lambda1, w.lambda2), p.hodge_type.name().into(), p.mult.to_string(), p.total_dim.to_string()])
        .collect();
    let mut text = format!("lambda = {w}\n");
    for p in pieces {
        text.push_str(&format!("{} {}: {}  (dim {})\n", p.hodge_type.name(), p.hodge_type, pretty_mult(&p.mult), p.total_dim));
    }
    text.push_str(&format!("{key}: {} = {} ({})\n", id.lhs, id.rhs, if id.holds { "holds" } else { "FAILS" }));
    Report::table(json, vec!["lambda", "piece", "mult", "dim"], rows).with_pretty(text)
}

fn pretty_mult(m: &MultiplicityVector) -> String {
    if m.is_zero() {
        "0".into()
    } else {
        m.pretty()
    }
}

fn endo(args: &EndoArgs) -> Result<Report, CliError> {
    if let Some(q) = args.q {
        let pairs = args
            .pair
            .chunks(3)
            .map(|c| {
                let count = c[2].parse::<i64>().map_err(|_| CliError::Usage(format!("bad count {:?}", c[2])))?;
                Ok(PairCount { first: local_type(&c[0])?, second: local_type(&c[1])?, count })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let (h30, h21) = cohomology::endo_prime(q, &pairs)?;
        let mut rows = Vec::new();
        for (name, b) in [("H30", &h30), ("H21", &h21)] {
            for (label, m) in &b.labels {
                rows.push(vec![name.to_string(), label.clone(), m.to_string()]);
            }
            rows.push(vec![name.to_string(), "total".into(), b.dim.to_string()]);
        }
        let json = json!({ "q": q, "H30": h30, "H21": h21 });
        return Ok(Report::table(json, vec!["piece", "label", "value"], rows));
    }
    let Some(l) = &args.lambda else {
        return Err(CliError::Usage("give --lambda L1 L2 or --q Q with --pair".into()));
    };
    let w = Weight::new(l[0], l[1])?;
    let (h30, h21) = cohomology::endo_level2(w)?;
    let id = cohomology::endo_identity(w)?;
    Ok(pieces_report(w, [&h30, &h21], "endoscopic_difference", id))
}

fn sk(lambda: u64) -> Result<Report, CliError> {
    let w = Weight::parallel(lambda);
    let (h30, h11) = cohomology::sk_level2(w)?;
    let id = cohomology::sk_identity(w)?;
    Ok(pieces_report(w, [&h30, &h11], "saito_kurokawa_sum", id))
}

/// Reads `1,-1,2` coefficient lists or a polynomial in `X` such as `1 - 24X + 2048X^2`.
fn euler_factor(p: u64, text: &str) -> Result<EulerFactor, CliError> {
    let poly = if text.contains('X') {
        Polynomial::parse(text, 'X')?
    } else {
        let coeffs = text
            .split(',')
            .map(|c| c.trim().parse::<num_rational::BigRational>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("bad coefficient list {text:?}")))?;
        Polynomial::new(coeffs)
    };
    Ok(EulerFactor::from_polynomial(p, &poly)?)
}

fn factor_report(e: &EulerFactor) -> Report {
    let json = json!({ "p": e.p, "degree": e.degree(), "coefficients": e.coeffs, "rational": e.rational_polynomial() });
    let rows = e.coeffs.iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]).collect();
    Report::table(json, vec!["power", "coefficient"], rows).with_pretty(format!("{e}\n"))
}

fn rational_report(p: u64, r: &RationalFactor) -> Report {
    let json = json!({
        "p": p,
        "numerator": r.numerator,
        "denominator": r.denominator,
        "inversePolynomial": r.is_inverse_polynomial(),
    });
    let rows = vec![
        vec!["numerator".into(), r.numerator.display_with("X")],
        vec!["denominator".into(), r.denominator.display_with("X")],
    ];
    Report::table(json, vec!["part", "polynomial"], rows).with_pretty(format!("{r}\n"))
}

fn lfactor(c: &LfactorCommand) -> Result<Report, CliError> {
    match c {
        LfactorCommand::Spinor { p, e1, e2 } => {
            Ok(factor_report(&lfactors::spinor_product(&euler_factor(*p, e1)?, &euler_factor(*p, e2)?)?))
        }
        LfactorCommand::Shift { p, e, t, surd } => {
            let mode = if *surd { ShiftMode::Surd } else { ShiftMode::Rational };
            Ok(factor_report(&lfactors::shift(&euler_factor(*p, e)?, *t, mode)?))
        }
        LfactorCommand::Sk { p, k, eps, in_m, e } => {
            let r = lfactors::sk_classical_factor(*p, *k, *eps, *in_m, &euler_factor(*p, e)?)?;
            Ok(rational_report(*p, &r))
        }
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
