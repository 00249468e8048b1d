//! The `check` identity suite. Items are enumerated in a fixed order,
//! evaluated on a pool of the requested size, and reported in that order,
//! so the report is the same for every `--jobs`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use parahoric::cohomology::{self, Weight};
use parahoric::modforms::{self, dim_cusp};
use parahoric::packets::{endo_sample, restrict_endo};
use parahoric::repdims::{catalogue, difference_law_rhs, evaluate_row_dim, paired_row_difference, EndoCase, RowRef, Sign};

use crate::{CliError, Report, EXIT_OK, EXIT_VIOLATION};

#[derive(Debug, Clone)]
enum Item {
    OldNew(u64),
    AlSplit(u64),
    DifferenceLaw(EndoCase),
    EvenRow(EndoCase, Sign),
    EndoIdentity(Weight),
    EndoVanishing(u64),
    PrimeLevelSum(Weight),
    SkIdentity(u64),
}

#[derive(Debug, Clone, Serialize)]
struct Line {
    check: &'static str,
    params: String,
    lhs: Value,
    rhs: Value,
    holds: bool,
}

fn items(rmax: u64) -> Vec<Item> {
    let mut out = Vec::new();
    for r in (2..=rmax).step_by(2) {
        out.push(Item::OldNew(r));
    }
    for r in (4..=rmax).step_by(2) {
        out.push(Item::AlSplit(r));
    }
    for case in EndoCase::ALL {
        out.push(Item::DifferenceLaw(case));
    }
    for case in EndoCase::ALL {
        for sign in [Sign::Plus, Sign::Minus] {
            let has_even = catalogue().endo_row(case, sign).is_some_and(|r| r.even.is_some());
            if has_even && endo_sample(case, 2).is_some() {
                out.push(Item::EvenRow(case, sign));
            }
        }
    }
    let weights: Vec<Weight> = (0..=rmax)
        .flat_map(|l1| (0..=l1).map(move |l2| Weight { lambda1: l1, lambda2: l2 }))
        .filter(|w| w.r1() <= rmax)
        .collect();
    out.extend(weights.iter().map(|&w| Item::EndoIdentity(w)));
    out.extend(weights.iter().filter(|w| w.is_parallel()).map(|w| Item::EndoVanishing(w.lambda1)));
    out.extend(weights.iter().filter(|w| w.has_even_parity()).map(|&w| Item::PrimeLevelSum(w)));
    out.extend((0..=rmax).filter(|l| 2 * l + 4 <= rmax).map(Item::SkIdentity));
    out
}

fn line(check: &'static str, params: String, lhs: impl Serialize, rhs: impl Serialize) -> Line {
    let (lhs, rhs) = (json!(lhs), json!(rhs));
    let holds = lhs == rhs;
    Line { check, params, lhs, rhs, holds }
}

fn eval(item: &Item) -> Result<Line, parahoric::Error> {
    Ok(match item {
        Item::OldNew(r) => {
            let (t1, t2, t4) = modforms::new_dimensions(*r)?;
            let k = *r as i64;
            line("old_new", format!("r={r}"), [dim_cusp(2, k)?, dim_cusp(4, k)?], [2 * t1 + t2, 3 * t1 + 2 * t2 + t4])
        }
        Item::AlSplit(r) => {
            let c = modforms::newform_counts(*r)?;
            line("al_split", format!("r={r}"), [c.tau_plus, c.tau_minus], modforms::al_split_oracle(*r)?)
        }
        Item::DifferenceLaw(case) => line(
            "difference_law",
            format!("{case:?}"),
            paired_row_difference(*case)?.to_string(),
            difference_law_rhs(*case).to_string(),
        ),
        Item::EvenRow(case, sign) => {
            let (a, b) = endo_sample(*case, 2).expect("filtered when enumerating");
            let out = restrict_endo(&a, &b, *sign, 2)?;
            line(
                "q2_row",
                format!("{case:?}{sign}"),
                out.multiplicities()?.total_dimension(),
                evaluate_row_dim(RowRef::Endo(*case, *sign), 2)?,
            )
        }
        Item::EndoIdentity(w) => {
            let id = cohomology::endo_identity(*w)?;
            line("endoscopic_difference", format!("lambda={},{}", w.lambda1, w.lambda2), id.lhs, id.rhs)
        }
        Item::EndoVanishing(l) => {
            let (h30, h21) = cohomology::endo_level2(Weight::parallel(*l))?;
            line("endo_vanishing", format!("lambda={l},{l}"), h30.total_dim + h21.total_dim, 0)
        }
        Item::PrimeLevelSum(w) => {
            let (h30, h21) = cohomology::endo_level2(*w)?;
            let (p30, p21) = cohomology::endo_prime(2, &cohomology::level2_pair_counts(*w)?)?;
            line(
                "prime_level_sum",
                format!("lambda={},{}", w.lambda1, w.lambda2),
                [p30.dim, p21.dim],
                [h30.total_dim, h21.total_dim],
            )
        }
        Item::SkIdentity(l) => {
            let id = cohomology::sk_identity(Weight::parallel(*l))?;
            line("saito_kurokawa_sum", format!("lambda={l},{l}"), id.lhs, id.rhs)
        }
    })
}

fn evaluate(item: &Item) -> Line {
    eval(item).unwrap_or_else(|e| Line {
        check: "error",
        params: format!("{item:?}"),
        lhs: json!(e.to_string()),
        rhs: Value::Null,
        holds: false,
    })
}

pub(crate) fn run(rmax: u64, jobs: usize) -> Result<(Report, i32), CliError> {
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    if rmax > modforms::newforms::MAX_WEIGHT {
        return Err(CliError::Usage(format!("--rmax is at most {}", modforms::newforms::MAX_WEIGHT)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let items = items(rmax);
    let lines: Vec<Line> = pool.install(|| items.par_iter().map(evaluate).collect());
    let violations: Vec<&Line> = lines.iter().filter(|l| !l.holds).collect();
    let code = if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    let json = json!({
        "rmax": rmax,
        "total": lines.len(),
        "passed": lines.len() - violations.len(),
        "violations": violations,
        "checks": lines,
    });
    let rows = lines
        .iter()
        .map(|l| vec![l.check.to_string(), l.params.clone(), l.lhs.to_string(), l.rhs.to_string(), l.holds.to_string()])
        .collect();
    let mut text = String::new();
    let mut families: Vec<&'static str> = Vec::new();
    for l in &lines {
        if !families.contains(&l.check) {
            families.push(l.check);
        }
    }
    for f in families {
        let of: Vec<&Line> = lines.iter().filter(|l| l.check == f).collect();
        let bad = of.iter().filter(|l| !l.holds).count();
        text.push_str(&format!("{f:<24} {:>5} checked  {bad:>3} violated\n", of.len()));
    }
    for v in &violations {
        text.push_str(&format!("VIOLATION {} {}: {} vs {}\n", v.check, v.params, v.lhs, v.rhs));
    }
    text.push_str(&format!("{} of {} checks hold up to r = {rmax}\n", lines.len() - violations.len(), lines.len()));
    Ok((Report::table(json, vec!["check", "params", "lhs", "rhs", "holds"], rows).with_pretty(text), code))
}
