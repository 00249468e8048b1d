//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use parahoric::cohomology::{self, Weight};
use parahoric::lfactors::{self, EulerFactor, HalfInteger, ShiftMode};
use parahoric::modforms::{self, dim_cusp, eta_product};
use parahoric::packets::{endo_sample, restrict_endo, restrict_sk, sk_sample, GL2LocalType, SKLocalInput};
use parahoric::poly::Polynomial;
use parahoric::repdims::{self, catalogue, EndoCase, IntPolynomial, RowRef, SigmaS, Sign, SkSigma};
use parahoric::symgroup::{self, ClassFunction, MultiplicityVector, Sp4F2Irrep as S};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn dictionary() -> Outcome {
    let mut dims: Vec<u64> = S::ALL.iter().map(|r| symgroup::irrep_dimension(&r.partition())).collect();
    ensure(dims == vec![1, 9, 5, 5, 16, 1, 9, 5, 5, 10, 10], || format!("dims {dims:?}"))?;
    for r in S::ALL {
        ensure(r.dim() == symgroup::irrep_dimension(&r.partition()), || format!("{} dim", r.label()))?;
    }
    let parts = e(symgroup::partitions_of(6))?;
    let sq: u64 = parts.iter().map(|p| symgroup::irrep_dimension(p).pow(2)).sum();
    ensure(sq == 720, || format!("sum of squares {sq}"))?;
    let chars: Vec<ClassFunction> = parts.iter().map(|p| ClassFunction::character(p).unwrap()).collect();
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let ip = e(a.inner_product(b))?;
            let want = BigRational::from_integer(BigInt::from((i == j) as i64));
            ensure(ip == want, || format!("row orthogonality ({i},{j}) = {ip}"))?;
        }
    }
    for (x, mu) in parts.iter().enumerate() {
        for y in 0..parts.len() {
            let s: i128 = chars.iter().map(|c| c.values()[x] as i128 * c.values()[y] as i128).sum();
            let want = if x == y { mu.centralizer_order() as i128 } else { 0 };
            ensure(s == want, || format!("column orthogonality ({x},{y}) = {s}"))?;
        }
    }
    dims.sort();
    Ok(format!("dims {dims:?}, sum of squares 720, 11x11 orthogonality"))
}

fn q2_tables() -> Outcome {
    let mut rows = 0;
    for case in EndoCase::ALL {
        for sign in [Sign::Plus, Sign::Minus] {
            let Some(row) = catalogue().endo_row(case, sign) else { continue };
            if row.even.is_none() {
                continue;
            }
            let printed = e(repdims::evaluate_row_dim(RowRef::Endo(case, sign), 2))?;
            let Some((a, b)) = endo_sample(case, 2) else {
                // No instance at q = 2; the polynomial still enters the difference law.
                continue;
            };
            let out = e(restrict_endo(&a, &b, sign, 2))?;
            let s6 = e(out.multiplicities())?.total_dimension();
            ensure(s6 == printed, || format!("{case:?}{sign}: {s6} != {printed}"))?;
            rows += 1;
        }
    }
    for sigma in [SkSigma::Ps, SkSigma::St, SkSigma::Xu, SkSigma::Xt, SkSigma::Cusp] {
        for s in [SigmaS::One, SigmaS::St] {
            let Some(input) = sk_sample(sigma, s, 2) else { continue };
            let printed = e(repdims::evaluate_row_dim(RowRef::Sk(sigma, s), 2))?;
            let s6 = e(e(restrict_sk(&input, 2))?.multiplicities())?.total_dimension();
            ensure(s6 == printed, || format!("{sigma:?}/{s:?}: {s6} != {printed}"))?;
            rows += 1;
        }
    }
    let st = GL2LocalType::steinberg();
    let xu = GL2LocalType::xi_u_steinberg();
    let sph = GL2LocalType::spherical();
    let m = |a: &GL2LocalType, b: &GL2LocalType| restrict_endo(a, b, Sign::Plus, 2).unwrap().multiplicities().unwrap();
    ensure(m(&st, &st) == MultiplicityVector::from_pairs(&[(S::Theta1, 1), (S::Theta4, 1)]), || "St,St".into())?;
    ensure(m(&st, &xu) == MultiplicityVector::from_pairs(&[(S::Theta3, 1), (S::Theta4, 1)]), || "St,xuSt".into())?;
    let chi1 = MultiplicityVector::from_pairs(&[(S::Theta0, 1), (S::Theta1, 2), (S::Theta2, 1), (S::Theta3, 1), (S::Theta4, 1)]);
    ensure(m(&sph, &sph) == chi1 && chi1.total_dimension() == 45, || "chi1(0,0)".into())?;
    let chi6 = e(e(restrict_sk(&SKLocalInput { sigma: sph, in_s: false }, 2))?.multiplicities())?;
    ensure(chi6 == MultiplicityVector::from_pairs(&[(S::Theta0, 1), (S::Theta1, 1), (S::Theta2, 1)]), || "chi6(0)".into())?;
    Ok(format!("{rows} even-q rows; 25 = 9+16, 21 = 5+16, 45 = 1+18+5+5+16, 15 = 1+9+5"))
}

fn difference_law() -> Outcome {
    let five = e(IntPolynomial::parse("q^2+1"))?;
    for case in EndoCase::ALL {
        let diff = e(repdims::paired_row_difference(case))?;
        let rhs = repdims::difference_law_rhs(case);
        ensure(diff == rhs, || format!("{case:?}: {diff} != {rhs}"))?;
        let at2 = e(diff.eval(2))?;
        ensure(e(five.eval(2))? == 5 && at2 % 5 == 0, || format!("{case:?}: {at2} at q = 2"))?;
    }
    Ok("9 paired rows, identity in Z[q], factor 5 at q = 2".into())
}

fn newforms() -> Outcome {
    for k in (2..=100u64).step_by(2) {
        let (t1, t2, t4) = e(modforms::new_dimensions(k))?;
        ensure(e(dim_cusp(2, k as i64))? == 2 * t1 + t2, || format!("level 2 at k = {k}"))?;
        ensure(e(dim_cusp(4, k as i64))? == 3 * t1 + 2 * t2 + t4, || format!("level 4 at k = {k}"))?;
    }
    let delta = eta_product(&[(1, 24)], 10).shift(1);
    let delta2 = eta_product(&[(1, 8), (2, 8)], 10).shift(1);
    let a2 = |f: &modforms::QExpansion| f.coefficient(2).unwrap().clone();
    ensure(a2(&delta) == BigRational::from_integer((-24).into()), || format!("a2(Delta) = {}", a2(&delta)))?;
    ensure(a2(&delta2) == BigRational::from_integer((-8).into()), || format!("a2(Delta2) = {}", a2(&delta2)))?;
    for r in (4..=60).step_by(2) {
        let t = e(modforms::al_split_trace(r))?;
        let o = e(modforms::al_split_oracle(r))?;
        ensure(t == o, || format!("r = {r}: trace {t:?}, oracle {o:?}"))?;
    }
    Ok("old/new to k = 100, a2(Delta) = -24, a2(Delta2) = -8, split agrees for 4 <= r <= 60".into())
}

fn endo_example() -> Outcome {
    let w = e(Weight::new(7, 1))?;
    let (h30, h21) = e(cohomology::endo_level2(w))?;
    ensure(h30.is_zero(), || format!("H30 = {}", h30.mult))?;
    let want = MultiplicityVector::from_pairs(&[(S::Chi12, 1), (S::Theta1, 1), (S::Theta3, 1), (S::Theta4, 1)]);
    ensure(h21.mult == want && h21.total_dim == 40, || format!("H21 = {} ({})", h21.mult, h21.total_dim))?;
    let rhs = 5 * e(dim_cusp(4, 12))? * e(dim_cusp(4, 8))?;
    let id = e(cohomology::endo_identity(w))?;
    ensure(id.holds && id.lhs == 40 && rhs == 40, || format!("{id:?}, closed form {rhs}"))?;
    Ok(format!("H30 = 0, H21 = {} (dim 40), 40 = 5*4*2", h21.mult))
}

fn sk_example() -> Outcome {
    let w = Weight::parallel(5);
    let (h30, h11) = e(cohomology::sk_level2(w))?;
    ensure(h30.mult == MultiplicityVector::from_pairs(&[(S::Theta1, 1), (S::Theta2, 1)]) && h30.total_dim == 14, || format!("H30 = {}", h30.mult))?;
    ensure(
        h11.mult == MultiplicityVector::from_pairs(&[(S::Chi8, 1), (S::Theta5, 1), (S::Theta3, 1)]) && h11.total_dim == 11,
        || format!("H11 = {}", h11.mult),
    )?;
    let id = e(cohomology::sk_identity(w))?;
    ensure(id.holds && id.lhs == 25 && e(dim_cusp(4, 14))? == 5, || format!("{id:?}"))?;
    Ok("H30 = theta1 + theta2 (14), H11 = chi8(1) + theta5 + theta3 (11), 25 = 5*5".into())
}

fn weights(r1_max: u64) -> Vec<Weight> {
    (0..=r1_max)
        .flat_map(|a| (0..=a).map(move |b| Weight { lambda1: a, lambda2: b }))
        .filter(|w| w.r1() <= r1_max)
        .collect()
}

fn sweeps() -> Outcome {
    let ws = weights(60);
    for &w in &ws {
        let id = e(cohomology::endo_identity(w))?;
        ensure(id.holds, || format!("{w}: {} != {}", id.lhs, id.rhs))?;
    }
    let mut sk = 0;
    for l in (0..).take_while(|l| 2 * l + 4 <= 60) {
        let id = e(cohomology::sk_identity(Weight::parallel(l)))?;
        ensure(id.holds, || format!("parallel {l}: {} != {}", id.lhs, id.rhs))?;
        let (h30, h21) = e(cohomology::endo_level2(Weight::parallel(l)))?;
        ensure(h30.is_zero() && h21.is_zero(), || format!("endoscopic part at parallel {l}"))?;
        ensure(cohomology::vanishing_flags(Weight::parallel(l)).endo_h3_vanishes_at_level2, || "flag".into())?;
        sk += 1;
    }
    Ok(format!("{} endoscopic weights, {sk} parallel weights, parallel endoscopic part vanishes", ws.len()))
}

fn prime_vs_level2() -> Outcome {
    let mut n = 0;
    for w in weights(40).into_iter().filter(|w| w.r2() <= 40) {
        let (h30, h21) = e(cohomology::endo_level2(w))?;
        let (p30, p21) = e(cohomology::endo_prime(2, &e(cohomology::level2_pair_counts(w))?))?;
        ensure((p30.dim, p21.dim) == (h30.total_dim, h21.total_dim), || format!("{w}: totals differ"))?;
        ensure(p30.mult == Some(h30.mult) && p21.mult == Some(h21.mult), || format!("{w}: vectors differ"))?;
        n += 1;
    }
    Ok(format!("{n} weights with r1, r2 <= 40 agree in totals and S_6 vectors"))
}

fn lfactor_identities() -> Outcome {
    let primes = [2u64, 3, 5, 7, 11];
    for &p in &primes {
        let one = e(EulerFactor::one(p))?;
        let f = e(EulerFactor::from_ints(p, &[1, -3, 7]))?;
        let g = e(EulerFactor::from_ints(p, &[1, 5, -2]))?;
        let fg = e(lfactors::spinor_product(&f, &g))?;
        ensure(fg.degree() == 4 && fg == e(lfactors::spinor_product(&g, &f))?, || format!("degree/commutativity at {p}"))?;
        ensure(e(lfactors::spinor_product(&f, &one))? == f, || format!("unit at {p}"))?;
        for steps in -5..=5 {
            let t = HalfInteger { half_steps: steps };
            let s = e(lfactors::shift(&fg, t, ShiftMode::Surd))?;
            let back = e(lfactors::shift(&s, HalfInteger { half_steps: -steps }, ShiftMode::Surd))?;
            ensure(back == fg, || format!("shift round trip at {p}, t = {t}"))?;
        }
        for k in 3..=24i64 {
            let c = e(lfactors::sk_correction(p, k, -1))?;
            let pk1 = num_traits::Pow::pow(BigInt::from(p), (k - 1) as u32);
            let want = Polynomial::new(vec![BigRational::from_integer(1.into()), BigRational::from_integer(-pk1)]);
            ensure(c.is_polynomial() && c.numerator == want, || format!("correction at p = {p}, k = {k}: {c}"))?;
        }
    }
    let ex = e(lfactors::sk_correction(2, 10, -1))?;
    ensure(ex.numerator == Polynomial::from_ints(&[1, -512]), || format!("{ex}"))?;
    Ok("spinor degree and unit laws, eps = -1 cancellation for k <= 24, shift round trips".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_parahoric");
    let run = |jobs: &str| {
        Command::new(bin)
            .args(["check", "--rmax", "40", "--jobs", jobs, "--format", "json"])
            .output()
            .map_err(|x| x.to_string())
    };
    let (a, b) = (run("1")?, run("8")?);
    ensure(a.status.code() == Some(0) && b.status.code() == Some(0), || format!("exit {:?} / {:?}", a.status, b.status))?;
    ensure(a.stdout == b.stdout, || "reports differ between --jobs 1 and --jobs 8".into())?;
    Ok(format!("{} identical bytes from two processes", a.stdout.len()))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "Sp(4,F_2) dictionary and S_6 character table", limit: Some(Duration::from_secs(1)), run: dictionary },
        Criterion { id: 2, title: "q = 2 consistency of the restriction tables", limit: Some(Duration::from_secs(1)), run: q2_tables },
        Criterion { id: 3, title: "paired-row difference law", limit: None, run: difference_law },
        Criterion { id: 4, title: "newform engine", limit: Some(Duration::from_secs(30)), run: newforms },
        Criterion { id: 5, title: "endoscopic example lambda = (7,1)", limit: None, run: endo_example },
        Criterion { id: 6, title: "Saito-Kurokawa example lambda = (5,5)", limit: None, run: sk_example },
        Criterion { id: 7, title: "identity sweeps", limit: Some(Duration::from_secs(120)), run: sweeps },
        Criterion { id: 8, title: "prime-level sum against level-2 formula", limit: None, run: prime_vs_level2 },
        Criterion { id: 9, title: "L-factor identities", limit: Some(Duration::from_secs(1)), run: lfactor_identities },
        Criterion { id: 10, title: "check determinism across --jobs", limit: None, run: determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {} ({elapsed:.2?}): {detail}", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({elapsed:.2?}): {why}", c.id, c.title);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
