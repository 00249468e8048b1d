use num_bigint::BigInt;
use num_rational::BigRational;
use parahoric::modforms::*;
use proptest::prelude::*;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn ramanujan_tau_from_eta_product() {
    // Independent check: q * prod (1 - q^n)^24 by repeated multiplication.
    let p = 12;
    let mut prod = QExpansion::one(p);
    for n in 1..=p {
        let mut f = vec![0i64; p + 1];
        f[0] = 1;
        f[n] = -1;
        prod = prod.mul(&QExpansion::from_ints(&f, p).pow(24));
    }
    let delta = prod.shift(1).truncate(p).unwrap();
    assert_eq!(delta, standard_series(StandardSeries::Delta, p));
    assert_eq!(delta.coefficient(2).unwrap(), &r(-24));
    let d2 = standard_series(StandardSeries::Delta2, p);
    assert_eq!(d2.coefficient(2).unwrap(), &r(-8));
    assert_eq!(d2, eta_product(&[(1, 8), (2, 8)], p - 1).shift(1));
}

#[test]
fn old_new_bookkeeping_to_weight_100() {
    for k in (2..=100u64).step_by(2) {
        let (t1, t2, t4) = new_dimensions(k).unwrap();
        assert_eq!(dim_cusp(2, k as i64).unwrap(), 2 * t1 + t2, "k={k}");
        assert_eq!(dim_cusp(4, k as i64).unwrap(), 3 * t1 + 2 * t2 + t4, "k={k}");
    }
}

#[test]
fn trace_difference_divisibility() {
    for k in (8..=60i64).step_by(2) {
        let d = hecke_trace(HeckeOperator::U2Level2, k).unwrap() - hecke_trace(HeckeOperator::T2Level1, k).unwrap();
        let unit = BigInt::from(1) << (k / 2 - 1) as usize;
        assert_eq!(d % unit, BigInt::from(0), "k={k}");
    }
}

#[test]
fn split_methods_agree_to_60() {
    for rr in (4..=60u64).step_by(2) {
        let c = newform_counts(rr).unwrap();
        assert_eq!((c.tau_plus, c.tau_minus), al_split_oracle(rr).unwrap(), "r={rr}");
        assert_eq!(c.tau_plus + c.tau_minus, c.tau2);
        assert_eq!(c.dim_s4, 3 * c.tau1 + 2 * c.tau2 + c.tau4);
    }
}

#[test]
fn shipped_fixtures_reproduce() {
    let json = include_str!("../data/newform_fixtures.json");
    let rows = parse_fixtures(json).unwrap();
    assert!(rows.len() >= 20);
    assert!(check_fixtures(&rows).unwrap().is_empty());
}

#[test]
fn reading_past_precision_is_an_error() {
    let f = QExpansion::from_ints(&[1, 2, 3], 2);
    assert!(f.coefficient(3).is_err());
    assert!(f.truncate(5).is_err());
}

fn series(max: usize) -> impl Strategy<Value = QExpansion> {
    (0..max).prop_flat_map(|p| proptest::collection::vec(-50i64..50, p + 1).prop_map(move |c| QExpansion::from_ints(&c, p)))
}

proptest! {
    #[test]
    fn products_commute_and_truncate(a in series(10), b in series(10)) {
        let ab = a.mul(&b);
        prop_assert_eq!(&ab, &b.mul(&a));
        prop_assert_eq!(ab.precision(), a.precision().min(b.precision()));
        prop_assert!(ab.is_integral());
    }

    #[test]
    fn distributive(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_matrix_stable_under_extra_precision(k in (4i64..=30).prop_map(|k| 2 * k), level2 in any::<bool>()) {
        let op = if level2 { HeckeOperator::U2Level2 } else { HeckeOperator::T2Level1 };
        let d = dim_cusp(op.level(), k).unwrap();
        let p = default_precision(d);
        prop_assert_eq!(hecke_matrix(op, k, p).unwrap(), hecke_matrix(op, k, p + 20).unwrap());
    }

    #[test]
    fn basis_size_and_leading_terms(k in (2i64..=30).prop_map(|k| 2 * k), level in 1u64..=2) {
        let d = dim_cusp(level, k).unwrap();
        let b = cusp_basis(level, k, default_precision(d)).unwrap();
        prop_assert_eq!(b.len() as u64, d);
        for (i, f) in b.iter().enumerate() {
            prop_assert_eq!(f.valuation(), Some(i + 1));
            prop_assert!(f.is_integral());
        }
    }
}
