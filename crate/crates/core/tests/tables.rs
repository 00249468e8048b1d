use parahoric::packets::*;
use parahoric::repdims::*;
use parahoric::symgroup::Sp4F2Irrep as S;
use proptest::prelude::*;

const QS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

#[test]
fn even_rows_match_s6_dimensions_at_q2() {
    let mut checked = 0;
    for case in EndoCase::ALL {
        for sign in [Sign::Plus, Sign::Minus] {
            let Some(row) = catalogue().endo_row(case, sign) else { continue };
            if row.even.is_none() {
                continue;
            }
            let Some((a, b)) = endo_sample(case, 2) else { continue };
            let out = restrict_endo(&a, &b, sign, 2).unwrap();
            let printed = evaluate_row_dim(RowRef::Endo(case, sign), 2).unwrap();
            assert_eq!(out.dim, printed, "{case:?} {sign}");
            assert_eq!(out.multiplicities().unwrap().total_dimension(), printed, "{case:?} {sign}");
            checked += 1;
        }
    }
    assert!(checked >= 11, "only {checked} rows checked");
}

#[test]
fn saito_kurokawa_rows_match_at_q2() {
    for sigma in [SkSigma::Ps, SkSigma::St, SkSigma::Xu, SkSigma::Xt, SkSigma::Cusp] {
        for s in [SigmaS::One, SigmaS::St] {
            let Some(input) = sk_sample(sigma, s, 2) else { continue };
            let out = restrict_sk(&input, 2).unwrap();
            assert_eq!(out.dim, evaluate_row_dim(RowRef::Sk(sigma, s), 2).unwrap());
            assert_eq!(out.multiplicities().unwrap().total_dimension(), out.dim);
        }
    }
}

#[test]
fn quoted_q2_sums() {
    let st = GL2LocalType::steinberg();
    let xu = GL2LocalType::xi_u_steinberg();
    let m = restrict_endo(&st, &st, Sign::Plus, 2).unwrap().multiplicities().unwrap();
    assert_eq!(m, parahoric::symgroup::MultiplicityVector::from_pairs(&[(S::Theta1, 1), (S::Theta4, 1)]));
    assert_eq!(m.total_dimension(), 25);
    assert_eq!(restrict_endo(&st, &xu, Sign::Plus, 2).unwrap().multiplicities().unwrap().total_dimension(), 21);
    let sph = GL2LocalType::spherical();
    assert_eq!(restrict_endo(&sph, &sph, Sign::Plus, 2).unwrap().dim, 45);
    let sk = restrict_sk(&SKLocalInput { sigma: sph, in_s: false }, 2).unwrap();
    assert_eq!(sk.multiplicities().unwrap().total_dimension(), 15);
}

#[test]
fn difference_law_is_a_polynomial_identity() {
    for case in EndoCase::ALL {
        let diff = paired_row_difference(case).unwrap();
        assert_eq!(diff, difference_law_rhs(case), "{case:?}");
        // At q = 2 the common factor is q^2 + 1 = 5.
        let at2 = diff.eval(2).unwrap();
        assert_eq!(at2 % 5, 0, "{case:?}");
    }
}

#[test]
fn odd_q_rows_sum_to_printed_dimension() {
    for q in [3, 5, 7, 9] {
        for case in EndoCase::ALL {
            for sign in [Sign::Plus, Sign::Minus] {
                if catalogue().endo_row(case, sign).is_none() {
                    continue;
                }
                let Some((a, b)) = endo_sample(case, q) else { continue };
                let out = restrict_endo(&a, &b, sign, q).unwrap();
                assert_eq!(out.summand_dim_poly().unwrap().eval(q).unwrap(), out.dim);
                assert_eq!(out.convention, Convention::Shinoda);
            }
        }
    }
}

#[test]
fn without_invariants_restriction_vanishes() {
    let deep = GL2LocalType::positive_depth("a");
    let st = GL2LocalType::steinberg();
    for q in [2, 3, 5] {
        assert!(restrict_endo(&deep, &st, Sign::Plus, q).unwrap().is_zero());
    }
    assert!(restrict_endo(&st, &st, Sign::Plus, 6).is_err());
}

/// Local types with trivial central character and invariants under the
/// first principal congruence subgroup.
fn local_type(q: u64) -> impl Strategy<Value = GL2LocalType> {
    let cusp = (1..=q).prop_filter_map("cuspidal index", move |m| {
        let l = m * (q - 1);
        (l % (q + 1) != 0).then(|| GL2LocalType::depth_zero(l))
    });
    prop_oneof![
        Just(GL2LocalType::spherical()),
        (0..q - 1).prop_map(move |k| GL2LocalType::PrincipalSeries(Character::Tame(k), Character::Tame((q - 1 - k) % (q - 1)))),
        Just(GL2LocalType::steinberg()),
        Just(GL2LocalType::xi_u_steinberg()),
        Just(if q % 2 == 1 { GL2LocalType::xi_t_steinberg() } else { GL2LocalType::steinberg() }),
        cusp,
    ]
}

fn q_and_pair() -> impl Strategy<Value = (u64, GL2LocalType, GL2LocalType)> {
    proptest::sample::select(QS.to_vec()).prop_flat_map(|q| (Just(q), local_type(q), local_type(q)))
}

proptest! {
    #[test]
    fn packet_difference_equals_k1_dimensions((q, a, b) in q_and_pair()) {
        let plus = restrict_endo(&a, &b, Sign::Plus, q).unwrap();
        let minus = restrict_endo(&a, &b, Sign::Minus, q).unwrap();
        let expected = (q * q + 1) * a.k1_invariant_dim(q) * b.k1_invariant_dim(q);
        prop_assert_eq!(plus.dim - minus.dim, expected);
    }

    #[test]
    fn restriction_is_symmetric((q, a, b) in q_and_pair()) {
        for sign in [Sign::Plus, Sign::Minus] {
            let ab = restrict_endo(&a, &b, sign, q).unwrap();
            let ba = restrict_endo(&b, &a, sign, q).unwrap();
            prop_assert_eq!(ab.dim, ba.dim);
            let mut x: Vec<String> = ab.summands.iter().map(|s| format!("{}x{}", s.multiplicity, s.label)).collect();
            let mut y: Vec<String> = ba.summands.iter().map(|s| format!("{}x{}", s.multiplicity, s.label)).collect();
            x.sort();
            y.sort();
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn at_q2_dimension_is_s6_dimension((a, b) in (local_type(2), local_type(2)), plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let out = restrict_endo(&a, &b, sign, 2).unwrap();
        prop_assert_eq!(out.multiplicities().unwrap().total_dimension(), out.dim);
    }

    #[test]
    fn local_type_text_round_trips((q, a, _b) in q_and_pair()) {
        let _ = q;
        let text = a.to_string();
        prop_assert_eq!(text.parse::<GL2LocalType>().unwrap(), a);
    }

    #[test]
    fn dimension_polynomials_are_nonnegative(q in proptest::sample::select(QS.to_vec())) {
        for case in EndoCase::ALL {
            for sign in [Sign::Plus, Sign::Minus] {
                if catalogue().endo_row(case, sign).is_some() {
                    prop_assert!(evaluate_row_dim(RowRef::Endo(case, sign), q).is_ok());
                }
            }
        }
    }
}
