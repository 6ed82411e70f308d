use apery_core::arith::binom_ext;
use apery_core::coeff::{
    a_lambda_coeff, a_lambda_coeff_in_window, apery_sum, b_sum, wide_k_window, yd_sum, z_sum,
};
use apery_core::series::{expand, family_denominator, mixed_constant_term, LaurentPoly};
use apery_core::{Error, FamilySpec, MultiIndex, NamedSequence, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn mi(v: &[i64]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

/// Apéry numbers straight from the binomial sum over `0 ≤ k ≤ n`.
fn apery_direct(n: i64) -> BigInt {
    (0..=n)
        .map(|k| {
            let a = binom_ext(n, k);
            let b = binom_ext(n + k, k);
            &a * &a * &b * &b
        })
        .sum()
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1_usize..=3, 1..=3)
        .prop_filter("at most four variables", |v| v.iter().sum::<usize>() <= 4)
        .prop_map(|v| Partition::new(v).unwrap())
}

#[test]
fn named_sequence_values() {
    let apery: Vec<BigInt> = (0..6).map(apery_sum).collect();
    assert_eq!(apery, [1, 5, 73, 1445, 33001, 819005].map(BigInt::from));
    let b: Vec<BigInt> = (0..5).map(b_sum).collect();
    assert_eq!(b, [1, 3, 19, 147, 1251].map(BigInt::from));
    let franel: Vec<BigInt> = (0..6)
        .map(|n| yd_sum(&MultiIndex::diagonal(3, n)).unwrap())
        .collect();
    assert_eq!(franel, [1, 2, 10, 56, 346, 2252].map(BigInt::from));
    let z: Vec<BigInt> = (0..5).map(z_sum).collect();
    assert_eq!(z, [1, -3, 9, -3, -279].map(BigInt::from));
}

#[test]
fn apery_diagonal_matches_binomial_sum() {
    let spec = NamedSequence::AperyA.spec();
    for n in 0..=15 {
        assert_eq!(
            a_lambda_coeff(&spec, &MultiIndex::diagonal(4, n)).unwrap(),
            apery_direct(n)
        );
        assert_eq!(apery_sum(n), apery_direct(n));
    }
}

#[test]
fn reflection_of_apery_numbers() {
    for n in 1..=25 {
        assert_eq!(apery_sum(-n), apery_direct(n - 1), "n={n}");
    }
}

#[test]
fn all_ones_with_negative_index_is_rejected() {
    let spec = FamilySpec::from_parts(&[1, 1], 1);
    assert!(matches!(
        a_lambda_coeff(&spec, &mi(&[-1, 2])),
        Err(Error::InfiniteSupport { .. })
    ));
}

#[test]
fn apery_mixed_constant_term_agrees() {
    let forms = LaurentPoly::apery_forms();
    let spec = NamedSequence::AperyA.spec();
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                for d in 0..=2 {
                    let n = mi(&[a, b, c, d]);
                    assert_eq!(
                        mixed_constant_term(&forms, &n).unwrap(),
                        a_lambda_coeff(&spec, &n).unwrap(),
                        "n={n}"
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_matches_expansion(
        lambda in partition_strategy(),
        alpha in -3_i64..=3,
        raw in prop::collection::vec(0_i64..=4, 4),
    ) {
        let spec = FamilySpec::new(lambda, alpha);
        let d = spec.dim();
        let n = MultiIndex::new(raw[..d].to_vec());
        let table = expand(&family_denominator(&spec), &vec![4; d]).unwrap();
        let idx: Vec<usize> = n.entries().iter().map(|&v| v as usize).collect();
        prop_assert_eq!(table.get(&idx).unwrap(), &a_lambda_coeff(&spec, &n).unwrap());
    }

    #[test]
    fn wide_window_changes_nothing(
        parts in prop::sample::select(vec![vec![2, 2], vec![2, 1], vec![3, 1], vec![3], vec![2]]),
        alpha in prop::sample::select(vec![1_i64, -1]),
        raw in prop::collection::vec(-5_i64..=5, 4),
    ) {
        let spec = FamilySpec::from_parts(&parts, alpha);
        let n = MultiIndex::new(raw[..spec.dim()].to_vec());
        let (lo, hi) = wide_k_window(&n);
        prop_assert_eq!(
            a_lambda_coeff_in_window(&spec, &n, lo - 5, hi + 5).unwrap(),
            a_lambda_coeff(&spec, &n).unwrap()
        );
    }

    #[test]
    fn symmetric_within_a_block(
        raw in prop::collection::vec(-4_i64..=4, 4),
        alpha in prop::sample::select(vec![1_i64, -1]),
    ) {
        let spec = FamilySpec::from_parts(&[2, 2], alpha);
        let n = mi(&raw);
        let swapped = mi(&[raw[1], raw[0], raw[3], raw[2]]);
        let blocks_swapped = mi(&[raw[2], raw[3], raw[0], raw[1]]);
        let value = a_lambda_coeff(&spec, &n).unwrap();
        prop_assert_eq!(&value, &a_lambda_coeff(&spec, &swapped).unwrap());
        prop_assert_eq!(&value, &a_lambda_coeff(&spec, &blocks_swapped).unwrap());
    }

    #[test]
    fn franel_sum_matches_family(raw in prop::collection::vec(0_i64..=6, 3)) {
        let n = mi(&raw);
        prop_assert_eq!(
            yd_sum(&n).unwrap(),
            a_lambda_coeff(&NamedSequence::Franel.spec(), &n).unwrap()
        );
    }

    #[test]
    fn zero_alpha_is_a_product_of_multinomials(raw in prop::collection::vec(0_i64..=5, 3)) {
        // α = 0 keeps only k = 0: binom(n1 + n2, n1) for the first block.
        let spec = FamilySpec::from_parts(&[2, 1], 0);
        let value = a_lambda_coeff(&spec, &mi(&raw)).unwrap();
        prop_assert_eq!(value, binom_ext(raw[0] + raw[1], raw[0]));
    }

    #[test]
    fn index_round_trips_through_text(raw in prop::collection::vec(-50_i64..=50, 1..6)) {
        let n = mi(&raw);
        let text = raw.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(text.parse::<MultiIndex>().unwrap(), n);
    }
}

#[test]
fn single_variable_coefficient_is_one() {
    let spec = NamedSequence::AperyA.spec();
    assert_eq!(
        a_lambda_coeff(&spec, &mi(&[1, 0, 0, 0])).unwrap(),
        BigInt::from(1)
    );
}
