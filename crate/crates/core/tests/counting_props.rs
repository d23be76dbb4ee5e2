use antidirected::counting::{
    binomial, bound_S, bound_S_strong, count_nk, product_inequality_holds, ratio_base_case, ratio_recursion_check,
    total_N, verify_count_bound, CountError,
};
use antidirected::threshold::{threshold, Variant, DEFAULT_DIGITS};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn r(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Independent `C(n, k)` by Pascal's rule in `u128`.
fn pascal(n: u64, k: u64) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(0)
}

#[test]
fn small_count_examples() {
    assert_eq!(count_nk(4, 2, 1).unwrap(), BigUint::from(4u32));
    assert_eq!(count_nk(4, 2, 2).unwrap(), BigUint::from(2u32));
    assert_eq!(total_N(4, 2).unwrap(), BigUint::from(6u32));
    assert_eq!(total_N(8, 5).unwrap(), BigUint::from(70u32));
    assert_eq!(total_N(2, 1).unwrap(), BigUint::from(2u32));
    assert!(count_nk(10, 7, 6).unwrap().is_zero());
    // k = delta - n/2 sits just below the support
    assert!(count_nk(20, 14, 4).unwrap().is_zero());
    assert!(matches!(count_nk(5, 2, 1), Err(CountError::OddOrder(5))));
}

#[test]
fn forty_eight_twenty_two_fails() {
    let rep = verify_count_bound(48, 22).unwrap();
    assert!(!rep.holds);
    assert_eq!(rep.total, binomial(48, 24));
}

#[test]
fn dense_case_holds() {
    for n in (12..=120).step_by(2) {
        assert!(verify_count_bound(n, n - 1).unwrap().holds, "n = {n}");
    }
}

#[test]
fn s_nonincreasing_in_delta() {
    for n in (12..=80).step_by(2) {
        let values: Vec<BigRational> = (n / 2..n).map(|d| bound_S(n, d).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "n = {n}");
    }
}

#[test]
fn ratio_closed_forms_at_16_10() {
    for k in 0..16 / 4 - 3 {
        assert!(ratio_recursion_check(16, 10, k).unwrap().all());
    }
}

#[test]
fn base_case_above_threshold() {
    let mut checked = 0;
    for n in (8u64..=240).step_by(4) {
        for delta in (n / 2 + 1..n).filter(|d| d % 2 == 0 && 4 * d < 3 * n) {
            let t = threshold(&r(delta as i64, n as i64), Variant::TwoFactor, DEFAULT_DIGITS).unwrap();
            if BigInt::from(n) > t.floor {
                checked += 1;
                assert!(ratio_base_case(n, delta).unwrap(), "n = {n}, delta = {delta}");
            }
        }
    }
    assert!(checked > 50, "only {checked} cases above the threshold");
}

#[test]
fn hamilton_threshold_decreases_towards_three_quarters() {
    let values: Vec<_> = [r(3, 5), r(13, 20), r(7, 10), r(37, 50)]
        .iter()
        .map(|p| threshold(p, Variant::Hamilton, DEFAULT_DIGITS).unwrap())
        .collect();
    for w in values.windows(2) {
        assert!(w[0].value.lo > w[1].value.hi, "{} vs {}", w[0], w[1]);
    }
    assert!(threshold(&r(3, 4), Variant::Hamilton, DEFAULT_DIGITS).is_err());
    assert!(threshold(&r(1, 2), Variant::TwoFactor, DEFAULT_DIGITS).is_err());
}

#[test]
fn product_inequality_examples() {
    assert!(product_inequality_holds(&r(10, 1), &r(5, 1), &r(4, 1)).unwrap());
    assert!(product_inequality_holds(&r(7, 2), &r(7, 2), &r(2, 1)).unwrap());
    assert!(product_inequality_holds(&r(10, 1), &r(5, 1), &r(3, 1)).is_err());
}

proptest! {
    #[test]
    fn binomial_matches_pascal(n in 0u64..100, k in 0u64..100) {
        prop_assert_eq!(binomial(n, k), BigUint::from(pascal(n, k)));
    }

    #[test]
    fn terms_sum_to_central_binomial(half in 1u64..100, frac in 0.0f64..1.0) {
        let n = 2 * half;
        let delta = ((n - 1) as f64 * frac) as u64;
        let total: BigUint = (0..=half).map(|k| count_nk(n, delta, k).unwrap()).sum();
        prop_assert_eq!(&total, &binomial(n, half));
        prop_assert_eq!(total_N(n, delta).unwrap(), total);
    }

    #[test]
    fn strong_bound_is_smaller(half in 6u64..120, frac in 0.0f64..1.0) {
        let n = 2 * half;
        let delta = ((n - 1) as f64 * frac) as u64;
        let s = bound_S(n, delta).unwrap();
        let s2 = bound_S_strong(n, delta).unwrap();
        prop_assert!(s2 <= s);
        prop_assert!(s2 >= BigRational::zero());
    }

    #[test]
    fn product_inequality(s_half in 1i64..8, den in 1i64..15, y_num in 1i64..200, gap in 0i64..200, gap_den in 1i64..15) {
        let s = 2 * s_half;
        let y = r(s_half * den + y_num, den);
        let x = &y + r(gap, gap_den);
        prop_assert!(product_inequality_holds(&x, &y, &BigRational::from_integer(BigInt::from(s))).unwrap());
    }
}
