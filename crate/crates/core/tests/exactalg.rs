use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use valley_delta::exactalg::{parse_poly, parse_rational, q_binom, q_int, qt, MPoly, Monomial, QTRational, Var};
use valley_delta::ExactError;

fn poly_strategy() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..4, 0u32..4, 0u32..2, -5i64..=5), 0..6).prop_map(|terms| {
        MPoly::from_terms(
            terms.into_iter().map(|(a, b, c, k)| (Monomial::new(a, b, c), BigRational::from_integer(BigInt::from(k)))),
        )
    })
}

fn nonzero_at_one() -> impl Strategy<Value = MPoly> {
    poly_strategy().prop_filter("nonzero at q = t = z = 1", |p| p.at_one() != BigRational::from_integer(0.into()))
}

fn rational_strategy() -> impl Strategy<Value = QTRational> {
    (poly_strategy(), nonzero_at_one()).prop_map(|(n, d)| QTRational::from_mpolys(&n, &d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn field_axioms(a in rational_strategy(), b in rational_strategy(), c in rational_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn canonicalization_is_idempotent(a in rational_strategy()) {
        let once = a.reduce();
        prop_assert_eq!(once.reduce(), once.clone());
        prop_assert_eq!(once, a);
    }

    #[test]
    fn text_round_trip(a in rational_strategy()) {
        let text = a.to_canonical_string();
        prop_assert_eq!(parse_rational(&text).unwrap(), a);
    }

    #[test]
    fn evaluation_at_one_commutes(a in rational_strategy(), b in rational_strategy()) {
        let (x, y) = (a.at_one().unwrap(), b.at_one().unwrap());
        prop_assert_eq!((&a + &b).at_one().unwrap(), &x + &y);
        prop_assert_eq!((&a * &b).at_one().unwrap(), &x * &y);
        prop_assert_eq!((&a - &b).at_one().unwrap(), &x - &y);
    }
}

#[test]
fn q_binomial_pascal_up_to_twelve() {
    for n in 1..=12i64 {
        for k in 0..=n {
            let rhs = &q_binom(n - 1, k - 1) + &q_binom(n - 1, k).mul_monomial(Monomial::new(k as u32, 0, 0));
            assert_eq!(q_binom(n, k), rhs, "[{n}, {k}]");
        }
    }
}

#[test]
fn q_binomial_edges() {
    assert!(q_binom(3, -1).is_zero());
    assert!(q_binom(3, 4).is_zero());
    assert!(q_binom(0, 0).is_one());
    assert_eq!(q_binom(4, 2), parse_poly("q^4 + q^3 + 2*q^2 + q + 1").unwrap());
    assert_eq!(q_binom(6, 2), q_binom(6, 4));
    assert_eq!(q_int(3), parse_poly("q^2 + q + 1").unwrap());
}

#[test]
fn canonical_sample_prints_as_given() {
    let s = "q^3 + q^2*t + q*t^2 + t^3 + q*t";
    assert_eq!(qt(s).to_canonical_string(), s);
}

#[test]
fn sign_normalization() {
    let a = parse_rational("1/(q - t)").unwrap();
    let b = parse_rational("-1/(t - q)").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_canonical_string(), "(-1)/(-q + t)");
    assert_eq!(parse_rational(&a.to_canonical_string()).unwrap(), a);
}

#[test]
fn reduction_cancels_common_factors() {
    let a = parse_rational("(q^2 - t^2)/(q - t)").unwrap();
    assert!(a.is_polynomial());
    assert_eq!(a, qt("q + t"));
    let b = parse_rational("(1 - q^3)/(1 - q)").unwrap();
    assert_eq!(b, QTRational::from_mpoly(&q_int(3)));
}

#[test]
fn rational_coefficients() {
    let a = parse_rational("1/2*q + 3/4").unwrap();
    assert_eq!((&a + &a).to_canonical_string(), "q + 3/2");
}

#[test]
fn substitution_and_frobenius() {
    let a = qt("q + t");
    assert_eq!(a.frobenius(2), qt("q^2 + t^2"));
    assert_eq!(a.subst(Var::T, &qt("q")).unwrap(), qt("2*q"));
}

#[test]
fn errors() {
    assert!(matches!(QTRational::one().checked_div(&QTRational::zero()), Err(ExactError::DivisionByZero)));
    assert!(parse_rational("q +").is_err());
    assert!(parse_rational("x").is_err());
    assert!(parse_rational("1/0").is_err());
}
