use num_rational::BigRational;
use proptest::prelude::*;

use valley_delta::exactalg::{qt, MPoly, Monomial, QTRational};
use valley_delta::identities::{
    chu_vandermonde_lhs, chu_vandermonde_rhs, qbinom, run, Category, IdentityReport, Indexing, ScalarTable, Selectors,
    Status, Summary, Verifier, IDENTITY_IDS,
};
use valley_delta::paths::{qt_enumerator, Family, Params};
use valley_delta::Error;

fn sweep_with(threads: usize, id: &str, n_max: i64) -> Vec<IdentityReport> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    let v = Verifier::new(6);
    pool.install(|| run(&v, id, n_max, &Selectors::default())).unwrap()
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for id in ["schroeder-valley", "comb-recursion-square", "orthogonality"] {
        assert_eq!(sweep_with(1, id, 3), sweep_with(3, id, 3), "{id}");
    }
}

#[test]
fn every_theorem_holds_at_small_sizes() {
    let v = Verifier::new(6);
    for id in IDENTITY_IDS {
        let reports = run(&v, id, 3, &Selectors::default()).unwrap();
        assert!(!reports.is_empty(), "{id}");
        let s = Summary::of(&reports);
        assert_eq!(s.theorem_failures, 0, "{id}");
    }
}

#[test]
fn report_json_round_trip() {
    let v = Verifier::new(4);
    for r in run(&v, "recsf", 2, &Selectors::default()).unwrap() {
        let back: IdentityReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.equal, r.status == Status::Equal);
    }
}

#[test]
fn equal_flag_is_exact_equality() {
    let a = QTRational::from(qbinom(4, 2));
    let b = qt("q^4 + q^3 + 2*q^2 + q + 1");
    assert!(IdentityReport::compare("x", Category::Theorem, &[], &a, &b).equal);
    let c = qt("q^4 + q^3 + q^2 + q + 1");
    let r = IdentityReport::compare("x", Category::Theorem, &[("n", 4)], &a, &c);
    assert!(!r.equal && r.is_theorem_failure());
    assert!(r.to_text_line().contains("lhs:"));
}

#[test]
fn selectors_pin_parameters() {
    let v = Verifier::new(5);
    let s = Selectors { k: Some(1), d: Some(2), ..Selectors::default() };
    let reports = run(&v, "schroeder-valley", 4, &s).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert_eq!(r.params["k"], 1);
        assert_eq!(r.params["d"], 2);
    }
}

#[test]
fn timing_is_opt_in() {
    let v = Verifier::new(4);
    assert!(run(&v, "qt-catalan", 3, &Selectors::default()).unwrap().iter().all(|r| r.elapsed_ms.is_none()));
    let timed = Selectors { timing: true, ..Selectors::default() };
    assert!(run(&v, "qt-catalan", 3, &timed).unwrap().iter().all(|r| r.elapsed_ms.is_some()));
}

#[test]
fn sweep_errors() {
    let v = Verifier::new(4);
    assert!(matches!(run(&v, "no-such-identity", 2, &Selectors::default()), Err(Error::UnknownIdentity(_))));
    assert!(matches!(run(&v, "schroeder-valley", 5, &Selectors::default()), Err(Error::DegreeBound { .. })));
}

#[test]
fn summary_counts_every_status() {
    let mut unmet = IdentityReport::compare("x", Category::Theorem, &[], &1, &1);
    unmet.status = Status::ConditionalUnmet;
    unmet.equal = false;
    let bad = IdentityReport::compare("y", Category::Conjectural, &[], &1, &2);
    let s = Summary::of(&[unmet, bad, IdentityReport::compare("z", Category::Theorem, &[], &3, &3)]);
    assert_eq!((s.checked, s.equal, s.unequal, s.conditional_unmet, s.theorem_failures), (3, 1, 1, 1, 0));
}

#[test]
fn scalar_table_accepts_natural_polynomials() {
    let t = ScalarTable::default();
    t.insert((1, 0, 1, 0), qt("q + 2*t"));
    assert_eq!(t.get((1, 0, 1, 0)), Some(qt("q + 2*t")));
    assert_eq!(t.len(), 1);
}

#[test]
#[should_panic]
fn scalar_table_rejects_negative_coefficients() {
    ScalarTable::default().insert((1, 0, 0, 0), qt("q - t"));
}

#[test]
fn base_cases() {
    let v = Verifier::new(4);
    assert!(v.lhs_schroeder(0, 0, 0, 0).unwrap().is_one());
    assert!(v.lhs_schroeder(1, 0, 0, 0).unwrap().is_zero());
    assert_eq!(v.lhs_schroeder(1, 0, 1, 0).unwrap(), QTRational::one());
}

#[test]
fn refined_values_sum_to_the_catalan_polynomial() {
    let v = Verifier::new(4);
    let total: QTRational = (0..=3).map(|r| v.lhs_schroeder(3, 0, r, 0).unwrap()).sum();
    assert_eq!(total, qt("q^3 + q^2*t + q*t^2 + t^3 + q*t"));
}

#[test]
fn qt_catalan_is_symmetric() {
    for n in 0..=6 {
        let e = qt_enumerator(Family::D, Params::new(0, n, 0, 0)).unwrap();
        let swapped = e.total.map_monomials(|m| Monomial::new(m.exps()[1], m.exps()[0], 0));
        assert_eq!(swapped, e.total, "n = {n}");
    }
}

#[test]
fn printed_index_ranges_disagree_where_peak_count_agrees() {
    let v = Verifier::new(4);
    let direct = v.refined_count(Family::D, 2, 0, 1, 0).unwrap();
    assert_eq!(v.rhs_comb_recursion_with(2, 0, 1, 0, Indexing::PeakCount).unwrap(), direct);
    assert_ne!(v.rhs_comb_recursion_with(2, 0, 1, 0, Indexing::CombinatorialPrinted).unwrap(), direct);
}

#[test]
fn extended_q_binomial() {
    assert!(qbinom(-1, 0).is_one());
    assert!(qbinom(-1, 1).is_zero());
    assert!(qbinom(2, -1).is_zero());
    assert_eq!(qbinom(3, 1), MPoly::from_terms((0..3).map(|i| (Monomial::new(i, 0, 0), BigRational::from_integer(1.into())))));
}

proptest! {
    #[test]
    fn chu_vandermonde(r in 0i64..=8, v in 0i64..=8, j in 0i64..=8) {
        prop_assume!(v <= r);
        prop_assert_eq!(chu_vandermonde_lhs(r, v, j), chu_vandermonde_rhs(r, v, j));
    }

    #[test]
    fn q_binomial_symmetry(n in 0i64..=12, k in 0i64..=12) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
    }
}
