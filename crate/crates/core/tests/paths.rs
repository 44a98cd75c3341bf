use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use valley_delta::exactalg::{qt, MPoly, QTRational};
use valley_delta::paths::{contains, enumerate, qt_enumerator, DecoratedPath, Family, Params, SquarePath, Step};

const CATALAN: [u64; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];

fn key(x: &DecoratedPath) -> String {
    x.to_json(None)
}

/// Every admissible parameter set with `m + n <= size`.
fn params(family: Family, size: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 0..=size {
        for m in 0..=size - n {
            if family.is_peak_model() && m > 0 {
                continue;
            }
            for k in 0..=(m + n) {
                let dmax = if family.is_peak_model() { n } else { 0 };
                for d in 0..=dmax {
                    out.push(Params::new(m, n, k, d));
                }
            }
        }
    }
    out
}

#[test]
fn square_and_dyck_path_counts() {
    for n in 1..=7usize {
        let dyck = SquarePath::all(n, true);
        assert_eq!(dyck.len() as u64, CATALAN[n]);
        assert!(dyck.iter().all(|p| p.is_dyck()));
        // Paths ending with an east step: binom(2n - 1, n).
        let square = SquarePath::all(n, false).len() as u64;
        let binom: u64 = (n as u64..2 * n as u64).product::<u64>() / (1..=n as u64).product::<u64>();
        assert_eq!(square, binom);
    }
}

#[test]
fn family_invariants() {
    for family in Family::ALL {
        for p in params(family, 4) {
            let all = enumerate(family, p).unwrap();
            let mut seen = HashSet::new();
            for x in &all {
                assert!(seen.insert(key(x)), "{family} {p:?}: duplicate {}", key(x));
                assert!(x.dinv_breakdown().total() >= 0);
                let valleys: BTreeSet<usize> = x.contractible_valleys().into_iter().collect();
                assert!(x.dv().is_subset(&valleys));
                assert!(contains(family, p, x), "{family} {p:?}: {}", key(x));
                if family.is_dyck() {
                    assert!(x.path().is_dyck());
                }
                if family.is_peak_model() {
                    for (i, &w) in x.labels().iter().enumerate() {
                        if w as usize > p.n - p.d {
                            assert!(x.path().is_peak(i + 1));
                        }
                    }
                }
            }
            let e = qt_enumerator(family, p).unwrap();
            assert_eq!(e.count, all.len() as u64);
            let sum = e.refined.values().fold(MPoly::zero(), |acc, r| &acc + r);
            assert_eq!(sum, e.total);
            assert_eq!(e.total.at_one(), BigRational::from_integer(BigInt::from(e.count)));
        }
    }
}

#[test]
fn primed_and_dyck_containments() {
    for n in 0..=4 {
        for m in 0..=4 - n {
            for k in 0..=(m + n) {
                let p = Params::new(m, n, k, 0);
                let full: HashSet<String> = enumerate(Family::LSQ, p).unwrap().iter().map(key).collect();
                for x in enumerate(Family::LSQPrime, p).unwrap() {
                    assert!(full.contains(&key(&x)));
                }
                let dyck: HashSet<String> = enumerate(Family::LD, p).unwrap().iter().map(key).collect();
                assert!(dyck.is_subset(&full));
            }
        }
        let p = Params::new(0, n, 0, 0);
        let square: HashSet<String> = enumerate(Family::SQPrime, p).unwrap().iter().map(key).collect();
        assert!(enumerate(Family::D, p).unwrap().iter().all(|x| square.contains(&key(x))));
    }
}

#[test]
fn catalan_at_one() {
    for (n, &c) in CATALAN.iter().enumerate() {
        let e = qt_enumerator(Family::D, Params::new(0, n, 0, 0)).unwrap();
        assert_eq!(e.count, c, "n = {n}");
    }
}

#[test]
fn qt_catalan_three() {
    let e = qt_enumerator(Family::D, Params::new(0, 3, 0, 0)).unwrap();
    assert_eq!(QTRational::from(e.total), qt("q^3 + q^2*t + q*t^2 + t^3 + q*t"));
}

#[test]
fn empty_path() {
    let e = qt_enumerator(Family::D, Params::new(0, 0, 0, 0)).unwrap();
    assert_eq!(e.count, 1);
    assert!(e.refined_at(0).is_one());
}

const SAMPLE: &str = "NEEEENENNENNNENE";

fn sample_left() -> DecoratedPath {
    DecoratedPath::new(SAMPLE.parse().unwrap(), vec![2, 0, 2, 4, 0, 1, 3, 4], BTreeSet::from([2, 8]), BTreeSet::new())
        .unwrap()
}

#[test]
fn sample_path_statistics() {
    let p: SquarePath = SAMPLE.parse().unwrap();
    assert_eq!(p.area_word(), vec![0, -3, -3, -2, -2, -1, 0, 0]);
    assert_eq!(p.shift(), 3);
    let x = sample_left();
    assert_eq!(x.area(), 13);
    assert_eq!(x.reading_word(), vec![0, 2, 4, 0, 1, 2, 3, 4]);
    assert!(contains(Family::LSQPrime, Params::new(2, 6, 2, 0), &x));
    assert!(!contains(Family::LD, Params::new(2, 6, 2, 0), &x));
}

#[test]
fn rejects_malformed_input() {
    assert!("NENEN".parse::<SquarePath>().is_err());
    assert!("NNEEN".parse::<SquarePath>().is_err());
    assert!("ENNE".parse::<SquarePath>().is_ok());
    assert!("NEXE".parse::<SquarePath>().is_err());
    assert!("LQ".parse::<Family>().is_err());
    assert!(DecoratedPath::from_json("{\"steps\":\"NE\"}").is_err());
    assert!(DecoratedPath::from_json("{\"steps\":\"NE\",\"labels\":[0],\"dv\":[],\"dr\":[]}").is_err());
    assert!(enumerate(Family::LD, Params::new(0, 2, 0, 1)).is_err());
}

#[test]
fn json_round_trip_over_a_family() {
    for x in enumerate(Family::LSQPrime, Params::new(1, 2, 1, 0)).unwrap() {
        let (back, fam) = DecoratedPath::from_json(&x.to_json(Some("LSQ'"))).unwrap();
        assert_eq!(back, x);
        assert_eq!(fam.as_deref(), Some("LSQ'"));
    }
}

fn step_words() -> impl Strategy<Value = Vec<Step>> {
    (1usize..=7).prop_flat_map(|n| Just([vec![Step::N; n], vec![Step::E; n]].concat()).prop_shuffle())
}

proptest! {
    #[test]
    fn square_path_invariants(steps in step_words()) {
        let n = steps.len() / 2;
        let result = SquarePath::new(steps.clone());
        prop_assert_eq!(result.is_ok(), steps.last() == Some(&Step::E));
        if let Ok(p) = result {
            let a = p.area_word();
            prop_assert_eq!(a.len(), n);
            let low = a.iter().copied().min().unwrap().min(0);
            prop_assert_eq!(p.shift() as i32, -low);
            prop_assert_eq!(p.is_dyck(), a.iter().all(|&x| x >= 0));
            prop_assert_eq!(p.to_string().parse::<SquarePath>().unwrap(), p);
        }
    }
}
