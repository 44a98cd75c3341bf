use std::time::Instant;

use rayon::prelude::*;

use super::{IdentityReport, Verifier};
use crate::error::{Error, Result};

/// Every identity id accepted by [`run`].
pub const IDENTITY_IDS: &[&str] = &[
    "schroeder-valley",
    "schroeder-square",
    "alg-recursion",
    "alg-recursion-square",
    "comb-recursion",
    "comb-recursion-square",
    "chu-vandermonde",
    "recsf",
    "reccomb",
    "extended-catalan",
    "square-to-dyck",
    "square-catalan",
    "valley-delta",
    "symmetry",
    "theta-en",
    "orthogonality",
    "sf-identity",
    "e-split",
    "delta-route",
    "qt-catalan",
    "pushing",
];

/// Optional pins on individual parameters of a sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Selectors {
    pub k: Option<i64>,
    pub d: Option<i64>,
    pub m: Option<i64>,
    pub r: Option<i64>,
    /// Record wall-clock time per report.
    pub timing: bool,
}

impl Selectors {
    fn keep(pin: Option<i64>, v: i64) -> bool {
        pin.is_none_or(|p| p == v)
    }
}

#[derive(Clone, Debug)]
enum Task {
    Refined(i64, i64, i64, i64),
    Total(i64, i64, i64),
    Triple(i64, i64, i64),
    Quad(i64, i64, i64, i64),
    Pair(i64, i64),
    Single(i64),
    Partitions(u32, usize, usize),
}

/// `(n, k, r, d)` with `0 <= k <= n`, `0 <= r <= n - k`, `0 <= d <= n`.
fn schroeder_tuples(n_max: i64, s: &Selectors) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for k in (0..=n).filter(|&k| Selectors::keep(s.k, k)) {
            for d in (0..=n).filter(|&d| Selectors::keep(s.d, d)) {
                for r in (0..=n - k).filter(|&r| Selectors::keep(s.r, r)) {
                    out.push((n, k, r, d));
                }
            }
        }
    }
    out
}

/// `(a, n, k)` with `a + n <= n_max` and `k < n`, plus `(0, 0, 0)`.
fn extended_triples(n_max: i64, pin_a: Option<i64>, s: &Selectors) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    if Selectors::keep(pin_a, 0) && Selectors::keep(s.k, 0) {
        out.push((0, 0, 0));
    }
    for n in 1..=n_max {
        for a in (0..=n_max - n).filter(|&a| Selectors::keep(pin_a, a)) {
            for k in (0..n).filter(|&k| Selectors::keep(s.k, k)) {
                out.push((a, n, k));
            }
        }
    }
    out.sort_by_key(|&(a, n, k)| (a + n, n, k, a));
    out
}

fn tasks(id: &str, n_max: i64, s: &Selectors, v: &Verifier) -> Result<Vec<Task>> {
    let refined = |with_totals: bool| {
        let mut out: Vec<Task> = schroeder_tuples(n_max, s).into_iter().map(|(n, k, r, d)| Task::Refined(n, k, r, d)).collect();
        if with_totals && s.r.is_none() {
            for n in 0..=n_max {
                for k in (0..=n).filter(|&k| Selectors::keep(s.k, k)) {
                    for d in (0..=n).filter(|&d| Selectors::keep(s.d, d)) {
                        out.push(Task::Total(n, k, d));
                    }
                }
            }
        }
        out
    };
    Ok(match id {
        "schroeder-valley" | "schroeder-square" => refined(true),
        "alg-recursion" | "alg-recursion-square" | "comb-recursion" | "comb-recursion-square" | "recsf" | "reccomb"
        | "delta-route" => refined(false),
        "chu-vandermonde" => {
            let mut out = Vec::new();
            for r in (0..=n_max).filter(|&r| Selectors::keep(s.r, r)) {
                for v in 0..=r {
                    for j in 0..=n_max {
                        out.push(Task::Triple(r, v, j));
                    }
                }
            }
            out
        }
        "extended-catalan" | "square-catalan" => {
            extended_triples(n_max, s.d, s).into_iter().map(|(d, n, k)| Task::Triple(n, k, d)).collect()
        }
        "square-to-dyck" => {
            let mut out = Vec::new();
            for (d, n, k) in extended_triples(n_max, s.d, s) {
                for r in (1..=n - k).filter(|&r| Selectors::keep(s.r, r)) {
                    out.push(Task::Quad(d, n, k, r));
                }
            }
            out
        }
        "valley-delta" | "symmetry" => extended_triples(n_max, s.m, s)
            .into_iter()
            .filter(|&(_, n, _)| n >= 1)
            .map(|(m, n, k)| Task::Triple(m, n, k))
            .collect(),
        "theta-en" => {
            let mut out = Vec::new();
            for n in 1..=n_max {
                for k in (0..n).filter(|&k| Selectors::keep(s.k, k)) {
                    out.push(Task::Pair(n, k));
                }
            }
            out
        }
        "orthogonality" => {
            let mut out = Vec::new();
            for n in 1..=n_max as u32 {
                let count = v.lambda().partitions(n)?.len();
                for i in 0..count {
                    for j in i..count {
                        out.push(Task::Partitions(n, i, j));
                    }
                }
            }
            out
        }
        "sf-identity" => {
            let mut out = Vec::new();
            for (n, k, r, _) in schroeder_tuples(n_max, &Selectors { d: Some(0), ..*s }) {
                for m in (0..=n).filter(|&m| Selectors::keep(s.m, m)) {
                    out.push(Task::Quad(m, n, k, r));
                }
            }
            out
        }
        "e-split" | "qt-catalan" => (0..=n_max).map(Task::Single).collect(),
        "pushing" => {
            let mut out = Vec::new();
            for n in 0..=n_max {
                for k in (0..=n).filter(|&k| Selectors::keep(s.k, k)) {
                    for d in (0..=n - k).filter(|&d| Selectors::keep(s.d, d)) {
                        out.push(Task::Triple(n, k, d));
                    }
                }
            }
            out
        }
        other => return Err(Error::UnknownIdentity(other.to_string())),
    })
}

fn execute(v: &Verifier, id: &str, task: &Task) -> Result<Vec<IdentityReport>> {
    let one = |r: Result<IdentityReport>| r.map(|r| vec![r]);
    match (id, task) {
        ("schroeder-valley", Task::Refined(n, k, r, d)) => one(v.check_schroeder_valley(*n, *k, *r, *d)),
        ("schroeder-valley", Task::Total(n, k, d)) => one(v.check_schroeder_valley_total(*n, *k, *d)),
        ("schroeder-square", Task::Refined(n, k, r, d)) => one(v.check_schroeder_square(*n, *k, *r, *d)),
        ("schroeder-square", Task::Total(n, k, d)) => one(v.check_schroeder_square_total(*n, *k, *d)),
        ("alg-recursion", Task::Refined(n, k, r, d)) => one(v.check_alg_recursion(*n, *k, *r, *d)),
        ("alg-recursion-square", Task::Refined(n, k, r, d)) => one(v.check_alg_recursion_square(*n, *k, *r, *d)),
        ("comb-recursion", Task::Refined(n, k, r, d)) => one(v.check_comb_recursion(*n, *k, *r, *d)),
        ("comb-recursion-square", Task::Refined(n, k, r, d)) => one(v.check_comb_recursion_square(*n, *k, *r, *d)),
        ("recsf", Task::Refined(n, k, r, d)) => one(v.check_recsf(*n, *k, *r, *d)),
        ("reccomb", Task::Refined(n, k, r, d)) => one(v.check_reccomb(*n, *k, *r, *d)),
        ("delta-route", Task::Refined(n, k, r, d)) => one(v.check_delta_route(*n, *k, *r, *d)),
        ("chu-vandermonde", Task::Triple(r, vv, j)) => Ok(vec![v.check_chu_vandermonde(*r, *vv, *j)]),
        ("extended-catalan", Task::Triple(n, k, d)) => one(v.check_extended_catalan(*n, *k, *d)),
        ("square-catalan", Task::Triple(n, k, d)) => one(v.check_square_catalan(*n, *k, *d)),
        ("square-to-dyck", Task::Quad(d, n, k, r)) => one(v.check_square_to_dyck(*d, *n, *k, *r)),
        ("valley-delta", Task::Triple(m, n, k)) => one(v.check_valley_delta(*m, *n, *k)),
        ("symmetry", Task::Triple(m, n, k)) => one(v.check_symmetry(*m, *n, *k)),
        ("theta-en", Task::Pair(n, k)) => one(v.check_theta_en(*n, *k)),
        ("orthogonality", Task::Partitions(n, i, j)) => {
            let parts = v.lambda().partitions(*n)?;
            one(v.check_orthogonality(&parts[*i], &parts[*j]))
        }
        ("sf-identity", Task::Quad(m, n, k, r)) => one(v.check_sf_identity(*m, *n, *k, *r)),
        ("e-split", Task::Single(n)) => v.check_e_split(*n),
        ("qt-catalan", Task::Single(n)) => one(v.check_qt_catalan(*n)),
        ("pushing", Task::Triple(n, k, d)) => v.check_pushing(*n, *k, *d),
        _ => unreachable!("task {task:?} does not belong to {id}"),
    }
}

/// Runs the sweep of `id` over sizes up to `n_max`. Reports come back in
/// parameter order regardless of the number of worker threads.
pub fn run(v: &Verifier, id: &str, n_max: i64, selectors: &Selectors) -> Result<Vec<IdentityReport>> {
    if n_max < 0 {
        return Err(Error::InvalidArgument(format!("negative n-max {n_max}")));
    }
    if n_max > v.bound() as i64 {
        return Err(Error::DegreeBound { degree: n_max as usize, bound: v.bound() as usize });
    }
    let list = tasks(id, n_max, selectors, v)?;
    let chunks: Vec<Result<Vec<IdentityReport>>> = list
        .par_iter()
        .map(|task| {
            let start = Instant::now();
            let mut reports = execute(v, id, task)?;
            if selectors.timing {
                let ms = start.elapsed().as_millis() as u64;
                reports.iter_mut().for_each(|r| r.elapsed_ms = Some(ms));
            }
            Ok(reports)
        })
        .collect();
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id() {
        let v = Verifier::new(2);
        assert!(matches!(run(&v, "nope", 1, &Selectors::default()), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn bound_is_enforced() {
        let v = Verifier::new(2);
        assert!(matches!(run(&v, "qt-catalan", 3, &Selectors::default()), Err(Error::DegreeBound { .. })));
    }

    #[test]
    fn small_sweeps_are_equal() {
        let v = Verifier::new(3);
        for id in ["schroeder-valley", "chu-vandermonde", "qt-catalan", "theta-en"] {
            let reports = run(&v, id, 3, &Selectors::default()).unwrap();
            assert!(!reports.is_empty());
            assert!(reports.iter().all(|r| r.equal), "{id}");
        }
    }
}
