//! Both sides of the Schröder, recursion and Catalan identities, compared
//! exactly.
//!
//! A [`Verifier`] owns a [`Lambda`] context and memoizes every scalar product
//! and every enumeration by its full parameter tuple, so recursion evaluators
//! only ever consume stored values.

mod checks;
mod recursions;
mod registry;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{q_int, MPoly, QTRational};
use crate::paths::{qt_enumerator, Enumerator, Family, Params};
use crate::symfun::{Lambda, SymFunc};

pub use recursions::{
    chu_vandermonde_lhs, chu_vandermonde_rhs, dyck_recursion, peak_removal_sum, peak_removal_weight, qbinom,
    square_recursion, Indexing,
};
pub use registry::{run, Selectors, IDENTITY_IDS};

/// Theorem checks gate the exit status; conjectural ones are findings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Theorem,
    Conjectural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Equal,
    Unequal,
    /// The hypothesis of a conditional theorem failed; nothing was compared.
    ConditionalUnmet,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Equal => "EQUAL",
            Status::Unequal => "UNEQUAL",
            Status::ConditionalUnmet => "CONDITIONAL-UNMET",
        })
    }
}

/// One compared instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub category: Category,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityReport {
    /// Report comparing two exact values; `equal` is their exact equality.
    pub fn compare<T: PartialEq + fmt::Display>(id: &str, category: Category, params: &[(&str, i64)], lhs: &T, rhs: &T) -> Self {
        let equal = lhs == rhs;
        IdentityReport {
            id: id.to_string(),
            category,
            params: params_map(params),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal,
            status: if equal { Status::Equal } else { Status::Unequal },
            elements: None,
            elapsed_ms: None,
            note: None,
        }
    }

    pub fn with_elements(mut self, n: u64) -> Self {
        self.elements = Some(n);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Failure of a theorem-category check.
    pub fn is_theorem_failure(&self) -> bool {
        self.category == Category::Theorem && self.status == Status::Unequal
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let mut line = format!("{:<17} {} [{}] {}", self.status.to_string(), self.id, self.category_name(), params.join(" "));
        if self.status == Status::Unequal {
            line.push_str(&format!("\n  lhs: {}\n  rhs: {}", self.lhs, self.rhs));
        }
        if let Some(note) = &self.note {
            line.push_str(&format!("  ({note})"));
        }
        line
    }

    fn category_name(&self) -> &'static str {
        match self.category {
            Category::Theorem => "theorem",
            Category::Conjectural => "conjectural",
        }
    }
}

fn plain(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub(crate) fn params_map(params: &[(&str, i64)]) -> serde_json::Map<String, serde_json::Value> {
    params.iter().map(|(k, v)| (k.to_string(), serde_json::Value::from(*v))).collect()
}

/// Counts over a report stream.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checked: u64,
    pub equal: u64,
    pub unequal: u64,
    pub conditional_unmet: u64,
    pub theorem_failures: u64,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            s.checked += 1;
            match r.status {
                Status::Equal => s.equal += 1,
                Status::Unequal => s.unequal += 1,
                Status::ConditionalUnmet => s.conditional_unmet += 1,
            }
            if r.is_theorem_failure() {
                s.theorem_failures += 1;
            }
        }
        s
    }
}

type Key = (i64, i64, i64, i64);

/// Memo of `(n, k, r, d) -> value`; every stored value must lie in `N[q,t]`.
#[derive(Default)]
pub struct ScalarTable {
    memo: RwLock<HashMap<Key, QTRational>>,
}

impl ScalarTable {
    pub fn get(&self, key: Key) -> Option<QTRational> {
        self.memo.read().expect("table lock").get(&key).cloned()
    }

    /// Stores a value. Panics if it is not a polynomial with nonnegative
    /// integer coefficients.
    pub fn insert(&self, key: Key, value: QTRational) {
        assert!(value.is_nonneg_integer_poly(), "table value at {key:?} is not in N[q,t]: {value}");
        self.memo.write().expect("table lock").insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted snapshot of the stored entries.
    pub fn entries(&self) -> Vec<(Key, QTRational)> {
        let mut v: Vec<_> = self.memo.read().expect("table lock").iter().map(|(k, v)| (*k, v.clone())).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }
}

fn cached<K: std::hash::Hash + Eq + Copy, V: Clone>(
    map: &Mutex<HashMap<K, V>>,
    key: K,
    make: impl FnOnce() -> Result<V>,
) -> Result<V> {
    if let Some(v) = map.lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let v = make()?;
    map.lock().expect("cache lock").entry(key).or_insert(v.clone());
    Ok(v)
}

/// Shared evaluation context for identity checks.
pub struct Verifier {
    lambda: Lambda,
    theta_nabla: Mutex<HashMap<(u32, u32, u32), Arc<SymFunc>>>,
    table: ScalarTable,
    square: ScalarTable,
    extended: Mutex<HashMap<Key, QTRational>>,
    enums: Mutex<HashMap<(Family, Params), Arc<Enumerator>>>,
}

impl fmt::Debug for Verifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Verifier(bound = {})", self.lambda.bound())
    }
}

impl Verifier {
    pub fn new(bound: u32) -> Self {
        Verifier {
            lambda: Lambda::new(bound),
            theta_nabla: Mutex::default(),
            table: ScalarTable::default(),
            square: ScalarTable::default(),
            extended: Mutex::default(),
            enums: Mutex::default(),
        }
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn bound(&self) -> u32 {
        self.lambda.bound()
    }

    /// The Dyck table of [`Verifier::lhs_schroeder`] values computed so far.
    pub fn table(&self) -> &ScalarTable {
        &self.table
    }

    /// The square table of [`Verifier::lhs_square`] values computed so far.
    pub fn square_table(&self) -> &ScalarTable {
        &self.square
    }

    /// `Theta_{e_k} nabla E_{n-k,r}`.
    pub fn theta_nabla_e(&self, n: u32, k: u32, r: u32) -> Result<Arc<SymFunc>> {
        cached(&self.theta_nabla, (n, k, r), || {
            let l = &self.lambda;
            let e = l.e_nk(n - k, r as i64)?;
            Ok(Arc::new(l.theta(&l.e(k), &l.nabla(&e)?)?))
        })
    }

    fn pairing_e_h(&self, f: &SymFunc, n: u32, d: u32) -> Result<QTRational> {
        let l = &self.lambda;
        l.hall_inner(f, &l.multiply(&l.e(n - d), &l.h(d))?)
    }

    fn check_size(&self, n: i64) -> Result<()> {
        if n > self.bound() as i64 {
            return Err(Error::DegreeBound { degree: n as usize, bound: self.bound() as usize });
        }
        Ok(())
    }

    /// `<Theta_{e_k} nabla E_{n-k,r}, e_{n-d} h_d>`; zero outside
    /// `0 <= k <= n`, `0 <= r <= n - k`, `0 <= d <= n`.
    pub fn lhs_schroeder(&self, n: i64, k: i64, r: i64, d: i64) -> Result<QTRational> {
        self.check_size(n)?;
        if n < 0 || k < 0 || k > n || r < 0 || r > n - k || d < 0 || d > n {
            return Ok(QTRational::zero());
        }
        let key = (n, k, r, d);
        if let Some(v) = self.table.get(key) {
            return Ok(v);
        }
        let f = self.theta_nabla_e(n as u32, k as u32, r as u32)?;
        let v = self.pairing_e_h(&f, n as u32, d as u32)?;
        self.table.insert(key, v.clone());
        Ok(v)
    }

    /// `<Theta_{e_k} nabla ([n-k]_q/[r]_q) E_{n-k,r}, e_{n-d} h_d>`, with the
    /// factor read as `1` when `n - k = r = 0`.
    pub fn lhs_square(&self, n: i64, k: i64, r: i64, d: i64) -> Result<QTRational> {
        self.check_size(n)?;
        if n < 0 || k < 0 || k > n || r < 0 || r > n - k || d < 0 || d > n || (r == 0 && n > k) {
            return Ok(QTRational::zero());
        }
        let key = (n, k, r, d);
        if let Some(v) = self.square.get(key) {
            return Ok(v);
        }
        let l = &self.lambda;
        let mut e = l.e_nk((n - k) as u32, r)?;
        if r > 0 {
            let factor = &QTRational::from_mpoly(&q_int((n - k) as u32)) / &QTRational::from_mpoly(&q_int(r as u32));
            e = e.scale(&factor);
        }
        let f = l.theta(&l.e(k as u32), &l.nabla(&e)?)?;
        let v = self.pairing_e_h(&f, n as u32, d as u32)?;
        self.square.insert(key, v.clone());
        Ok(v)
    }

    /// `<Delta_{h_a} Theta_{e_k} nabla E_{n-k,r}, e_n>`; zero outside range.
    pub fn extended_value(&self, a: i64, n: i64, k: i64, r: i64) -> Result<QTRational> {
        self.check_size(n.max(a))?;
        if a < 0 || n < 0 || k < 0 || k > n || r < 0 || r > n - k {
            return Ok(QTRational::zero());
        }
        cached(&self.extended, (a, n, k, r), || {
            let l = &self.lambda;
            let f = self.theta_nabla_e(n as u32, k as u32, r as u32)?;
            let g = l.delta(&l.h(a as u32), &f)?;
            l.hall_inner(&g, &l.e(n as u32))
        })
    }

    /// q,t-enumerator of a family, memoized.
    pub fn enumerator(&self, family: Family, p: Params) -> Result<Arc<Enumerator>> {
        cached(&self.enums, (family, p), || Ok(Arc::new(qt_enumerator(family, p)?)))
    }

    /// `D(n\r)^{.k,od}` (or the square analogue) by enumeration; zero outside
    /// range.
    pub fn refined_count(&self, family: Family, n: i64, k: i64, r: i64, d: i64) -> Result<MPoly> {
        if n < 0 || k < 0 || r < 0 || d < 0 || k > n || d > n || r > n {
            return Ok(MPoly::zero());
        }
        Ok(self.enumerator(family, Params::new(0, n as usize, k as usize, d as usize))?.refined_at(r as usize))
    }

    /// `D(a, n\r)^{.k}` by enumeration; zero outside range.
    pub fn extended_count(&self, a: i64, n: i64, k: i64, r: i64) -> Result<MPoly> {
        if a < 0 || n < 0 || k < 0 || r < 0 || k > n || r > n {
            return Ok(MPoly::zero());
        }
        Ok(self.enumerator(Family::D, Params::new(a as usize, n as usize, k as usize, 0))?.refined_at(r as usize))
    }

    /// Right side of the algebraic Dyck recursion, from table values.
    pub fn rhs_alg_recursion(&self, n: i64, k: i64, r: i64, d: i64) -> Result<QTRational> {
        self.rhs_alg_recursion_with(n, k, r, d, Indexing::PeakCount)
    }

    pub fn rhs_alg_recursion_with(&self, n: i64, k: i64, r: i64, d: i64, ix: Indexing) -> Result<QTRational> {
        let mut err = None;
        let v = dyck_recursion(n, k, r, d, ix, |a, b, c, e| self.table_poly(self.lhs_schroeder(a, b, c, e), &mut err));
        finish(v, err)
    }

    /// Right side of the algebraic square recursion, from table values.
    pub fn rhs_alg_recursion_square(&self, n: i64, k: i64, r: i64, d: i64) -> Result<QTRational> {
        self.rhs_alg_recursion_square_with(n, k, r, d, Indexing::PeakCount)
    }

    pub fn rhs_alg_recursion_square_with(&self, n: i64, k: i64, r: i64, d: i64, ix: Indexing) -> Result<QTRational> {
        let dyck = poly_of(&self.lhs_schroeder(n, k, r, d)?);
        let mut err = None;
        let v = square_recursion(n, k, r, d, dyck, ix, |a, b, c, e| self.table_poly(self.lhs_square(a, b, c, e), &mut err));
        finish(v, err)
    }

    /// Right side of the combinatorial Dyck recursion, from enumerations of
    /// smaller sets.
    pub fn rhs_comb_recursion(&self, n: i64, k: i64, r: i64, d: i64) -> Result<MPoly> {
        self.rhs_comb_recursion_with(n, k, r, d, Indexing::PeakCount)
    }

    pub fn rhs_comb_recursion_with(&self, n: i64, k: i64, r: i64, d: i64, ix: Indexing) -> Result<MPoly> {
        let mut err = None;
        let v = dyck_recursion(n, k, r, d, ix, |a, b, c, e| record(self.refined_count(Family::D, a, b, c, e), &mut err));
        finish(v, err).map(|v| poly_of(&v))
    }

    /// Right side of the combinatorial square recursion.
    pub fn rhs_comb_recursion_square(&self, n: i64, k: i64, r: i64, d: i64) -> Result<MPoly> {
        self.rhs_comb_recursion_square_with(n, k, r, d, Indexing::PeakCount)
    }

    pub fn rhs_comb_recursion_square_with(&self, n: i64, k: i64, r: i64, d: i64, ix: Indexing) -> Result<MPoly> {
        let dyck = self.refined_count(Family::D, n, k, r, d)?;
        let mut err = None;
        let v = square_recursion(n, k, r, d, dyck, ix, |a, b, c, e| {
            record(self.refined_count(Family::SQPrime, a, b, c, e), &mut err)
        });
        finish(v, err).map(|v| poly_of(&v))
    }

    fn table_poly(&self, v: Result<QTRational>, err: &mut Option<Error>) -> MPoly {
        match v {
            Ok(v) => poly_of(&v),
            Err(e) => {
                err.get_or_insert(e);
                MPoly::zero()
            }
        }
    }
}

fn record(v: Result<MPoly>, err: &mut Option<Error>) -> MPoly {
    v.unwrap_or_else(|e| {
        err.get_or_insert(e);
        MPoly::zero()
    })
}

fn finish(v: impl Into<QTRational>, err: Option<Error>) -> Result<QTRational> {
    match err {
        Some(e) => Err(e),
        None => Ok(v.into()),
    }
}

/// Table values are polynomials by construction.
fn poly_of(v: &QTRational) -> MPoly {
    v.as_mpoly().expect("polynomial value")
}
