use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::Error;
use crate::exactalg::{parse_rational, QTRational};

/// Basis tag of a [`SymFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
    /// Modified Macdonald polynomials.
    #[serde(rename = "Ht")]
    Ht,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::Ht];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::Ht => "Ht",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s || (s == "H~" && *b == Basis::Ht))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown basis {s:?}")))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Finite linear combination of basis elements with `Q(q, t)` coefficients.
///
/// No zero coefficients are stored. Components of different degree may coexist;
/// each partition carries its own degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QTRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    /// The constant `c` (coefficient of the empty partition).
    pub fn constant(basis: Basis, c: QTRational) -> Self {
        Self::from_terms(basis, [(Partition::empty(), c)])
    }

    pub fn one(basis: Basis) -> Self {
        Self::constant(basis, QTRational::one())
    }

    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        Self::from_terms(basis, [(lam, QTRational::one())])
    }

    /// Sums repeated partitions and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Partition, QTRational)>>(basis: Basis, iter: I) -> Self {
        let mut terms: BTreeMap<Partition, QTRational> = BTreeMap::new();
        for (lam, c) in iter {
            if c.is_zero() {
                continue;
            }
            match terms.get_mut(&lam) {
                Some(x) => {
                    *x = &*x + &c;
                    if x.is_zero() {
                        terms.remove(&lam);
                    }
                }
                None => {
                    terms.insert(lam, c);
                }
            }
        }
        SymFunc { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTRational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, QTRational> {
        self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> QTRational {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn component(&self, n: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &QTRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(l, x)| (l.clone(), -x)).collect() }
    }

    /// Sum of two functions in the same basis.
    ///
    /// # Panics
    /// If the bases differ; convert first.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, other.basis, "adding symmetric functions in different bases");
        Self::from_terms(self.basis, self.terms.iter().chain(other.terms.iter()).map(|(l, c)| (l.clone(), c.clone())))
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    /// True when no coefficient mentions `z`.
    pub fn is_z_free(&self) -> bool {
        self.terms.values().all(|c| !c.contains_var(crate::exactalg::Var::Z))
    }

    pub(crate) fn with_basis(basis: Basis, terms: BTreeMap<Partition, QTRational>) -> SymFunc {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        SymFunc { basis, terms }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SymFuncJson::from(self)).expect("serialisable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFunc, Error> {
        let raw: SymFuncJson = serde_json::from_value(v.clone()).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for SymFunc {
    /// `coeff*b[lambda]` terms, ascending degree, e.g. `s[2] + (q)*s[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}{}", self.basis, lam)?;
            } else {
                write!(f, "({})*{}{}", c, self.basis, lam)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        SymFuncJson {
            basis: f.basis,
            terms: f
                .terms
                .iter()
                .map(|(l, c)| TermJson { partition: l.clone(), coeff: c.to_canonical_string() })
                .collect(),
        }
    }
}

impl TryFrom<SymFuncJson> for SymFunc {
    type Error = Error;
    fn try_from(raw: SymFuncJson) -> Result<Self, Error> {
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            terms.push((t.partition, parse_rational(&t.coeff)?));
        }
        Ok(SymFunc::from_terms(raw.basis, terms))
    }
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        SymFuncJson::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qt;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = SymFunc::from_terms(Basis::S, [(p(&[2]), qt("q")), (p(&[2]), qt("-q")), (p(&[1, 1]), qt("0"))]);
        assert!(f.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::from_terms(Basis::S, [(p(&[2, 1]), qt("q*t + 1")), (p(&[3]), qt("1/(1-q)"))]);
        let v = f.to_json();
        assert_eq!(v["basis"], "s");
        assert_eq!(v["terms"][1]["partition"], serde_json::json!([2, 1]));
        assert_eq!(v["terms"][1]["coeff"], "q*t + 1");
        assert_eq!(SymFunc::from_json(&v).unwrap(), f);
    }

    #[test]
    fn display_orders_by_degree() {
        let f = SymFunc::from_terms(Basis::S, [(p(&[1, 1]), qt("q")), (p(&[2]), qt("1")), (p(&[1]), qt("2"))]);
        assert_eq!(f.to_string(), "(2)*s[1] + s[2] + (q)*s[1,1]");
    }
}
