use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::decorated::DecoratedPath;
use super::enumerate::{for_each, for_each_with_content, Family, Params};
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Monomial, QTRational};
use crate::symfun::{partitions, Basis, Partition, SymFunc};

/// `sum q^dinv t^area` over a family, with the refinement by `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerator {
    pub total: MPoly,
    /// `r` -> contribution of the elements with `r` touches.
    pub refined: BTreeMap<usize, MPoly>,
    pub count: u64,
}

impl Enumerator {
    pub fn refined_at(&self, r: usize) -> MPoly {
        self.refined.get(&r).cloned().unwrap_or_else(MPoly::zero)
    }
}

/// Weight tally keyed by `(r, dinv, area)`.
#[derive(Default)]
pub(crate) struct Tally {
    counts: HashMap<(usize, u32, u32), u64>,
}

impl Tally {
    pub fn add(&mut self, x: &DecoratedPath) {
        *self.counts.entry((touches(x), x.dinv(), x.area())).or_insert(0) += 1;
    }

    pub fn finish(self) -> Enumerator {
        let mut refined: BTreeMap<usize, Vec<(Monomial, BigRational)>> = BTreeMap::new();
        let mut count = 0;
        for ((r, dinv, area), c) in self.counts {
            count += c;
            refined.entry(r).or_default().push((Monomial::new(dinv, area, 0), BigRational::from_integer(c.into())));
        }
        let refined: BTreeMap<usize, MPoly> = refined.into_iter().map(|(r, t)| (r, MPoly::from_terms(t))).collect();
        let total = refined.values().fold(MPoly::zero(), |acc, p| &acc + p);
        Enumerator { total, refined, count }
    }
}

/// The refinement statistic `r`: rows on the base diagonal that are not
/// decorated valleys. Zero-labelled rows are not counted.
pub fn touches(x: &DecoratedPath) -> usize {
    x.base_touches(true)
}

/// q,t-enumerator of a family.
pub fn qt_enumerator(family: Family, p: Params) -> Result<Enumerator> {
    let mut tally = Tally::default();
    for_each(family, p, p.n as u32, |x| tally.add(x))?;
    Ok(tally.finish())
}

fn labelled_only(family: Family) -> Result<()> {
    if family.is_peak_model() {
        return Err(Error::InvalidArgument(format!("family {family} is not labelled")));
    }
    Ok(())
}

/// `sum q^dinv t^area x^pi` in the monomial basis, refined by `r`.
///
/// The coefficient of `m_lambda` is read off the labellings with content
/// exactly `x_1^{lambda_1} x_2^{lambda_2} ...`; this is the expansion only
/// when the sum is symmetric (see [`symmetry_check`]).
pub fn monomial_expansion_refined(family: Family, m: usize, n: usize, k: usize) -> Result<BTreeMap<usize, SymFunc>> {
    labelled_only(family)?;
    let mut acc: BTreeMap<usize, Vec<(Partition, QTRational)>> = BTreeMap::new();
    for lam in partitions(n as u32) {
        let mut counts = vec![m as u32];
        counts.extend_from_slice(lam.parts());
        let mut tally = Tally::default();
        for_each_with_content(family, &counts, k, |x| tally.add(x))?;
        for (r, poly) in tally.finish().refined {
            acc.entry(r).or_default().push((lam.clone(), QTRational::from_mpoly(&poly)));
        }
    }
    Ok(acc.into_iter().map(|(r, t)| (r, SymFunc::from_terms(Basis::M, t))).collect())
}

/// Unrefined [`monomial_expansion_refined`].
pub fn monomial_expansion(family: Family, m: usize, n: usize, k: usize) -> Result<SymFunc> {
    Ok(monomial_expansion_refined(family, m, n, k)?.values().fold(SymFunc::zero(Basis::M), |a, b| a.add(b)))
}

/// A labelled sum as a polynomial in `x_1, ..., x_N` with q,t-coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledSum {
    pub n_vars: usize,
    pub terms: BTreeMap<Vec<u32>, MPoly>,
}

impl LabelledSum {
    /// Expands the family with positive labels in `1..=n_vars`, one term per
    /// exponent vector, without aggregating contents.
    pub fn expand(family: Family, m: usize, n: usize, k: usize, n_vars: usize) -> Result<Self> {
        labelled_only(family)?;
        let mut counts: HashMap<(Vec<u32>, u32, u32), u64> = HashMap::new();
        for_each(family, Params::new(m, n, k, 0), n_vars as u32, |x| {
            let mut e = x.content();
            e.resize(n_vars, 0);
            *counts.entry((e, x.dinv(), x.area())).or_insert(0) += 1;
        })?;
        let mut grouped: BTreeMap<Vec<u32>, Vec<(Monomial, BigRational)>> = BTreeMap::new();
        for ((e, dinv, area), c) in counts {
            grouped.entry(e).or_default().push((Monomial::new(dinv, area, 0), BigRational::from_integer(BigInt::from(c))));
        }
        let terms = grouped.into_iter().map(|(e, t)| (e, MPoly::from_terms(t))).filter(|(_, p)| !p.is_zero()).collect();
        Ok(LabelledSum { n_vars, terms })
    }

    /// Invariance under every adjacent transposition `x_i <-> x_{i+1}`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n_vars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    /// Coefficient of `x^alpha`.
    pub fn coeff(&self, alpha: &[u32]) -> MPoly {
        let mut e = alpha.to_vec();
        e.resize(self.n_vars, 0);
        self.terms.get(&e).cloned().unwrap_or_else(MPoly::zero)
    }

    /// Value at `q = t = 1` and all `x_i = 1`.
    pub fn cardinality(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, p| a + p.at_one())
    }
}

/// Expands the labelled family in `n_vars` variables and tests symmetry.
pub fn symmetry_check(family: Family, m: usize, n: usize, k: usize, n_vars: usize) -> Result<bool> {
    if n_vars < n {
        return Err(Error::InvalidArgument(format!("{n_vars} variables for degree {n}")));
    }
    Ok(LabelledSum::expand(family, m, n, k, n_vars)?.is_symmetric())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly;

    fn poly(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn size_two_enumerators() {
        let e = qt_enumerator(Family::D, Params::new(0, 2, 0, 0)).unwrap();
        assert_eq!(e.total, poly("q + t"));
        assert_eq!(e.refined_at(1), poly("t"));
        assert_eq!(e.refined_at(2), poly("q"));
        let e = qt_enumerator(Family::D, Params::new(0, 2, 0, 2)).unwrap();
        assert_eq!(e.total, poly("1"));
        let e = qt_enumerator(Family::D, Params::new(0, 0, 0, 0)).unwrap();
        assert_eq!(e.total, poly("1"));
        assert_eq!(e.refined.keys().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn catalan_three() {
        let e = qt_enumerator(Family::D, Params::new(0, 3, 0, 0)).unwrap();
        assert_eq!(e.total, poly("q^3 + q^2*t + q*t^2 + t^3 + q*t"));
    }

    #[test]
    fn single_box() {
        let f = monomial_expansion(Family::LD, 0, 1, 0).unwrap();
        assert_eq!(f, SymFunc::basis_element(Basis::M, Partition::row(1)));
    }

    #[test]
    fn small_symmetry() {
        assert!(symmetry_check(Family::LD, 0, 2, 0, 3).unwrap());
        let s = LabelledSum::expand(Family::LD, 0, 2, 0, 3).unwrap();
        assert_eq!(s.coeff(&[1, 1]), s.coeff(&[0, 1, 1]));
    }
}
