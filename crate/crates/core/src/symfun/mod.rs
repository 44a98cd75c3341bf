//! Symmetric functions over `Q(q, t)` up to a fixed degree bound.
//!
//! Everything is computed in the power-sum basis; the other bases are reached
//! through per-degree transition tables built on first use. [`Lambda`] owns the
//! tables and is shared read-only between threads.

mod macdonald;
mod operators;
mod partition;
mod plethysm;
mod symfunc;
mod tables;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;

pub use macdonald::{b_mu, pi_mu, w_mu};
pub use partition::{partitions, CellGeometry, Partition};
pub use plethysm::AlphabetRule;
pub use symfunc::{Basis, SymFunc};
pub use tables::character;

use crate::error::{Error, Result};
use crate::exactalg::QTRational;
use macdonald::MacdonaldDegree;
use tables::DegreeTables;

/// Default degree bound.
pub const DEFAULT_DEGREE_BOUND: u32 = 8;

/// Result of [`Lambda::plethysm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlethysmValue {
    Function(SymFunc),
    Scalar(QTRational),
}

/// Symmetric-function context with degree bound `N`.
pub struct Lambda {
    bound: u32,
    tables: Vec<OnceLock<DegreeTables>>,
    macdonald: Vec<OnceLock<MacdonaldDegree>>,
    e_family: Vec<OnceLock<Vec<SymFunc>>>,
}

impl Default for Lambda {
    fn default() -> Self {
        Self::new(DEFAULT_DEGREE_BOUND)
    }
}

impl std::fmt::Debug for Lambda {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lambda(bound = {})", self.bound)
    }
}

/// Dense power-sum coordinates of one homogeneous component.
pub(crate) type Dense = Vec<QTRational>;

impl Lambda {
    pub fn new(bound: u32) -> Self {
        let slots = bound as usize + 1;
        Lambda {
            bound,
            tables: (0..slots).map(|_| OnceLock::new()).collect(),
            macdonald: (0..slots).map(|_| OnceLock::new()).collect(),
            e_family: (0..slots).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn check_degree(&self, n: u32) -> Result<()> {
        if n > self.bound {
            return Err(Error::DegreeBound { degree: n as usize, bound: self.bound as usize });
        }
        Ok(())
    }

    fn check(&self, f: &SymFunc) -> Result<()> {
        match f.max_degree() {
            Some(n) => self.check_degree(n),
            None => Ok(()),
        }
    }

    pub(crate) fn tables(&self, n: u32) -> Result<&DegreeTables> {
        self.check_degree(n)?;
        Ok(self.tables[n as usize].get_or_init(|| DegreeTables::build(n)))
    }

    pub(crate) fn macdonald_data(&self, n: u32) -> Result<&MacdonaldDegree> {
        let t = self.tables(n)?;
        Ok(self.macdonald[n as usize].get_or_init(|| MacdonaldDegree::build(n, t)))
    }

    /// Partitions of `n` in the table order (decreasing lexicographic).
    pub fn partitions(&self, n: u32) -> Result<&[Partition]> {
        Ok(&self.tables(n)?.parts)
    }

    // ---- constructors -------------------------------------------------

    pub fn e(&self, n: u32) -> SymFunc {
        SymFunc::basis_element(Basis::E, Partition::row(n))
    }

    pub fn h(&self, n: u32) -> SymFunc {
        SymFunc::basis_element(Basis::H, Partition::row(n))
    }

    pub fn p(&self, n: u32) -> SymFunc {
        SymFunc::basis_element(Basis::P, Partition::row(n))
    }

    pub fn s(&self, lam: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::S, lam.clone())
    }

    pub fn m(&self, lam: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::M, lam.clone())
    }

    /// `H~_mu` as a basis element of the Macdonald basis.
    pub fn ht(&self, mu: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Ht, mu.clone())
    }

    pub fn one(&self) -> SymFunc {
        SymFunc::one(Basis::P)
    }

    // ---- dense coordinates --------------------------------------------

    /// Power-sum coordinates of the degree-`n` component of `f`.
    pub(crate) fn dense(&self, f: &SymFunc, n: u32) -> Result<Dense> {
        let t = self.tables(n)?;
        let mut acc = vec![QTRational::zero(); t.len()];
        match f.basis() {
            Basis::Ht => {
                let mac = self.macdonald_data(n)?;
                for (lam, c) in f.terms().iter().filter(|(l, _)| l.size() == n) {
                    let row = &mac.ht_p[t.index[lam]];
                    for (a, x) in acc.iter_mut().zip(row) {
                        if !x.is_zero() {
                            *a = &*a + &(c * x);
                        }
                    }
                }
            }
            b => {
                let rows = t.to_p(b);
                for (lam, c) in f.terms().iter().filter(|(l, _)| l.size() == n) {
                    for (r, x) in &rows[t.index[lam]] {
                        acc[*r] = &acc[*r] + &c.scale_ratio(x);
                    }
                }
            }
        }
        Ok(acc)
    }

    pub(crate) fn from_dense(&self, n: u32, v: &[QTRational]) -> Result<SymFunc> {
        let t = self.tables(n)?;
        Ok(SymFunc::from_terms(Basis::P, t.parts.iter().cloned().zip(v.iter().cloned())))
    }

    /// Degrees present in `f` together with their dense power-sum coordinates.
    pub(crate) fn dense_components(&self, f: &SymFunc) -> Result<Vec<(u32, Dense)>> {
        self.check(f)?;
        f.degrees().into_iter().map(|n| Ok((n, self.dense(f, n)?))).collect()
    }

    // ---- conversions ---------------------------------------------------

    pub fn to_p(&self, f: &SymFunc) -> Result<SymFunc> {
        if f.basis() == Basis::P {
            self.check(f)?;
            return Ok(f.clone());
        }
        let mut out = BTreeMap::new();
        for (n, v) in self.dense_components(f)? {
            out.extend(self.from_dense(n, &v)?.into_terms());
        }
        Ok(SymFunc::with_basis(Basis::P, out))
    }

    /// Re-expresses `f` in `target`.
    pub fn convert(&self, f: &SymFunc, target: Basis) -> Result<SymFunc> {
        self.check(f)?;
        if f.basis() == target {
            return Ok(f.clone());
        }
        if target == Basis::P {
            return self.to_p(f);
        }
        let mut terms = Vec::new();
        for (n, v) in self.dense_components(f)? {
            let t = self.tables(n)?;
            if target == Basis::Ht {
                let c = self.macdonald_coords(n, &v)?;
                terms.extend(t.parts.iter().cloned().zip(c));
                continue;
            }
            let rows = t.from_p(target);
            let mut acc = vec![QTRational::zero(); t.len()];
            for (r, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (l, x) in &rows[r] {
                    acc[*l] = &acc[*l] + &c.scale_ratio(x);
                }
            }
            terms.extend(t.parts.iter().cloned().zip(acc));
        }
        Ok(SymFunc::from_terms(target, terms))
    }

    // ---- ring structure ------------------------------------------------

    /// `f + g`, in the basis of `f`.
    pub fn add(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        if f.basis() == g.basis() {
            return Ok(f.add(g));
        }
        let gp = self.convert(g, f.basis())?;
        Ok(f.add(&gp))
    }

    pub fn sub(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        self.add(f, &g.neg())
    }

    /// Product, computed in the power sums (`p_lambda p_mu = p_{lambda cup mu}`).
    pub fn multiply(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        if let (Some(a), Some(b)) = (f.max_degree(), g.max_degree()) {
            self.check_degree(a + b)?;
        }
        let fp = self.to_p(f)?;
        let gp = self.to_p(g)?;
        let mut terms = Vec::with_capacity(fp.terms().len() * gp.terms().len());
        for (a, x) in fp.terms() {
            for (b, y) in gp.terms() {
                terms.push((a.union(b), x * y));
            }
        }
        Ok(SymFunc::from_terms(Basis::P, terms))
    }

    /// Hall scalar product.
    pub fn hall_inner(&self, f: &SymFunc, g: &SymFunc) -> Result<QTRational> {
        let fp = self.to_p(f)?;
        let gp = self.to_p(g)?;
        let mut acc = QTRational::zero();
        for (lam, x) in fp.terms() {
            let y = gp.coeff(lam);
            if !y.is_zero() {
                acc = &acc + &(x * &y).scale_int(&lam.z());
            }
        }
        Ok(acc)
    }

    /// Star scalar product `<f, omega g[M X]>`.
    pub fn star_inner(&self, f: &SymFunc, g: &SymFunc) -> Result<QTRational> {
        let fp = self.to_p(f)?;
        let gp = self.to_p(g)?;
        let mut acc = QTRational::zero();
        for (lam, x) in fp.terms() {
            let y = gp.coeff(lam);
            if !y.is_zero() {
                acc = &acc + &(&(x * &y) * &star_weight(lam));
            }
        }
        Ok(acc)
    }

    /// Applies an alphabet rule; a scalar when `with_x` is false.
    pub fn plethysm(&self, f: &SymFunc, rule: &AlphabetRule) -> Result<PlethysmValue> {
        if rule.with_x() {
            self.plethysm_x(f, rule).map(PlethysmValue::Function)
        } else {
            self.plethysm_scalar(f, rule).map(PlethysmValue::Scalar)
        }
    }

    /// `f[A X]` for `rule.with_x() == true`.
    pub fn plethysm_x(&self, f: &SymFunc, rule: &AlphabetRule) -> Result<SymFunc> {
        let fp = self.to_p(f)?;
        Ok(SymFunc::from_terms(
            Basis::P,
            fp.terms().iter().map(|(lam, c)| (lam.clone(), c * &rule.scale_partition(lam.parts()))),
        ))
    }

    /// `f[A]`, the full evaluation.
    pub fn plethysm_scalar(&self, f: &SymFunc, rule: &AlphabetRule) -> Result<QTRational> {
        let fp = self.to_p(f)?;
        Ok(fp.terms().iter().map(|(lam, c)| c * &rule.scale_partition(lam.parts())).sum())
    }

    /// `f[A]` for an alphabet given as a rational function.
    pub fn eval_alphabet(&self, f: &SymFunc, a: &QTRational) -> Result<QTRational> {
        let fp = self.to_p(f)?;
        let top = fp.terms().keys().flat_map(|l| l.parts().first().copied()).max().unwrap_or(0);
        let rule = AlphabetRule::from_alphabet(a, top, false);
        self.plethysm_scalar(&fp, &rule)
    }

    /// `omega`: `p_k -> (-1)^{k-1} p_k`.
    pub fn omega(&self, f: &SymFunc) -> Result<SymFunc> {
        let fp = self.to_p(f)?;
        Ok(SymFunc::from_terms(
            Basis::P,
            fp.terms().iter().map(|(lam, c)| (lam.clone(), if lam.sign() < 0 { -c } else { c.clone() })),
        ))
    }
}

/// `z_rho eps_rho prod_i (1 - q^{rho_i})(1 - t^{rho_i})`: the star product is
/// diagonal in the power sums with these weights.
pub(crate) fn star_weight(rho: &Partition) -> QTRational {
    let one = QTRational::one();
    let mut acc = QTRational::from_int(rho.z() * BigInt::from(rho.sign()));
    for &k in rho.parts() {
        acc = &acc * &(&(&one - &QTRational::q().pow(k)) * &(&one - &QTRational::t().pow(k)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qt;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn schur_conversions() {
        let l = Lambda::new(4);
        let e2 = l.convert(&l.e(2), Basis::S).unwrap();
        assert_eq!(e2, l.s(&p(&[1, 1])));
        let p2 = l.convert(&l.p(2), Basis::S).unwrap();
        assert_eq!(p2, SymFunc::from_terms(Basis::S, [(p(&[2]), qt("1")), (p(&[1, 1]), qt("-1"))]));
    }

    #[test]
    fn h3_in_power_sums() {
        let l = Lambda::new(3);
        let h3 = l.to_p(&l.h(3)).unwrap();
        let expect = SymFunc::from_terms(
            Basis::P,
            [(p(&[1, 1, 1]), qt("1/6")), (p(&[2, 1]), qt("1/2")), (p(&[3]), qt("1/3"))],
        );
        assert_eq!(h3, expect);
    }

    #[test]
    fn round_trips_through_every_basis() {
        let l = Lambda::new(5);
        let f = SymFunc::from_terms(Basis::S, [(p(&[3, 2]), qt("q - t")), (p(&[2, 1]), qt("1/(1-q)")), (p(&[1]), qt("2"))]);
        for b in [Basis::M, Basis::E, Basis::H, Basis::P] {
            let g = l.convert(&f, b).unwrap();
            assert_eq!(l.convert(&g, Basis::S).unwrap(), f, "via {b}");
        }
    }

    #[test]
    fn products_and_pieri() {
        let l = Lambda::new(3);
        let prod = l.multiply(&l.e(1), &l.h(1)).unwrap();
        let s = l.convert(&prod, Basis::S).unwrap();
        assert_eq!(s, SymFunc::from_terms(Basis::S, [(p(&[2]), qt("1")), (p(&[1, 1]), qt("1"))]));
        let unit = l.multiply(&l.s(&p(&[2, 1])), &l.one()).unwrap();
        assert_eq!(l.convert(&unit, Basis::S).unwrap(), l.s(&p(&[2, 1])));
    }

    #[test]
    fn scalar_products() {
        let l = Lambda::new(3);
        assert!(l.hall_inner(&l.s(&p(&[2, 1])), &l.s(&p(&[2, 1]))).unwrap().is_one());
        assert!(l.hall_inner(&l.s(&p(&[2])), &l.s(&p(&[1, 1]))).unwrap().is_zero());
        assert_eq!(l.hall_inner(&l.p(2), &l.p(2)).unwrap(), qt("2"));
        assert_eq!(l.star_inner(&l.p(1), &l.p(1)).unwrap(), qt("(1-q)*(1-t)"));
    }

    #[test]
    fn omega_swaps_e_and_h() {
        let l = Lambda::new(4);
        let w = l.omega(&l.e(3)).unwrap();
        assert_eq!(l.convert(&w, Basis::H).unwrap(), l.h(3));
        let s21 = l.s(&p(&[2, 1]));
        assert_eq!(l.convert(&l.omega(&s21).unwrap(), Basis::S).unwrap(), s21);
        let s31 = l.s(&p(&[3, 1]));
        assert_eq!(l.convert(&l.omega(&s31).unwrap(), Basis::S).unwrap(), l.s(&p(&[2, 1, 1])));
    }

    #[test]
    fn plethysm_rules() {
        let l = Lambda::new(3);
        let b2 = qt("1 + q");
        assert_eq!(l.eval_alphabet(&l.e(1), &b2).unwrap(), b2);
        let rule = AlphabetRule::times_m(3);
        let v = l.plethysm_x(&l.p(2), &rule).unwrap();
        assert_eq!(v.coeff(&p(&[2])), qt("(1-q^2)*(1-t^2)"));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let l = Lambda::new(2);
        assert!(matches!(l.to_p(&l.e(3)), Err(Error::DegreeBound { degree: 3, bound: 2 })));
        assert!(l.multiply(&l.e(2), &l.e(1)).is_err());
    }
}
