use std::collections::BTreeMap;

use super::macdonald::{b_mu, pi_mu};
use super::partition::Partition;
use super::plethysm::AlphabetRule;
use super::{Basis, Lambda, SymFunc};
use crate::error::{Error, Result};
use crate::exactalg::{q_pochhammer_rational, Monomial, QTRational, Var, ZPoly};

impl Lambda {
    /// Operator diagonal in the Macdonald basis, `H~_mu -> eig(mu) H~_mu`.
    pub fn diagonal<F>(&self, f: &SymFunc, eig: F) -> Result<SymFunc>
    where
        F: Fn(&Partition) -> Result<QTRational>,
    {
        let mut terms = BTreeMap::new();
        for (n, v) in self.dense_components(f)? {
            let t = self.tables(n)?;
            let mut c = self.macdonald_coords(n, &v)?;
            for (cm, mu) in c.iter_mut().zip(&t.parts) {
                if !cm.is_zero() {
                    *cm = &*cm * &eig(mu)?;
                }
            }
            let back = self.from_macdonald_coords(n, &c)?;
            terms.extend(self.from_dense(n, &back)?.into_terms());
        }
        Ok(SymFunc::with_basis(Basis::P, terms))
    }

    /// `nabla H~_mu = q^{n(mu')} t^{n(mu)} H~_mu`.
    pub fn nabla(&self, f: &SymFunc) -> Result<SymFunc> {
        self.diagonal(f, |mu| Ok(nabla_eigenvalue(mu)))
    }

    /// `Delta_g H~_mu = g[B_mu] H~_mu`.
    pub fn delta(&self, g: &SymFunc, f: &SymFunc) -> Result<SymFunc> {
        let gp = self.to_p(g)?;
        self.diagonal(f, |mu| self.eval_alphabet(&gp, &b_mu(mu)))
    }

    /// `Delta'_g H~_mu = g[B_mu - 1] H~_mu`.
    pub fn delta_prime(&self, g: &SymFunc, f: &SymFunc) -> Result<SymFunc> {
        let gp = self.to_p(g)?;
        let one = QTRational::one();
        self.diagonal(f, |mu| self.eval_alphabet(&gp, &(&b_mu(mu) - &one)))
    }

    /// `Pi H~_mu = Pi_mu H~_mu`, or its inverse.
    pub fn pi_op(&self, f: &SymFunc, inverse: bool) -> Result<SymFunc> {
        if inverse {
            self.diagonal(f, |mu| Ok(pi_mu(mu).inv()?))
        } else {
            self.diagonal(f, |mu| Ok(pi_mu(mu)))
        }
    }

    /// `Theta_f F`, extended bilinearly over homogeneous components.
    ///
    /// For `f` of degree `k` and `F` of degree `m`: zero when `k >= 1, m = 0`;
    /// `f F` when `k = m = 0`; otherwise `Pi(f[X/M] Pi^{-1} F)`.
    pub fn theta(&self, f: &SymFunc, big_f: &SymFunc) -> Result<SymFunc> {
        let fp = self.to_p(f)?;
        let gp = self.to_p(big_f)?;
        let mut acc = SymFunc::zero(Basis::P);
        for k in fp.degrees() {
            let fk = fp.component(k);
            for m in gp.degrees() {
                let gm = gp.component(m);
                let part = if k >= 1 && m == 0 {
                    continue;
                } else if k == 0 {
                    // f is a scalar c and Pi(c Pi^{-1} F) = c F.
                    self.multiply(&fk, &gm)?
                } else {
                    self.check_degree(k + m)?;
                    let star = self.plethysm_x(&fk, &AlphabetRule::star(k))?;
                    let inner = self.multiply(&star, &self.pi_op(&gm, true)?)?;
                    self.pi_op(&inner, false)?
                };
                acc = acc.add(&part);
            }
        }
        Ok(acc)
    }

    /// `h_m^perp`, by the horizontal-strip rule on Schur functions. Result in `s`.
    pub fn h_perp(&self, m: u32, f: &SymFunc) -> Result<SymFunc> {
        let fs = self.convert(f, Basis::S)?;
        let mut terms = Vec::new();
        for (lam, c) in fs.terms() {
            if lam.size() < m {
                continue;
            }
            for mu in self.partitions(lam.size() - m)? {
                if lam.is_horizontal_strip_over(mu) {
                    terms.push((mu.clone(), c.clone()));
                }
            }
        }
        Ok(SymFunc::from_terms(Basis::S, terms))
    }

    /// `[E_{n,0}, ..., E_{n,n}]` in the power sums.
    ///
    /// Expands `e_n[X (1 - z)/(1 - q)]` in `p` and peels off the top power of
    /// `z` against `(z;q)_k/(q;q)_k`, whose leading `z`-coefficient is
    /// `(-1)^k q^{k(k-1)/2}/(q;q)_k`.
    pub fn e_family(&self, n: u32) -> Result<Vec<SymFunc>> {
        self.check_degree(n)?;
        let cached = self.e_family[n as usize].get_or_init(|| self.build_e_family(n).expect("within bound"));
        Ok(cached.clone())
    }

    /// `E_{n,k}`; zero outside `0 <= k <= n`.
    pub fn e_nk(&self, n: u32, k: i64) -> Result<SymFunc> {
        if k < 0 || k > n as i64 {
            self.check_degree(n)?;
            return Ok(SymFunc::zero(Basis::P));
        }
        Ok(self.e_family(n)?[k as usize].clone())
    }

    fn build_e_family(&self, n: u32) -> Result<Vec<SymFunc>> {
        let alphabet = qt_alphabet_e_family();
        let rule = AlphabetRule::from_alphabet(&alphabet, n.max(1), true);
        let expanded = self.plethysm_x(&self.e(n), &rule)?;
        let t = self.tables(n)?;
        let mut rest: Vec<QTRational> = t.parts.iter().map(|rho| expanded.coeff(rho)).collect();
        let mut out = vec![SymFunc::zero(Basis::P); n as usize + 1];
        let q = QTRational::q();
        for k in (0..=n).rev() {
            let qq = q_pochhammer_rational(&q, k);
            let b_k = &q_pochhammer_rational(&QTRational::z(), k) / &qq;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let lead = &QTRational::from_zpoly(ZPoly::term(
                Monomial::new(k * k.saturating_sub(1) / 2, 0, 0),
                sign.into(),
            )) / &qq;
            let mut coeffs = Vec::with_capacity(rest.len());
            for r in rest.iter_mut() {
                let c = &z_coefficient(r, k) / &lead;
                if !c.is_zero() {
                    *r = &*r - &(&b_k * &c);
                }
                coeffs.push(c);
            }
            out[k as usize] = SymFunc::from_terms(Basis::P, t.parts.iter().cloned().zip(coeffs));
        }
        assert!(rest.iter().all(QTRational::is_zero), "E_{{n,k}} expansion left a remainder");
        for f in &out {
            if !f.is_z_free() {
                return Err(Error::InvalidArgument(format!("E_{{{n},k}} is not z-free")));
            }
        }
        Ok(out)
    }
}

/// `X (1 - z)/(1 - q)` as the alphabet `(1 - z)/(1 - q)`.
fn qt_alphabet_e_family() -> QTRational {
    let one = QTRational::one();
    &(&one - &QTRational::z()) / &(&one - &QTRational::q())
}

/// Coefficient of `z^k` in a rational function whose denominator is `z`-free.
fn z_coefficient(r: &QTRational, k: u32) -> QTRational {
    assert!(!r.denom().contains_var(Var::Z), "z in a denominator");
    let coeffs = r.numer().coefficients_in(Var::Z);
    match coeffs.get(k as usize) {
        Some(c) if !c.is_zero() => &QTRational::from_zpoly(c.clone()) / &QTRational::from_zpoly(r.denom().clone()),
        _ => QTRational::zero(),
    }
}

/// `e_{|mu|}[B_mu] = q^{n(mu')} t^{n(mu)}`.
pub fn nabla_eigenvalue(mu: &Partition) -> QTRational {
    QTRational::from_zpoly(ZPoly::term(Monomial::new(mu.conjugate().n(), mu.n(), 0), 1.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qt;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn nabla_on_small_inputs() {
        let l = Lambda::new(3);
        assert_eq!(l.convert(&l.nabla(&l.e(1)).unwrap(), Basis::E).unwrap(), l.e(1));
        let n2 = l.nabla(&l.e(2)).unwrap();
        assert_eq!(l.hall_inner(&n2, &l.e(2)).unwrap(), qt("q + t"));
        let n3 = l.nabla(&l.e(3)).unwrap();
        assert_eq!(l.hall_inner(&n3, &l.e(3)).unwrap(), qt("q^3 + q^2*t + q*t^2 + t^3 + q*t"));
    }

    #[test]
    fn delta_and_pi_eigenvalues() {
        let l = Lambda::new(2);
        let h2 = l.ht(&p(&[2]));
        let d = l.delta(&l.e(1), &h2).unwrap();
        assert_eq!(l.to_p(&h2.scale(&qt("1 + q"))).unwrap(), d);
        let g = l.s(&p(&[1, 1]));
        assert_eq!(l.convert(&l.delta_prime(&l.one(), &g).unwrap(), Basis::S).unwrap(), g);
        let pi = l.pi_op(&h2, false).unwrap();
        assert_eq!(pi, l.to_p(&h2.scale(&qt("1 - q"))).unwrap());
    }

    #[test]
    fn theta_branches() {
        let l = Lambda::new(3);
        assert!(l.theta(&l.e(1), &l.one()).unwrap().is_zero());
        let f = l.s(&p(&[2, 1]));
        assert_eq!(l.theta(&l.one(), &f).unwrap(), l.to_p(&f).unwrap());
        assert!(l.theta(&l.one(), &l.one()).unwrap() == l.one());
        let lhs = l.theta(&l.e(1), &l.nabla(&l.e(1)).unwrap()).unwrap();
        let rhs = l.delta_prime(&l.e(0), &l.e(2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn e_family_small() {
        let l = Lambda::new(3);
        let e0 = l.e_family(0).unwrap();
        assert_eq!(e0.len(), 1);
        assert_eq!(e0[0], l.one());
        for n in 1..=3 {
            let fam = l.e_family(n).unwrap();
            assert!(fam[0].is_zero());
            let total = fam.iter().fold(SymFunc::zero(Basis::P), |a, b| a.add(b));
            assert_eq!(total, l.to_p(&l.e(n)).unwrap());
        }
    }

    #[test]
    fn h_perp_rules() {
        let l = Lambda::new(3);
        assert_eq!(l.h_perp(1, &l.s(&p(&[2]))).unwrap(), l.s(&p(&[1])));
        assert_eq!(l.h_perp(0, &l.s(&p(&[2, 1]))).unwrap(), l.s(&p(&[2, 1])));
        assert!(l.h_perp(3, &l.s(&p(&[2]))).unwrap().is_zero());
    }
}
