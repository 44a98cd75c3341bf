use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::partition::Partition;
use super::tables::DegreeTables;
use super::{star_weight, Basis, Dense, Lambda, SymFunc};
use crate::error::Result;
use crate::exactalg::{Monomial, QTRational, ZPoly};

/// Modified Macdonald polynomials of one degree, in power-sum coordinates.
pub(crate) struct MacdonaldDegree {
    /// `ht_p[mu][rho]`: coefficient of `p_rho` in `H~_mu`.
    pub ht_p: Vec<Dense>,
    /// `<H~_mu, H~_mu>_*`, as computed (not taken from the product formula).
    pub norms: Vec<QTRational>,
    /// `dual[mu][rho]`: `c_mu = sum_rho f_rho dual[mu][rho]` for `f = sum c_mu H~_mu`.
    pub dual: Vec<Dense>,
}

impl MacdonaldDegree {
    /// Gram-Schmidt under the star product.
    ///
    /// `H~_mu` lies in the span of `s_lambda[X/(1-q)]` for `lambda >= mu` in
    /// dominance. Decreasing lexicographic order extends dominance, so projecting
    /// each `s_mu[X/(1-q)]` off the earlier polynomials yields `H~_mu` up to a
    /// scalar, fixed by `<H~_mu, h_n> = 1`.
    pub fn build(_n: u32, t: &DegreeTables) -> Self {
        let len = t.len();
        let one = QTRational::one();
        let weights: Vec<QTRational> = t.parts.iter().map(star_weight).collect();
        let inv_q: Vec<QTRational> = t
            .parts
            .iter()
            .map(|rho| {
                let d = rho.parts().iter().fold(one.clone(), |acc, &k| &acc * &(&one - &QTRational::q().pow(k)));
                d.inv().expect("nonzero")
            })
            .collect();
        let phi: Vec<Dense> = (0..len)
            .map(|l| {
                (0..len)
                    .map(|r| inv_q[r].scale_ratio(&BigRational::new(t.chi[l][r].clone(), t.z[r].clone())))
                    .collect()
            })
            .collect();

        let mut ht_p: Vec<Dense> = Vec::with_capacity(len);
        let mut norms: Vec<QTRational> = Vec::with_capacity(len);
        for i in 0..len {
            let mut v = phi[i].clone();
            for j in 0..i {
                let ip = star_dense(&phi[i], &ht_p[j], &weights);
                if ip.is_zero() {
                    continue;
                }
                let c = &ip / &norms[j];
                for (x, g) in v.iter_mut().zip(&ht_p[j]) {
                    if !g.is_zero() {
                        *x = &*x - &(&c * g);
                    }
                }
            }
            let total: QTRational = v.iter().cloned().sum();
            let g: Dense = v.iter().map(|x| x / &total).collect();
            norms.push(star_dense(&g, &g, &weights));
            ht_p.push(g);
        }
        let dual = (0..len)
            .map(|m| (0..len).map(|r| &(&ht_p[m][r] * &weights[r]) / &norms[m]).collect())
            .collect();
        MacdonaldDegree { ht_p, norms, dual }
    }
}

fn star_dense(a: &[QTRational], b: &[QTRational], w: &[QTRational]) -> QTRational {
    let mut acc = QTRational::zero();
    for ((x, y), z) in a.iter().zip(b).zip(w) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(&(x * y) * z);
        }
    }
    acc
}

fn qt_monomial(a: u32, b: u32) -> QTRational {
    QTRational::from_zpoly(ZPoly::term(Monomial::new(a, b, 0), BigInt::from(1)))
}

/// `B_mu = sum_c q^{a'(c)} t^{l'(c)}`.
pub fn b_mu(mu: &Partition) -> QTRational {
    QTRational::from_zpoly(ZPoly::from_terms(mu.cells().map(|c| {
        let g = mu.geometry(c);
        (Monomial::new(g.coarm, g.coleg, 0), BigInt::from(1))
    })))
}

/// `Pi_mu = prod over cells other than (1,1) of (1 - q^{a'} t^{l'})`; `Pi_empty = 1`.
pub fn pi_mu(mu: &Partition) -> QTRational {
    let one = QTRational::one();
    mu.cells().filter(|&c| c != (1, 1)).fold(one.clone(), |acc, c| {
        let g = mu.geometry(c);
        &acc * &(&one - &qt_monomial(g.coarm, g.coleg))
    })
}

/// `w_mu = prod_c (q^{a} - t^{l+1})(t^{l} - q^{a+1})`.
pub fn w_mu(mu: &Partition) -> QTRational {
    mu.cells().fold(QTRational::one(), |acc, c| {
        let g = mu.geometry(c);
        let x = &qt_monomial(g.arm, 0) - &qt_monomial(0, g.leg + 1);
        let y = &qt_monomial(0, g.leg) - &qt_monomial(g.arm + 1, 0);
        &acc * &(&x * &y)
    })
}

impl Lambda {
    /// `H~_mu` in the power-sum basis.
    pub fn macdonald(&self, mu: &Partition) -> Result<SymFunc> {
        let n = mu.size();
        let t = self.tables(n)?;
        let mac = self.macdonald_data(n)?;
        self.from_dense(n, &mac.ht_p[t.index[mu]])
    }

    /// Computed `<H~_mu, H~_mu>_*`.
    pub fn macdonald_norm(&self, mu: &Partition) -> Result<QTRational> {
        let n = mu.size();
        let idx = self.tables(n)?.index[mu];
        Ok(self.macdonald_data(n)?.norms[idx].clone())
    }

    /// Coefficients `c_mu` with `f = sum c_mu H~_mu`.
    pub fn to_macdonald(&self, f: &SymFunc) -> Result<BTreeMap<Partition, QTRational>> {
        let mut out = BTreeMap::new();
        for (n, v) in self.dense_components(f)? {
            let t = self.tables(n)?;
            for (mu, c) in t.parts.iter().zip(self.macdonald_coords(n, &v)?) {
                if !c.is_zero() {
                    out.insert(mu.clone(), c);
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn macdonald_coords(&self, n: u32, v: &[QTRational]) -> Result<Vec<QTRational>> {
        let mac = self.macdonald_data(n)?;
        Ok(mac
            .dual
            .iter()
            .map(|row| {
                let mut acc = QTRational::zero();
                for (x, y) in v.iter().zip(row) {
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                acc
            })
            .collect())
    }

    /// Power-sum coordinates of `sum_mu c_mu H~_mu` at degree `n`.
    pub(crate) fn from_macdonald_coords(&self, n: u32, c: &[QTRational]) -> Result<Dense> {
        let mac = self.macdonald_data(n)?;
        let len = c.len();
        let mut acc = vec![QTRational::zero(); len];
        for (cm, row) in c.iter().zip(&mac.ht_p) {
            if cm.is_zero() {
                continue;
            }
            for (a, x) in acc.iter_mut().zip(row) {
                if !x.is_zero() {
                    *a = &*a + &(cm * x);
                }
            }
        }
        Ok(acc)
    }

    /// `H~_mu` expanded in Schur functions: the modified q,t-Kostka coefficients.
    pub fn kostka(&self, mu: &Partition) -> Result<SymFunc> {
        self.convert(&self.macdonald(mu)?, Basis::S)
    }
}
