use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::monomial::{Monomial, Var};
use super::poly::{MPoly, ZPoly};
use super::rational::QTRational;
use num_bigint::BigInt;
use num_traits::One;

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_int(n: u32) -> MPoly {
    q_int_z(n).to_rational()
}

pub(crate) fn q_int_z(n: u32) -> ZPoly {
    ZPoly::from_terms((0..n).map(|i| (Monomial::new(i, 0, 0), BigInt::one())))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> MPoly {
    QBinomTable::global().factorial(n).to_rational()
}

/// Gaussian binomial; zero outside `0 <= k <= n`.
pub fn q_binom(n: i64, k: i64) -> MPoly {
    QBinomTable::global().binom(n, k).to_rational()
}

/// `(x; q)_n = (1 - x)(1 - xq)...(1 - xq^{n-1})`.
pub fn q_pochhammer(x: &MPoly, n: u32) -> MPoly {
    let mut acc = MPoly::one();
    let one = MPoly::one();
    for k in 0..n {
        let f = &one - &x.mul_monomial(Monomial::var(Var::Q).pow(k));
        acc = &acc * &f;
    }
    acc
}

/// `(x; q)_n` as a rational function, for alphabets built in `QTRational`.
pub fn q_pochhammer_rational(x: &QTRational, n: u32) -> QTRational {
    let q = QTRational::q();
    let one = QTRational::one();
    let mut acc = QTRational::one();
    let mut xq = x.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &xq);
        xq = &xq * &q;
    }
    acc
}

/// Memo table for `[n]_q!` and Gaussian binomials.
///
/// Readers share the lock; a miss computes outside the lock and inserts under the
/// write lock, so concurrent misses at worst duplicate work.
#[derive(Default)]
pub struct QBinomTable {
    binoms: RwLock<HashMap<(u32, u32), ZPoly>>,
    factorials: RwLock<Vec<ZPoly>>,
}

impl QBinomTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide shared table.
    pub fn global() -> &'static QBinomTable {
        static TABLE: OnceLock<QBinomTable> = OnceLock::new();
        TABLE.get_or_init(QBinomTable::new)
    }

    pub fn binom(&self, n: i64, k: i64) -> ZPoly {
        if k < 0 || n < 0 || k > n {
            return ZPoly::zero();
        }
        let (n, k) = (n as u32, k as u32);
        let k = k.min(n - k);
        if k == 0 {
            return ZPoly::one();
        }
        if let Some(v) = self.binoms.read().unwrap().get(&(n, k)) {
            return v.clone();
        }
        // Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k].
        let a = self.binom(n as i64 - 1, k as i64 - 1);
        let b = self.binom(n as i64 - 1, k as i64).mul_monomial(Monomial::new(k, 0, 0));
        let v = &a + &b;
        self.binoms.write().unwrap().insert((n, k), v.clone());
        v
    }

    pub fn binom_rational(&self, n: i64, k: i64) -> QTRational {
        QTRational::from_zpoly(self.binom(n, k))
    }

    pub fn factorial(&self, n: u32) -> ZPoly {
        {
            let f = self.factorials.read().unwrap();
            if let Some(v) = f.get(n as usize) {
                return v.clone();
            }
        }
        let mut f = self.factorials.write().unwrap();
        if f.is_empty() {
            f.push(ZPoly::one());
        }
        while f.len() <= n as usize {
            let i = f.len() as u32;
            let next = &f[i as usize - 1] * &q_int_z(i);
            f.push(next);
        }
        f[n as usize].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::text::qt;

    #[test]
    fn small_values() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(QTRational::from_mpoly(&q_int(4)), qt("1 + q + q^2 + q^3"));
        assert!(q_binom(5, 0).is_one());
        assert_eq!(QTRational::from_mpoly(&q_binom(2, 1)), qt("1 + q"));
        assert!(q_binom(3, 4).is_zero());
        assert!(q_binom(3, -1).is_zero());
        assert!(q_binom(-1, 0).is_zero());
    }

    #[test]
    fn factorial_is_product_of_q_integers() {
        let f = q_factorial(4);
        let expect = &(&q_int(2) * &q_int(3)) * &q_int(4);
        assert_eq!(f, expect);
    }

    #[test]
    fn pochhammer_small_cases() {
        let z = MPoly::z();
        assert!(q_pochhammer(&z, 0).is_one());
        assert_eq!(QTRational::from_mpoly(&q_pochhammer(&z, 1)), qt("1 - z"));
        let q = MPoly::q();
        assert_eq!(QTRational::from_mpoly(&q_pochhammer(&q, 2)), qt("(1 - q)*(1 - q^2)"));
        assert_eq!(
            q_pochhammer_rational(&QTRational::z(), 3),
            QTRational::from_mpoly(&q_pochhammer(&z, 3))
        );
    }
}
