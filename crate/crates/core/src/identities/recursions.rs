//! The recursions as literal finite sums over caller-supplied values.

use crate::exactalg::{q_binom, MPoly, Monomial};

/// `[n choose k]_q` with the empty-product convention: `1` for `k = 0` and any
/// integer `n`, `0` for `k < 0` or `0 <= n < k`.
pub fn qbinom(n: i64, k: i64) -> MPoly {
    if k == 0 {
        return MPoly::one();
    }
    if k < 0 || n < 0 {
        return MPoly::zero();
    }
    q_binom(n, k)
}

pub(crate) fn q_pow(e: i64) -> MPoly {
    MPoly::one().mul_monomial(Monomial::new(e as u32, 0, 0))
}

pub(crate) fn t_pow(e: i64) -> MPoly {
    MPoly::one().mul_monomial(Monomial::new(0, e as u32, 0))
}

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn delta0(n: i64, k: i64, r: i64, d: i64) -> MPoly {
    let _ = n;
    if r == 0 && k == 0 && d == 0 {
        MPoly::one()
    } else {
        MPoly::zero()
    }
}

/// `q^{C(v,2)} [r, v] [r+j-1, j]`.
pub fn chu_vandermonde_lhs(r: i64, v: i64, j: i64) -> MPoly {
    &(&q_pow(choose2(v)) * &qbinom(r, v)) * &qbinom(r + j - 1, j)
}

/// `sum_{u=0}^{r-v} q^{C(u,2)} [u+v, u] q^{C(u+v,2)} [r, u+v] [v+j-1, j-u]`.
pub fn chu_vandermonde_rhs(r: i64, v: i64, j: i64) -> MPoly {
    let mut acc = MPoly::zero();
    for u in 0..=(r - v) {
        acc = &acc + &dyck_weight(r, v, j, u);
    }
    acc
}

/// Weight shared by the Dyck recursions.
fn dyck_weight(r: i64, v: i64, j: i64, u: i64) -> MPoly {
    let a = &q_pow(choose2(u)) * &qbinom(u + v, u);
    let b = &q_pow(choose2(u + v)) * &qbinom(r, u + v);
    &(&a * &b) * &qbinom(v + j - 1, j - u)
}

/// Weight of the square correction term.
fn square_weight(r: i64, v: i64, j: i64, u: i64) -> MPoly {
    let a = &q_pow(choose2(u)) * &qbinom(u + v, u);
    let b = &q_pow(choose2(u + v)) * &qbinom(r - 1, u + v - 1);
    &(&a * &b) * &qbinom(v + j, j - u)
}

/// Index range of `v` and the decorated-peak count handed to the sub-term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Indexing {
    /// `v` in `0..=r`, sub-term at `d - (r - v)`: `r - v` decorated peaks sit
    /// on the base diagonal. Reproduces both sides.
    PeakCount,
    /// `v` in `0..=d`, sub-term at `d - v`, as printed for the algebraic form.
    AlgebraicPrinted,
    /// `v` in `0..=d`, sub-term at `d - (r - v)`, as printed for the
    /// combinatorial form.
    CombinatorialPrinted,
}

impl Indexing {
    pub const ALL: [Indexing; 3] = [Indexing::PeakCount, Indexing::AlgebraicPrinted, Indexing::CombinatorialPrinted];

    fn sub_d(self, d: i64, r: i64, v: i64) -> i64 {
        match self {
            Indexing::AlgebraicPrinted => d - v,
            Indexing::CombinatorialPrinted | Indexing::PeakCount => d - (r - v),
        }
    }

    fn v_max(self, d: i64, r: i64) -> i64 {
        match self {
            Indexing::PeakCount => r,
            _ => d,
        }
    }
}

/// `sum_j t^{n-r-j} sum_s sum_v sum_u W(r,v,j,u) [v+j+s-1, s] F(n-r-j, k-j, s, d')`,
/// with `F(n', k', r', d')` the value at `(n', k', r', d')`.
pub fn dyck_recursion<F>(n: i64, k: i64, r: i64, d: i64, ix: Indexing, mut f: F) -> MPoly
where
    F: FnMut(i64, i64, i64, i64) -> MPoly,
{
    if n == 0 {
        return delta0(n, k, r, d);
    }
    let mut acc = MPoly::zero();
    for j in 0..=k {
        let tj = t_pow(n - r - j);
        for s in 0..=(n - r) {
            for v in 0..=ix.v_max(d, r) {
                let sub = f(n - r - j, k - j, s, ix.sub_d(d, r, v));
                if sub.is_zero() {
                    continue;
                }
                let mut w = MPoly::zero();
                for u in 0..=(r - v) {
                    w = &w + &dyck_weight(r, v, j, u);
                }
                if w.is_zero() {
                    continue;
                }
                let term = &(&w * &qbinom(v + j + s - 1, s)) * &sub;
                acc = &acc + &(&tj * &term);
            }
        }
    }
    acc
}

/// The square recursion: `D(n, k, r, d)` plus the `q^r`-weighted correction
/// with sub-values `F`.
pub fn square_recursion<F>(n: i64, k: i64, r: i64, d: i64, dyck: MPoly, ix: Indexing, mut f: F) -> MPoly
where
    F: FnMut(i64, i64, i64, i64) -> MPoly,
{
    if n == 0 {
        return delta0(n, k, r, d);
    }
    let mut acc = dyck;
    let qr = q_pow(r);
    for j in 0..=k {
        let tj = &qr * &t_pow(n - r - j);
        for s in 0..=(n - r) {
            for v in 0..=ix.v_max(d, r) {
                let sub = f(n - r - j, k - j, s, ix.sub_d(d, r, v));
                if sub.is_zero() {
                    continue;
                }
                let mut w = MPoly::zero();
                for u in 0..=(r - v) {
                    w = &w + &square_weight(r, v, j, u);
                }
                if w.is_zero() {
                    continue;
                }
                let term = &(&w * &qbinom(v + j + s - 1, s - 1)) * &sub;
                acc = &acc + &(&tj * &term);
            }
        }
    }
    acc
}

/// `sum_{p=0}^d t^{d-p} sum_{i=0}^p q^{C(i,2)} [r-p+i, i] [r, p-i] G(d-p, k-i, r-p+i)`.
///
/// `G(a, k', r')` is the value of the extended family with `a` zero labels.
/// With `skip_top`, the `p = 0` term is left out.
pub fn peak_removal_sum<G>(k: i64, r: i64, d: i64, skip_top: bool, mut g: G) -> MPoly
where
    G: FnMut(i64, i64, i64) -> MPoly,
{
    let mut acc = MPoly::zero();
    for p in (if skip_top { 1 } else { 0 })..=d {
        for i in 0..=p {
            let w = peak_removal_weight(r, p, i);
            if w.is_zero() {
                continue;
            }
            let sub = g(d - p, k - i, r - p + i);
            if sub.is_zero() {
                continue;
            }
            acc = &acc + &(&(&t_pow(d - p) * &w) * &sub);
        }
    }
    acc
}

/// `q^{C(i,2)} [r-p+i, i] [r, p-i]`.
pub fn peak_removal_weight(r: i64, p: i64, i: i64) -> MPoly {
    &(&q_pow(choose2(i)) * &qbinom(r - p + i, i)) * &qbinom(r, p - i)
}
