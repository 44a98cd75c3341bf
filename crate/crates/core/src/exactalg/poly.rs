use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};

/// Coefficient ring of a [`Poly`].
pub trait Ring: Clone + Eq + Hash + Debug + Zero + One + Neg<Output = Self> + Send + Sync {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_ring {
    ($t:ty, $from:expr) => {
        impl Ring for $t {
            #[inline]
            fn add_ref(&self, other: &Self) -> Self {
                self + other
            }
            #[inline]
            fn sub_ref(&self, other: &Self) -> Self {
                self - other
            }
            #[inline]
            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }
            fn from_i64(v: i64) -> Self {
                $from(v)
            }
        }
    };
}

impl_ring!(BigInt, BigInt::from);
impl_ring!(BigRational, |v: i64| BigRational::from_integer(BigInt::from(v)));

/// Sparse polynomial in `q, t, z`.
///
/// Terms are kept sorted by ascending [`Monomial`] (graded lex, `q < t < z`),
/// with unique monomials and no zero coefficients, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

/// Polynomial with rational coefficients; the public value type.
pub type MPoly = Poly<BigRational>;
/// Polynomial with integer coefficients; numerators and denominators of
/// [`QTRational`](super::QTRational).
pub type ZPoly = Poly<BigInt>;

impl<C: Ring> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut terms: Vec<(Monomial, C)> = iter.into_iter().collect();
        terms.sort_unstable_by_key(|(m, _)| *m);
        Poly { terms: combine_sorted(terms) }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn coeff(&self, m: Monomial) -> C {
        match self.terms.binary_search_by_key(&m, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Largest term in the graded lex order.
    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// Gcd of all monomials occurring in the polynomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.gcd(*m)),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, x)| {
                    let v = x.mul_ref(c);
                    (!v.is_zero()).then_some((*m, v))
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, m: Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (m.quotient_of(*k).expect("monomial does not divide term"), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `v -> v^k` to every variable at once (the plethystic Adams map).
    pub fn frobenius(&self, k: u32) -> Self {
        // Order is preserved: scaling all exponents by k is monotone for grlex.
        Poly { terms: self.terms.iter().map(|(m, c)| (m.pow(k), c.clone())).collect() }
    }

    /// Replaces every monomial through `f`; the result is re-sorted and combined.
    pub fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let d = f(c);
                    (!d.is_zero()).then_some((*m, d))
                })
                .collect(),
        }
    }

    /// Substitutes a ring value for `v`; the result no longer involves `v`.
    pub fn eval_var(&self, v: Var, value: &C) -> Self {
        let deg = self.degree_in(v) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(C::one());
        for i in 0..deg {
            let next = powers[i].mul_ref(value);
            powers.push(next);
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let val = c.mul_ref(&powers[e]);
            let key = m.with_exp(v, 0);
            match acc.get_mut(&key) {
                Some(x) => *x = x.add_ref(&val),
                None => {
                    acc.insert(key, val);
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Full evaluation at a point `(q, t, z)`.
    pub fn eval(&self, q: &C, t: &C, z: &C) -> C {
        self.eval_var(Var::Q, q).eval_var(Var::T, t).eval_var(Var::Z, z).as_constant().unwrap()
    }

    /// Coefficients with respect to `v`: `self = sum_i out[i] * v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
        }
        buckets.into_iter().map(Self::from_terms).collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(v: Var, coeffs: &[Self]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.terms.iter().map(move |(m, c)| (m.with_exp(v, i as u32), c.clone()))),
        )
    }
}

fn combine_sorted<C: Ring>(terms: Vec<(Monomial, C)>) -> Vec<(Monomial, C)> {
    let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = lc.add_ref(&c),
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

fn merge<C: Ring>(a: &[(Monomial, C)], b: &[(Monomial, C)], negate_b: bool) -> Vec<(Monomial, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ma, ca) = &a[i];
        let (mb, cb) = &b[j];
        match ma.cmp(mb) {
            std::cmp::Ordering::Less => {
                out.push((*ma, ca.clone()));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((*mb, if negate_b { -cb.clone() } else { cb.clone() }));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = if negate_b { ca.sub_ref(cb) } else { ca.add_ref(cb) };
                if !s.is_zero() {
                    out.push((*ma, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (*m, if negate_b { -c.clone() } else { c.clone() })));
    out
}

impl<C: Ring> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        Poly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<C: Ring> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        Poly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Ring> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_monomial(*m).scale(c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_monomial(*m).scale(c);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                acc.push((ma.mul(*mb), ca.mul_ref(cb)));
            }
        }
        acc.sort_unstable_by_key(|(m, _)| *m);
        Poly { terms: combine_sorted(acc) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Ring> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Ring> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl ZPoly {
    /// Gcd of the integer coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_int_exact(&self, d: &BigInt) -> ZPoly {
        if d.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (quo, rem) = c.div_rem(d);
                    debug_assert!(rem.is_zero(), "inexact integer division");
                    (*m, quo)
                })
                .collect(),
        }
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff_is_negative(&self) -> bool {
        self.terms.last().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[q, t, z]`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if let [(dm, dc)] = d.terms.as_slice() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let qm = dm.quotient_of(*m)?;
                let (quo, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return None;
                }
                out.push((qm, quo));
            }
            return Some(Poly { terms: out });
        }
        for v in Var::ALL {
            if self.degree_in(v) < d.degree_in(v) {
                return None;
            }
        }
        let (lm, lc) = d.terms.last().unwrap().clone();
        let rest = &d.terms[..d.terms.len() - 1];
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((&rm, _)) = rem.last_key_value() {
            let rc = rem.remove(&rm).unwrap();
            let qm = lm.quotient_of(rm)?;
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (m, c) in rest {
                let key = qm.mul(*m);
                let delta = &qc * c;
                match rem.get_mut(&key) {
                    Some(x) => {
                        *x -= delta;
                        if x.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(Poly { terms: quot })
    }

    pub fn to_rational(&self) -> MPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl MPoly {
    /// Clears denominators: returns `(p, d)` with `self = p / d`, `p` integral, `d > 0`
    /// the lcm of the coefficient denominators.
    pub fn to_integral(&self) -> (ZPoly, BigInt) {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        let p = self.map_coeffs(|c| c.numer() * (&l / c.denom()));
        (p, l)
    }

    pub fn from_integral(p: &ZPoly) -> MPoly {
        p.to_rational()
    }

    /// Specialisation `q = t = z = 1`.
    pub fn at_one(&self) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (_, c)| acc + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(terms: &[(u32, u32, i64)]) -> ZPoly {
        ZPoly::from_terms(terms.iter().map(|&(a, b, c)| (Monomial::new(a, b, 0), BigInt::from(c))))
    }

    #[test]
    fn difference_of_squares() {
        let a = zp(&[(0, 0, 1), (1, 0, 1)]);
        let b = zp(&[(0, 0, 1), (1, 0, -1)]);
        assert_eq!(&a * &b, zp(&[(0, 0, 1), (2, 0, -1)]));
    }

    #[test]
    fn exact_division_detects_non_divisors() {
        let f = zp(&[(2, 0, 1), (0, 2, -1)]);
        let g = zp(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(f.div_exact(&g), Some(zp(&[(1, 0, 1), (0, 1, 1)])));
        let h = zp(&[(1, 0, 1), (0, 1, 2)]);
        assert_eq!(f.div_exact(&h), None);
        assert_eq!(zp(&[(1, 0, 3)]).div_exact(&zp(&[(0, 0, 2)])), None);
    }

    #[test]
    fn coefficient_view_round_trips() {
        let f = zp(&[(2, 1, 3), (0, 2, -1), (1, 0, 5), (0, 0, 7)]);
        let cs = f.coefficients_in(Var::T);
        assert_eq!(cs.len(), 3);
        assert_eq!(ZPoly::from_coefficients_in(Var::T, &cs), f);
    }

    #[test]
    fn evaluation_substitutes_one_variable() {
        let f = zp(&[(2, 1, 3), (0, 2, -1)]);
        let g = f.eval_var(Var::Q, &BigInt::from(2));
        assert_eq!(g, zp(&[(0, 1, 12), (0, 2, -1)]));
    }
}
