use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd_cofactors;
use super::monomial::Var;
use super::poly::{MPoly, ZPoly};
use crate::error::ExactError;

/// Exact rational function in `q, t, z` over the integers.
///
/// Stored as a reduced fraction of integer polynomials: `gcd(num, den) = 1`
/// including integer content, and `den` has a positive leading coefficient
/// under graded lex. Zero is `0/1`. Equal values therefore have equal
/// representations, so `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: ZPoly,
    den: ZPoly,
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTRational {
    pub fn zero() -> Self {
        QTRational { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        QTRational { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_i64(v: i64) -> Self {
        QTRational { num: ZPoly::from_i64(v), den: ZPoly::one() }
    }

    pub fn from_int(v: BigInt) -> Self {
        QTRational { num: ZPoly::constant(v), den: ZPoly::one() }
    }

    pub fn from_ratio(v: &BigRational) -> Self {
        QTRational { num: ZPoly::constant(v.numer().clone()), den: ZPoly::constant(v.denom().clone()) }
    }

    pub fn var(v: Var) -> Self {
        QTRational { num: ZPoly::var(v), den: ZPoly::one() }
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

    pub fn from_zpoly(p: ZPoly) -> Self {
        QTRational { num: p, den: ZPoly::one() }
    }

    pub fn from_mpoly(p: &MPoly) -> Self {
        let (num, d) = p.to_integral();
        Self::reduce_unchecked(num, ZPoly::constant(d))
    }

    /// `num / den` in canonical form.
    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduce_unchecked(num, den))
    }

    /// Ratio of two rational-coefficient polynomials.
    pub fn from_mpolys(num: &MPoly, den: &MPoly) -> Result<Self, ExactError> {
        Self::from_mpoly(num).checked_div(&Self::from_mpoly(den))
    }

    fn reduce_unchecked(num: ZPoly, den: ZPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (_, mut n, mut d) = if den.is_one() { (ZPoly::one(), num, den) } else { gcd_cofactors(&num, &den) };
        if d.leading_coeff_is_negative() {
            n = -n;
            d = -d;
        }
        QTRational { num: n, den: d }
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    /// Re-applies canonicalisation. Values are always canonical, so this is the
    /// identity; it exists to state the invariant in tests.
    pub fn reduce(&self) -> Self {
        Self::reduce_unchecked(self.num.clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is an integer constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a polynomial with rational coefficients, if it is one.
    pub fn as_mpoly(&self) -> Option<MPoly> {
        let d = self.den.as_constant()?;
        Some(self.num.map_coeffs(|c| BigRational::new(c.clone(), d.clone())))
    }

    /// The value as an integer polynomial, if it is one.
    pub fn as_zpoly(&self) -> Option<&ZPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// True when the value lies in `N[q, t, z]`.
    pub fn is_nonneg_integer_poly(&self) -> bool {
        self.den.is_one() && self.num.terms().iter().all(|(_, c)| !c.is_negative())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self * &other.inv_unchecked())
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> Self {
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.leading_coeff_is_negative() {
            n = -n;
            d = -d;
        }
        QTRational { num: n, den: d }
    }

    pub fn pow(&self, k: u32) -> Self {
        QTRational { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Multiplication by a rational constant; only integer content can cancel.
    pub fn scale_ratio(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let num = self.num.scale(c.numer());
        let den = self.den.scale(c.denom());
        let g = num.content().gcd(&den.content());
        QTRational { num: num.div_int_exact(&g), den: den.div_int_exact(&g) }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self * &Self::from_int(c.clone())
    }

    /// Applies `q -> q^k, t -> t^k, z -> z^k`.
    pub fn frobenius(&self, k: u32) -> Self {
        if k == 1 {
            return self.clone();
        }
        let num = self.num.frobenius(k);
        let den = self.den.frobenius(k);
        // Frobenius is an injective ring map, so the fraction stays reduced; only
        // the sign normalisation can change with the leading term.
        let (num, den) = if den.leading_coeff_is_negative() { (-num, -den) } else { (num, den) };
        QTRational { num, den }
    }

    /// Substitutes an integer for one variable.
    pub fn eval_var(&self, v: Var, value: &BigInt) -> Result<Self, ExactError> {
        Self::new(self.num.eval_var(v, value), self.den.eval_var(v, value))
    }

    /// Substitutes a rational-function value for one variable.
    pub fn subst(&self, v: Var, value: &QTRational) -> Result<Self, ExactError> {
        let eval = |p: &ZPoly| -> QTRational {
            let coeffs = p.coefficients_in(v);
            let mut acc = QTRational::zero();
            for c in coeffs.iter().rev() {
                acc = &(&acc * value) + &QTRational::from_zpoly(c.clone());
            }
            acc
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }

    /// Value at `q = t = z = 1`.
    pub fn at_one(&self) -> Result<BigRational, ExactError> {
        let one = BigInt::one();
        let n = self.num.eval(&one, &one, &one);
        let d = self.den.eval(&one, &one, &one);
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    }

    /// Canonical text: `p` for polynomials, `(p)/(d)` otherwise.
    pub fn to_canonical_string(&self) -> String {
        match self.as_mpoly() {
            Some(p) => super::text::format_poly(&p),
            None => format!(
                "({})/({})",
                super::text::format_poly(&self.num.to_rational()),
                super::text::format_poly(&self.den.to_rational())
            ),
        }
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTRational({})", self.to_canonical_string())
    }
}

impl Add for &QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QTRational { num, den: ZPoly::one() };
            }
            return QTRational::reduce_unchecked(num, self.den.clone());
        }
        // Henrici: with g = gcd(d1, d2) only the gcd of the new numerator with g
        // can cancel.
        let (g, d1g, d2g) = gcd_cofactors(&self.den, &rhs.den);
        let num = &(&self.num * &d2g) + &(&rhs.num * &d1g);
        if num.is_zero() {
            return QTRational::zero();
        }
        let den = &d1g * &rhs.den;
        if g.is_one() {
            return QTRational { num, den };
        }
        let (_, n2, g2) = gcd_cofactors(&num, &g);
        let den = &den.div_exact(&g).unwrap() * &g2;
        let (n2, den) = if den.leading_coeff_is_negative() { (-n2, -den) } else { (n2, den) };
        QTRational { num: n2, den }
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -self.num, den: self.den }
    }
}

impl Sub for &QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        self + &(-rhs)
    }
}

impl Mul for &QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() || rhs.is_zero() {
            return QTRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QTRational { num: &self.num * &rhs.num, den: ZPoly::one() };
        }
        // Henrici: cancel across the diagonals before multiplying.
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        if den.leading_coeff_is_negative() {
            QTRational { num: -num, den: -den }
        } else {
            QTRational { num, den }
        }
    }
}

fn cancel(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly) {
    if b.is_one() || a.is_one() {
        return (a.clone(), b.clone());
    }
    let (_, a1, b1) = gcd_cofactors(a, b);
    (a1, b1)
}

/// Panics on division by zero, like integer division; use
/// [`QTRational::checked_div`] for a fallible variant.
impl Div for &QTRational {
    type Output = QTRational;
    fn div(self, rhs: &QTRational) -> QTRational {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for QTRational {
            type Output = QTRational;
            fn $f(self, rhs: QTRational) -> QTRational {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&QTRational> for QTRational {
            type Output = QTRational;
            fn $f(self, rhs: &QTRational) -> QTRational {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QTRational {
    fn sum<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        iter.fold(QTRational::zero(), |a, b| &a + &b)
    }
}

impl From<i64> for QTRational {
    fn from(v: i64) -> Self {
        QTRational::from_i64(v)
    }
}

impl From<ZPoly> for QTRational {
    fn from(p: ZPoly) -> Self {
        QTRational::from_zpoly(p)
    }
}

impl From<MPoly> for QTRational {
    fn from(p: MPoly) -> Self {
        QTRational::from_mpoly(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QTRational {
        QTRational::q()
    }
    fn t() -> QTRational {
        QTRational::t()
    }
    fn one() -> QTRational {
        QTRational::one()
    }

    #[test]
    fn self_division_is_one() {
        let a = &q() + &t();
        assert_eq!(&a / &a, one());
    }

    #[test]
    fn difference_of_squares_reduces() {
        let num = &(&q() * &q()) - &(&t() * &t());
        let den = &q() - &t();
        let r = &num / &den;
        assert!(r.is_polynomial());
        assert_eq!(r, &q() + &t());
        assert_eq!(&r * &den, num);
    }

    #[test]
    fn zero_divisor_is_an_error() {
        assert_eq!(q().checked_div(&QTRational::zero()), Err(ExactError::DivisionByZero));
        assert!(QTRational::new(ZPoly::one(), ZPoly::zero()).is_err());
    }

    #[test]
    fn denominators_are_sign_normalised() {
        let r = &one() / &(&one() - &q());
        assert!(!r.denom().leading_coeff_is_negative());
        assert_eq!(r, &QTRational::from_i64(-1) / &(&q() - &one()));
    }

    #[test]
    fn sums_cancel_common_factors() {
        // 1/(1-q) - q/(1-q) = 1
        let d = &one() - &q();
        let s = &(&one() / &d) - &(&q() / &d);
        assert_eq!(s, one());
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let e = &one() + &q();
        let s = &(&one() / &d) + &(&one() / &e);
        assert_eq!(s, &QTRational::from_i64(2) / &(&d * &e));
    }

    #[test]
    fn integer_content_is_cancelled() {
        let r = &(&QTRational::from_i64(4) * &q()) / &QTRational::from_i64(6);
        assert_eq!(r.numer(), &ZPoly::q().scale(&BigInt::from(2)));
        assert_eq!(r.denom(), &ZPoly::from_i64(3));
    }

    #[test]
    fn frobenius_keeps_values_reduced() {
        let r = &one() / &(&t() - &q());
        let f = r.frobenius(2);
        assert_eq!(f, f.reduce());
        let q2 = q().pow(2);
        let t2 = t().pow(2);
        assert_eq!(f, &one() / &(&t2 - &q2));
    }
}
