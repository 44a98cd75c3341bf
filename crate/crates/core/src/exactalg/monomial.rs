use std::fmt;

/// One of the three indeterminates of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::T, Var::Z];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::Z => "z",
        }
    }

    fn shift(self) -> u32 {
        match self {
            Var::Q => 0,
            Var::T => 16,
            Var::Z => 32,
        }
    }
}

const FIELD_MASK: u64 = 0xFFFF;
const DEGREE_SHIFT: u32 = 48;

/// A monomial `q^a t^b z^c`, packed into one word.
///
/// Layout (high to low): total degree, `z`, `t`, `q`, sixteen bits each. The
/// integer order of the packed word is therefore graded lexicographic with
/// `q < t < z`, and multiplying monomials is plain addition of the words.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(q: u32, t: u32, z: u32) -> Self {
        let deg = q as u64 + t as u64 + z as u64;
        assert!(deg <= FIELD_MASK, "monomial degree {deg} exceeds packed range");
        Monomial((deg << DEGREE_SHIFT) | ((z as u64) << 32) | ((t as u64) << 16) | q as u64)
    }

    pub fn var(v: Var) -> Self {
        Self::ONE.with_exp(v, 1)
    }

    #[inline]
    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & FIELD_MASK) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEGREE_SHIFT) as u32
    }

    pub fn exps(self) -> [u32; 3] {
        [self.exp(Var::Q), self.exp(Var::T), self.exp(Var::Z)]
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Replaces the exponent of `v`.
    pub fn with_exp(self, v: Var, e: u32) -> Self {
        let mut ex = self.exps();
        ex[v as usize] = e;
        Monomial::new(ex[0], ex[1], ex[2])
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        debug_assert!(
            Var::ALL.iter().all(|&v| self.exp(v) + other.exp(v) <= FIELD_MASK as u32),
            "monomial exponent overflow"
        );
        Monomial(self.0 + other.0)
    }

    pub fn divides(self, other: Monomial) -> bool {
        Var::ALL.iter().all(|&v| self.exp(v) <= other.exp(v))
    }

    /// `other / self` when it is a monomial.
    pub fn quotient_of(self, other: Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0 - self.0))
        } else {
            None
        }
    }

    pub fn pow(self, k: u32) -> Monomial {
        let [a, b, c] = self.exps();
        Monomial::new(a * k, b * k, c * k)
    }

    /// Componentwise minimum, the gcd of two monomials.
    pub fn gcd(self, other: Monomial) -> Monomial {
        let (a, b) = (self.exps(), other.exps());
        Monomial::new(a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.exps();
        write!(f, "q^{a}t^{b}z^{c}")
    }
}

/// Writes the monomial in the canonical text format (`q^2*t`), or nothing for `1`.
pub(crate) fn write_monomial(m: Monomial, out: &mut String) {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v.name());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_order_is_graded_lex_with_z_largest() {
        let q3 = Monomial::new(3, 0, 0);
        let t3 = Monomial::new(0, 3, 0);
        let qt = Monomial::new(1, 1, 0);
        let z = Monomial::new(0, 0, 1);
        assert!(qt < q3);
        assert!(q3 < t3);
        assert!(z < qt);
        assert!(Monomial::new(2, 0, 0) < Monomial::new(0, 0, 2));
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = Monomial::new(1, 2, 0);
        let b = Monomial::new(3, 0, 4);
        assert_eq!(a.mul(b), Monomial::new(4, 2, 4));
        assert_eq!(a.quotient_of(a.mul(b)), Some(b));
        assert_eq!(b.quotient_of(a), None);
        assert_eq!(a.gcd(b), Monomial::new(1, 0, 0));
    }
}
