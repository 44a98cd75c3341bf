use crate::exactalg::QTRational;

/// Image of the power sums under a plethystic substitution.
///
/// `with_x = true` is `p_k -> scale(k) p_k` (the alphabet `A X`); `false` is the
/// full evaluation `p_k -> scale(k)` (the alphabet `A` alone).
#[derive(Clone, Debug)]
pub struct AlphabetRule {
    scales: Vec<QTRational>,
    with_x: bool,
}

impl AlphabetRule {
    /// `scale(k) = f(k)` for `1 <= k <= bound`.
    pub fn from_fn(bound: u32, with_x: bool, f: impl Fn(u32) -> QTRational) -> Self {
        AlphabetRule { scales: (1..=bound).map(f).collect(), with_x }
    }

    /// Alphabet given by a rational function: `scale(k) = A(q^k, t^k, z^k)`.
    pub fn from_alphabet(a: &QTRational, bound: u32, with_x: bool) -> Self {
        Self::from_fn(bound, with_x, |k| a.frobenius(k))
    }

    /// `X / M` with `M = (1 - q)(1 - t)`.
    pub fn star(bound: u32) -> Self {
        let one = QTRational::one();
        Self::from_fn(bound, true, |k| {
            let m = &(&one - &QTRational::q().pow(k)) * &(&one - &QTRational::t().pow(k));
            m.inv().expect("nonzero")
        })
    }

    /// `M X`.
    pub fn times_m(bound: u32) -> Self {
        let one = QTRational::one();
        Self::from_fn(bound, true, |k| &(&one - &QTRational::q().pow(k)) * &(&one - &QTRational::t().pow(k)))
    }

    pub fn with_x(&self) -> bool {
        self.with_x
    }

    pub fn bound(&self) -> u32 {
        self.scales.len() as u32
    }

    /// # Panics
    /// If `k` is zero or above the bound the rule was built with.
    pub fn scale(&self, k: u32) -> &QTRational {
        &self.scales[k as usize - 1]
    }

    /// `prod_i scale(rho_i)`.
    pub fn scale_partition(&self, parts: &[u32]) -> QTRational {
        parts.iter().fold(QTRational::one(), |acc, &k| &acc * self.scale(k))
    }
}
