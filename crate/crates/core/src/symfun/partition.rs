use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An integer partition, parts weakly decreasing and positive.
///
/// Cells are `(i, j)` with `1 <= i <= parts[j-1]`: row `j` from the bottom,
/// column `i` from the left. Ordering is by size, then reverse lexicographic,
/// so `(3) < (2,1) < (1,1,1) < (4)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Limbs of one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellGeometry {
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn row(n: u32) -> Self {
        Self::from_unsorted(vec![n])
    }

    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `mu_j` with `j` 1-based; zero beyond the length.
    pub fn part(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32).collect();
        Partition { parts }
    }

    /// Cells `(i, j)`, row by row from the bottom.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().enumerate().flat_map(|(j, &p)| (1..=p).map(move |i| (i, j as u32 + 1)))
    }

    pub fn geometry(&self, cell: (u32, u32)) -> CellGeometry {
        let (i, j) = cell;
        let row = self.part(j as usize);
        let col = self.parts.iter().filter(|&&p| p >= i).count() as u32;
        assert!(i >= 1 && i <= row, "cell {cell:?} outside {self}");
        CellGeometry { arm: row - i, leg: col - j, coarm: i - 1, coleg: j - 1 }
    }

    /// `n(mu) = sum over cells of the co-leg`.
    pub fn n(&self) -> u32 {
        self.parts.iter().enumerate().map(|(j, &p)| j as u32 * p).sum()
    }

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut run = 0u32;
        for (idx, &p) in self.parts.iter().enumerate() {
            run = if idx > 0 && self.parts[idx - 1] == p { run + 1 } else { 1 };
            acc *= BigInt::from(p) * BigInt::from(run);
        }
        acc
    }

    /// `(-1)^{|mu| - l(mu)}`, the sign of omega on `p_mu`.
    pub fn sign(&self) -> i64 {
        if (self.size() as usize - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Dominance order: `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for j in 1..=self.len().max(other.len()) {
            a += self.part(j);
            b += other.part(j);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `self / other` is a horizontal strip (at most one cell per column).
    pub fn is_horizontal_strip_over(&self, other: &Partition) -> bool {
        self.contains(other) && (1..=self.len()).all(|j| other.part(j) >= self.part(j + 1))
    }

    /// Union of parts, `p_lambda p_mu = p_{lambda cup mu}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1,1]` (brackets optional, `[]` is the empty partition).
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidArgument(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let mut sorted = partitions(4);
        sorted.sort();
        assert_eq!(sorted, partitions(4));
    }

    #[test]
    fn limbs_of_a_cell() {
        // Row lengths 9,8,7,7,4,4,3,2; cell in column 3 of row 4.
        let mu = p(&[9, 8, 7, 7, 4, 4, 3, 2]);
        let g = mu.geometry((3, 4));
        assert_eq!(g, CellGeometry { arm: 4, leg: 3, coarm: 2, coleg: 3 });
    }

    #[test]
    fn conjugate_and_statistics() {
        let mu = p(&[3, 1]);
        assert_eq!(mu.conjugate(), p(&[2, 1, 1]));
        assert_eq!(mu.conjugate().conjugate(), mu);
        assert_eq!(mu.n(), 1);
        assert_eq!(mu.conjugate().n(), 3);
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(mu.sign(), 1);
    }

    #[test]
    fn dominance_and_strips() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
        assert!(p(&[3, 1]).is_horizontal_strip_over(&p(&[1])));
        assert!(p(&[2, 2]).is_horizontal_strip_over(&p(&[2])));
        assert!(!p(&[2, 2]).is_horizontal_strip_over(&p(&[1, 1])));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[2, 1]).to_string(), "[2,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }
}
