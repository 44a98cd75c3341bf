//! Transition data between the classical bases and the power sums, per degree.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{partitions, Partition};
use super::Basis;

/// Sparse row: `(index, coefficient)` pairs.
pub(crate) type Row = Vec<(usize, BigRational)>;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub z: Vec<BigInt>,
    /// `chi[lambda][rho]`, irreducible character values.
    pub chi: Vec<Vec<BigInt>>,
    /// `to_p[basis][lambda]`: `b_lambda` expanded in `p`.
    to_p: HashMap<Basis, Vec<Row>>,
    /// `from_p[basis][rho]`: `p_rho` expanded in `b`.
    from_p: HashMap<Basis, Vec<Row>>,
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn sparse(v: Vec<BigRational>) -> Row {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl DegreeTables {
    pub fn build(n: u32) -> Self {
        let parts = partitions(n);
        let len = parts.len();
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let z: Vec<BigInt> = parts.iter().map(Partition::z).collect();
        let chi: Vec<Vec<BigInt>> =
            parts.iter().map(|lam| parts.iter().map(|rho| BigInt::from(character(lam, rho))).collect()).collect();

        let mut to_p = HashMap::new();
        let mut from_p = HashMap::new();

        let identity: Vec<Row> = (0..len).map(|i| vec![(i, BigRational::one())]).collect();
        to_p.insert(Basis::P, identity.clone());
        from_p.insert(Basis::P, identity);

        // s_lambda = sum_rho chi^lambda(rho) / z_rho p_rho, and p_rho = sum_lambda chi^lambda(rho) s_lambda.
        let s_to_p: Vec<Row> = (0..len)
            .map(|l| sparse((0..len).map(|r| ratio(chi[l][r].clone(), z[r].clone())).collect()))
            .collect();
        let p_to_s: Vec<Row> = (0..len)
            .map(|r| sparse((0..len).map(|l| BigRational::from_integer(chi[l][r].clone())).collect()))
            .collect();
        to_p.insert(Basis::S, s_to_p);
        from_p.insert(Basis::S, p_to_s);

        // p_rho = sum_lambda R(rho, lambda) m_lambda.
        let p_to_m: Vec<Vec<BigRational>> = parts
            .iter()
            .map(|rho| parts.iter().map(|lam| BigRational::from_integer(BigInt::from(p_in_m(rho, lam)))).collect())
            .collect();
        to_p.insert(Basis::M, invert(&p_to_m).into_iter().map(sparse).collect());
        from_p.insert(Basis::M, p_to_m.into_iter().map(sparse).collect());

        // h_lambda and e_lambda as products of one-row expansions.
        for (basis, eps) in [(Basis::H, false), (Basis::E, true)] {
            let dense: Vec<Vec<BigRational>> = parts
                .iter()
                .map(|lam| {
                    let mut acc: HashMap<Partition, BigRational> = HashMap::from([(Partition::empty(), BigRational::one())]);
                    for &k in lam.parts() {
                        let mut next = HashMap::new();
                        for rho in partitions(k) {
                            let mut c = ratio(BigInt::one(), rho.z());
                            if eps && rho.sign() < 0 {
                                c = -c;
                            }
                            for (sig, a) in &acc {
                                let key = sig.union(&rho);
                                *next.entry(key).or_insert_with(BigRational::zero) += a * &c;
                            }
                        }
                        acc = next;
                    }
                    let mut row = vec![BigRational::zero(); len];
                    for (rho, c) in acc {
                        row[index[&rho]] = c;
                    }
                    row
                })
                .collect();
            from_p.insert(basis, invert(&dense).into_iter().map(sparse).collect());
            to_p.insert(basis, dense.into_iter().map(sparse).collect());
        }

        DegreeTables { parts, index, z, chi, to_p, from_p }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn to_p(&self, basis: Basis) -> &[Row] {
        &self.to_p[&basis]
    }

    pub fn from_p(&self, basis: Basis) -> &[Row] {
        &self.from_p[&basis]
    }
}

/// Coefficient of `m_lambda` in `p_rho`: ways to sort the parts of `rho` into
/// blocks summing to the parts of `lambda`.
fn p_in_m(rho: &Partition, lam: &Partition) -> u64 {
    fn rec(parts: &[u32], room: &mut Vec<u32>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= first {
                room[j] -= first;
                total += rec(rest, room);
                room[j] += first;
            }
        }
        total
    }
    if !lam.dominates(rho) {
        return 0;
    }
    rec(rho.parts(), &mut lam.parts().to_vec())
}

/// `chi^lambda(rho)` by the Murnaghan-Nakayama rule on beta-sets.
pub fn character(lam: &Partition, rho: &Partition) -> i64 {
    let l = lam.len();
    let beta: Vec<u32> = (0..l).map(|i| lam.parts()[i] + (l - 1 - i) as u32).collect();
    mn(&beta, rho.parts())
}

fn mn(beta: &[u32], rho: &[u32]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        // Sign: parity of beads strictly between the old and new positions.
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[i] = target;
        next.sort_unstable_by(|a, c| c.cmp(a));
        let s = if between % 2 == 0 { 1 } else { -1 };
        total += s * mn(&next, rest);
    }
    total
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub(crate) fn invert(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular transition matrix");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn character_table_of_s3() {
        // Rows (3),(2,1),(1,1,1); columns the same cycle types.
        let expect = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];
        let ps = partitions(3);
        for (i, lam) in ps.iter().enumerate() {
            for (j, rho) in ps.iter().enumerate() {
                assert_eq!(character(lam, rho), expect[i][j], "{lam} {rho}");
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6u32 {
            let t = DegreeTables::build(n);
            for a in 0..t.len() {
                for b in 0..t.len() {
                    let s: BigInt = (0..t.len()).map(|l| &t.chi[l][a] * &t.chi[l][b]).sum();
                    let expect = if a == b { t.z[a].clone() } else { BigInt::zero() };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn power_sums_in_monomials() {
        assert_eq!(p_in_m(&p(&[1, 1]), &p(&[2])), 1);
        assert_eq!(p_in_m(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(p_in_m(&p(&[2, 1]), &p(&[1, 1, 1])), 0);
        assert_eq!(p_in_m(&p(&[1, 1, 1]), &p(&[2, 1])), 3);
    }
}
