use std::collections::BTreeMap;

use super::recursions::{chu_vandermonde_lhs, chu_vandermonde_rhs, peak_removal_sum, peak_removal_weight, t_pow};
use super::{Category, IdentityReport, Status, Verifier};
use crate::error::Result;
use crate::exactalg::{q_int, MPoly, Monomial, QTRational};
use crate::paths::{for_each, monomial_expansion, monomial_expansion_refined, push, symmetry_check, touches, Family, Params};
use crate::symfun::{w_mu, Basis, Partition, SymFunc};

const THEOREM: Category = Category::Theorem;
const CONJECTURAL: Category = Category::Conjectural;

fn sum_over<F: FnMut(i64) -> Result<QTRational>>(range: std::ops::RangeInclusive<i64>, mut f: F) -> Result<QTRational> {
    let mut acc = QTRational::zero();
    for i in range {
        acc = &acc + &f(i)?;
    }
    Ok(acc)
}

fn q_ratio(a: u32, b: u32) -> QTRational {
    &QTRational::from_mpoly(&q_int(a)) / &QTRational::from_mpoly(&q_int(b))
}

impl Verifier {
    /// Refined Schröder identity: scalar product against `D(n\r)^{.k,od}`.
    pub fn check_schroeder_valley(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let lhs = self.lhs_schroeder(n, k, r, d)?;
        let e = self.enumerator(Family::D, Params::new(0, n as usize, k as usize, d as usize))?;
        let rhs = QTRational::from_mpoly(&e.refined_at(r as usize));
        Ok(IdentityReport::compare("schroeder-valley", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs)
            .with_elements(e.count))
    }

    /// Unrefined Schröder identity: the refined sides summed over `r`.
    pub fn check_schroeder_valley_total(&self, n: i64, k: i64, d: i64) -> Result<IdentityReport> {
        let lhs = sum_over(0..=n - k, |r| self.lhs_schroeder(n, k, r, d))?;
        let e = self.enumerator(Family::D, Params::new(0, n as usize, k as usize, d as usize))?;
        let rhs = QTRational::from_mpoly(&e.total);
        Ok(IdentityReport::compare("schroeder-valley", THEOREM, &[("n", n), ("k", k), ("d", d)], &lhs, &rhs)
            .with_elements(e.count))
    }

    /// Refined square Schröder identity against `SQ'(n\r)^{.k,od}`.
    pub fn check_schroeder_square(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let lhs = self.lhs_square(n, k, r, d)?;
        let e = self.enumerator(Family::SQPrime, Params::new(0, n as usize, k as usize, d as usize))?;
        let rhs = QTRational::from_mpoly(&e.refined_at(r as usize));
        Ok(IdentityReport::compare("schroeder-square", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs)
            .with_elements(e.count))
    }

    /// Unrefined square identity: `<Theta_{e_k} nabla omega(p_{n-k}), e_{n-d} h_d>`
    /// against the refined square values summed over `r`.
    pub fn check_schroeder_square_total(&self, n: i64, k: i64, d: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let omega_p = if n == k { l.one() } else { l.omega(&l.p((n - k) as u32))? };
        let f = l.theta(&l.e(k as u32), &l.nabla(&omega_p)?)?;
        let lhs = l.hall_inner(&f, &l.multiply(&l.e((n - d) as u32), &l.h(d as u32))?)?;
        let summed = sum_over(0..=n - k, |r| self.lhs_square(n, k, r, d))?;
        let e = self.enumerator(Family::SQPrime, Params::new(0, n as usize, k as usize, d as usize))?;
        let rhs = QTRational::from_mpoly(&e.total);
        let report = IdentityReport::compare("schroeder-square", THEOREM, &[("n", n), ("k", k), ("d", d)], &lhs, &rhs)
            .with_elements(e.count);
        if summed != lhs {
            let mut bad = report;
            bad.equal = false;
            bad.status = Status::Unequal;
            return Ok(bad.with_note(format!("refined sum {summed} differs from the unrefined scalar product")));
        }
        Ok(report)
    }

    /// Algebraic Dyck recursion against the table.
    pub fn check_alg_recursion(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let lhs = self.lhs_schroeder(n, k, r, d)?;
        let rhs = self.rhs_alg_recursion(n, k, r, d)?;
        Ok(IdentityReport::compare("alg-recursion", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs))
    }

    /// Algebraic square recursion against the square table.
    pub fn check_alg_recursion_square(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let lhs = self.lhs_square(n, k, r, d)?;
        let rhs = self.rhs_alg_recursion_square(n, k, r, d)?;
        Ok(IdentityReport::compare("alg-recursion-square", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs))
    }

    /// Combinatorial Dyck recursion against direct enumeration.
    pub fn check_comb_recursion(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let lhs = self.refined_count(Family::D, n, k, r, d)?;
        let rhs = self.rhs_comb_recursion(n, k, r, d)?;
        Ok(IdentityReport::compare("comb-recursion", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs))
    }

    /// Combinatorial square recursion against direct enumeration.
    pub fn check_comb_recursion_square(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let lhs = self.refined_count(Family::SQPrime, n, k, r, d)?;
        let rhs = self.rhs_comb_recursion_square(n, k, r, d)?;
        Ok(IdentityReport::compare("comb-recursion-square", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs))
    }

    pub fn check_chu_vandermonde(&self, r: i64, v: i64, j: i64) -> IdentityReport {
        let lhs = chu_vandermonde_lhs(r, v, j);
        let rhs = chu_vandermonde_rhs(r, v, j);
        IdentityReport::compare("chu-vandermonde", THEOREM, &[("r", r), ("v", v), ("j", j)], &lhs, &rhs)
    }

    /// Triangular form of the symmetric-function peak recursion:
    /// `t^d <Delta_{h_d} Theta_{e_k} nabla E_{n-d-k,r}, e_{n-d}>` against the
    /// Schröder value minus the `p >= 1` terms.
    pub fn check_recsf(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let top = &QTRational::from_mpoly(&t_pow(d)) * &self.extended_value(d, n - d, k, r)?;
        let mut err = None;
        let rest = peak_removal_sum(k, r, d, true, |a, kk, rr| match self.extended_value(a, n - d, kk, rr) {
            Ok(v) => v.as_mpoly().expect("polynomial"),
            Err(e) => {
                err.get_or_insert(e);
                MPoly::zero()
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        let rhs = &self.lhs_schroeder(n, k, r, d)? - &QTRational::from_mpoly(&rest);
        Ok(IdentityReport::compare("recsf", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &top, &rhs))
    }

    /// Triangular form of the combinatorial peak recursion, all values by
    /// enumeration.
    pub fn check_reccomb(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let top = &t_pow(d) * &self.extended_count(d, n - d, k, r)?;
        let mut err = None;
        let rest = peak_removal_sum(k, r, d, true, |a, kk, rr| {
            self.extended_count(a, n - d, kk, rr).unwrap_or_else(|e| {
                err.get_or_insert(e);
                MPoly::zero()
            })
        });
        if let Some(e) = err {
            return Err(e);
        }
        let rhs = &self.refined_count(Family::D, n, k, r, d)? - &rest;
        Ok(IdentityReport::compare("reccomb", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &top, &rhs))
    }

    /// `<Delta_{h_d} Theta_{e_k} nabla e_{n-k}, e_n>` against `D(d, n)^{.k}`.
    pub fn check_extended_catalan(&self, n: i64, k: i64, d: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let f = l.theta(&l.e(k as u32), &l.nabla(&l.e((n - k) as u32))?)?;
        let lhs = l.hall_inner(&l.delta(&l.h(d as u32), &f)?, &l.e(n as u32))?;
        let e = self.enumerator(Family::D, Params::new(d as usize, n as usize, k as usize, 0))?;
        let rhs = QTRational::from_mpoly(&e.total);
        Ok(IdentityReport::compare("extended-catalan", THEOREM, &[("n", n), ("k", k), ("d", d)], &lhs, &rhs)
            .with_elements(e.count))
    }

    /// `LSQ'(d, n\r)^{.k} = [n-k]_q/[r]_q LD(d, n\r)^{.k}` as symmetric functions.
    pub fn check_square_to_dyck(&self, d: i64, n: i64, k: i64, r: i64) -> Result<IdentityReport> {
        let (du, nu, ku) = (d as usize, n as usize, k as usize);
        let piece = |family| -> Result<SymFunc> {
            Ok(monomial_expansion_refined(family, du, nu, ku)?.remove(&(r as usize)).unwrap_or_else(|| SymFunc::zero(Basis::M)))
        };
        let lhs = piece(Family::LSQPrime)?;
        let rhs = piece(Family::LD)?.scale(&q_ratio((n - k) as u32, r as u32));
        Ok(IdentityReport::compare("square-to-dyck", THEOREM, &[("d", d), ("n", n), ("k", k), ("r", r)], &lhs, &rhs))
    }

    /// `<Delta_{h_d} Theta_{e_k} nabla omega(p_{n-k}), e_n>` against `SQ'(d, n)^{.k}`,
    /// provided the labelled Dyck sum `LD(d, n)^{.k}` is symmetric.
    pub fn check_square_catalan(&self, n: i64, k: i64, d: i64) -> Result<IdentityReport> {
        let params = [("n", n), ("k", k), ("d", d)];
        if !symmetry_check(Family::LD, d as usize, n as usize, k as usize, n as usize)? {
            let mut report = IdentityReport::compare("square-catalan", THEOREM, &params, &"-", &"-");
            report.equal = false;
            report.status = Status::ConditionalUnmet;
            return Ok(report.with_note("labelled Dyck sum is not symmetric"));
        }
        let l = self.lambda();
        let omega_p = if n == k { l.one() } else { l.omega(&l.p((n - k) as u32))? };
        let f = l.theta(&l.e(k as u32), &l.nabla(&omega_p)?)?;
        let lhs = l.hall_inner(&l.delta(&l.h(d as u32), &f)?, &l.e(n as u32))?;
        let e = self.enumerator(Family::SQPrime, Params::new(d as usize, n as usize, k as usize, 0))?;
        let rhs = QTRational::from_mpoly(&e.total);
        Ok(IdentityReport::compare("square-catalan", THEOREM, &params, &lhs, &rhs).with_elements(e.count))
    }

    /// `Delta_{h_m} Theta_{e_k} nabla e_{n-k}` against the monomial expansion
    /// of `LD(m, n)^{.k}`.
    pub fn check_valley_delta(&self, m: i64, n: i64, k: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let f = l.theta(&l.e(k as u32), &l.nabla(&l.e((n - k) as u32))?)?;
        let lhs = l.convert(&l.delta(&l.h(m as u32), &f)?, Basis::M)?;
        let rhs = monomial_expansion(Family::LD, m as usize, n as usize, k as usize)?;
        Ok(IdentityReport::compare("valley-delta", CONJECTURAL, &[("m", m), ("n", n), ("k", k)], &lhs, &rhs))
    }

    /// Symmetry of `LD(m, n)^{.k}` in `n` variables.
    pub fn check_symmetry(&self, m: i64, n: i64, k: i64) -> Result<IdentityReport> {
        let sym = symmetry_check(Family::LD, m as usize, n as usize, k as usize, n as usize)?;
        Ok(IdentityReport::compare("symmetry", CONJECTURAL, &[("m", m), ("n", n), ("k", k)], &sym, &true))
    }

    /// `Theta_{e_k} nabla e_{n-k} = Delta'_{e_{n-k-1}} e_n`.
    pub fn check_theta_en(&self, n: i64, k: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let lhs = l.convert(&l.theta(&l.e(k as u32), &l.nabla(&l.e((n - k) as u32))?)?, Basis::S)?;
        let rhs = l.convert(&l.delta_prime(&l.e((n - k - 1) as u32), &l.e(n as u32))?, Basis::S)?;
        Ok(IdentityReport::compare("theta-en", THEOREM, &[("n", n), ("k", k)], &lhs, &rhs))
    }

    /// `<H~_mu, H~_nu>_* = delta_{mu nu} w_mu`.
    pub fn check_orthogonality(&self, mu: &Partition, nu: &Partition) -> Result<IdentityReport> {
        let l = self.lambda();
        let lhs = l.star_inner(&l.ht(mu), &l.ht(nu))?;
        let rhs = if mu == nu { w_mu(mu) } else { QTRational::zero() };
        let mut report = IdentityReport::compare("orthogonality", THEOREM, &[], &lhs, &rhs);
        report.params.insert("mu".into(), mu.to_string().into());
        report.params.insert("nu".into(), nu.to_string().into());
        Ok(report)
    }

    /// `h_m^perp Theta_{e_k} nabla E_{n-k,r}` against the sum over removed
    /// peaks of `Delta_{h_{m-p}} Theta_{e_{k-i}} nabla E_{n-m-(k-i), r-p+i}`.
    pub fn check_sf_identity(&self, m: i64, n: i64, k: i64, r: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let lhs = l.h_perp(m as u32, &*self.theta_nabla_e(n as u32, k as u32, r as u32)?)?;
        let mut rhs = SymFunc::zero(Basis::P);
        for p in 0..=m {
            for i in 0..=p {
                let (kk, rr, nn) = (k - i, r - p + i, n - m);
                if kk < 0 || rr < 0 || nn < kk || rr > nn - kk {
                    continue;
                }
                let w = &t_pow(m - p) * &peak_removal_weight(r, p, i);
                if w.is_zero() {
                    continue;
                }
                let g = l.delta(&l.h((m - p) as u32), &*self.theta_nabla_e(nn as u32, kk as u32, rr as u32)?)?;
                rhs = rhs.add(&g.scale(&QTRational::from_mpoly(&w)));
            }
        }
        let lhs = l.convert(&lhs, Basis::S)?;
        let rhs = l.convert(&rhs, Basis::S)?;
        Ok(IdentityReport::compare("sf-identity", THEOREM, &[("m", m), ("n", n), ("k", k), ("r", r)], &lhs, &rhs))
    }

    /// `sum_k E_{n,k} = e_n` and `sum_r [n]_q/[r]_q E_{n,r} = omega(p_n)`.
    pub fn check_e_split(&self, n: i64) -> Result<Vec<IdentityReport>> {
        let l = self.lambda();
        let nu = n as u32;
        let family = l.e_family(nu)?;
        let total = family.iter().fold(SymFunc::zero(Basis::P), |a, f| a.add(f));
        let weighted = family
            .iter()
            .enumerate()
            .skip(1)
            .fold(SymFunc::zero(Basis::P), |a, (r, f)| a.add(&f.scale(&q_ratio(nu, r as u32))));
        let omega_p = if n == 0 { l.one() } else { l.omega(&l.p(nu))? };
        let lhs0 = l.convert(&total, Basis::S)?;
        let rhs0 = l.convert(&l.e(nu), Basis::S)?;
        let mut out = vec![IdentityReport::compare("e-split", THEOREM, &[("n", n)], &lhs0, &rhs0).with_note("sum of E_{n,k}")];
        if n >= 1 {
            let lhs1 = l.convert(&weighted, Basis::S)?;
            let rhs1 = l.convert(&omega_p, Basis::S)?;
            out.push(IdentityReport::compare("e-split", THEOREM, &[("n", n)], &lhs1, &rhs1).with_note("weighted sum"));
        }
        Ok(out)
    }

    /// The Schröder scalar product against `<Delta_{h_k} Delta_{e_{n-k-d}} E_{n-k,r}, e_{n-k}>`.
    pub fn check_delta_route(&self, n: i64, k: i64, r: i64, d: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let lhs = self.lhs_schroeder(n, k, r, d)?;
        let rhs = if n - k - d < 0 {
            QTRational::zero()
        } else {
            let e = l.e_nk((n - k) as u32, r)?;
            let f = l.delta(&l.h(k as u32), &l.delta(&l.e((n - k - d) as u32), &e)?)?;
            l.hall_inner(&f, &l.e((n - k) as u32))?
        };
        Ok(IdentityReport::compare("delta-route", THEOREM, &[("n", n), ("k", k), ("r", r), ("d", d)], &lhs, &rhs))
    }

    /// `<nabla e_n, e_n>` against the unlabelled Dyck enumeration.
    pub fn check_qt_catalan(&self, n: i64) -> Result<IdentityReport> {
        let l = self.lambda();
        let nu = n as u32;
        let lhs = l.hall_inner(&l.nabla(&l.e(nu))?, &l.e(nu))?;
        let e = self.enumerator(Family::D, Params::new(0, n as usize, 0, 0))?;
        let rhs = QTRational::from_mpoly(&e.total);
        Ok(IdentityReport::compare("qt-catalan", THEOREM, &[("n", n)], &lhs, &rhs).with_elements(e.count))
    }

    /// Pushing map, term by term: elements of `D(n\r)^{.k,od}` with `p`
    /// diagonal peaks of which `i` were decorated valleys weigh
    /// `t^{d-p} q^{C(i,2)} [r-p+i, i] [r, p-i] D(d-p, n-d\r-p+i)^{.k-i}`.
    pub fn check_pushing(&self, n: i64, k: i64, d: i64) -> Result<Vec<IdentityReport>> {
        let mut groups: BTreeMap<(usize, usize, usize), Vec<(u32, u32)>> = BTreeMap::new();
        let mut images_ok = true;
        let mut failure = None;
        for_each(Family::D, Params::new(0, n as usize, k as usize, d as usize), n as u32, |x| {
            match push(x, n as usize, k as usize, d as usize) {
                Ok(out) => {
                    let r = touches(x);
                    if touches(&out.image) + out.p != r + out.i {
                        images_ok = false;
                    }
                    groups.entry((r, out.p, out.i)).or_default().push((x.dinv(), x.area()));
                }
                Err(e) => {
                    failure.get_or_insert(e);
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        let mut out = Vec::new();
        for r in 0..=(n - k) {
            for p in 0..=d {
                for i in 0..=p {
                    let weights = groups.remove(&(r as usize, p as usize, i as usize)).unwrap_or_default();
                    let lhs = weights
                        .iter()
                        .fold(MPoly::zero(), |acc, &(dinv, area)| &acc + &MPoly::one().mul_monomial(Monomial::new(dinv, area, 0)));
                    let rhs = &(&t_pow(d - p) * &peak_removal_weight(r, p, i)) * &self.extended_count(d - p, n - d, k - i, r - p + i)?;
                    if lhs.is_zero() && rhs.is_zero() {
                        continue;
                    }
                    out.push(
                        IdentityReport::compare("pushing", THEOREM, &[("n", n), ("k", k), ("d", d), ("r", r), ("p", p), ("i", i)], &lhs, &rhs)
                            .with_elements(weights.len() as u64),
                    );
                }
            }
        }
        if !images_ok {
            for rep in &mut out {
                rep.equal = false;
                rep.status = Status::Unequal;
                rep.note = Some("image touch count differs from r - p + i".into());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reports() {
        let v = Verifier::new(4);
        assert!(v.check_schroeder_valley(2, 0, 1, 0).unwrap().equal);
        assert!(v.check_chu_vandermonde(2, 1, 2).equal);
        assert!(v.check_recsf(2, 0, 1, 1).unwrap().equal);
        assert!(v.check_reccomb(2, 0, 1, 1).unwrap().equal);
        assert!(v.check_extended_catalan(0, 0, 0).unwrap().equal);
        assert!(v.check_square_to_dyck(0, 2, 0, 1).unwrap().equal);
        assert!(v.check_square_catalan(1, 0, 0).unwrap().equal);
        assert!(v.check_valley_delta(0, 1, 0).unwrap().equal);
        assert!(v.check_theta_en(3, 1).unwrap().equal);
    }

    #[test]
    fn square_catalan_at_two() {
        let v = Verifier::new(2);
        let rep = v.check_square_catalan(2, 0, 0).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.elements, Some(3));
    }
}
