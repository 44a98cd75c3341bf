//! Polynomial gcd over `Z[q, t, z]`.
//!
//! The fast path is the heuristic gcd: evaluate one variable at a large integer,
//! recurse, and lift the answer back by xi-adic interpolation. A candidate is
//! accepted only after trial division, so a wrong guess costs time, never
//! correctness. Six failed evaluation points fall back to a recursive primitive
//! remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::monomial::Var;
use super::poly::ZPoly;

const HEU_ATTEMPTS: usize = 6;

/// Gcd of two integer polynomials, normalised to a positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    gcd_cofactors(f, g).0
}

/// Returns `(h, f / h, g / h)` with `h = gcd(f, g)` normalised to a positive
/// leading coefficient. For `f = g = 0` all three are zero.
pub fn gcd_cofactors(f: &ZPoly, g: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    if f.is_zero() && g.is_zero() {
        return (ZPoly::zero(), ZPoly::zero(), ZPoly::zero());
    }
    let mf = f.monomial_content();
    let mg = g.monomial_content();
    let mono = mf.gcd(mg);
    let (h0, _, _) = {
        let f1 = if f.is_zero() { ZPoly::zero() } else { f.div_monomial(mf) };
        let g1 = if g.is_zero() { ZPoly::zero() } else { g.div_monomial(mg) };
        let vars = present_vars(&f1, &g1);
        match heu_gcd(&f1, &g1, &vars) {
            Some(r) => r,
            None => {
                let h = prs_gcd(&f1, &g1, &vars);
                (h, ZPoly::zero(), ZPoly::zero())
            }
        }
    };
    let mut h = if f.is_zero() || g.is_zero() {
        // The monomial content of the zero side is vacuous.
        let nz = if f.is_zero() { g } else { f };
        nz.clone()
    } else {
        h0.mul_monomial(mono)
    };
    if h.leading_coeff_is_negative() {
        h = -h;
    }
    let cf = f.div_exact(&h).expect("gcd does not divide f");
    let cg = g.div_exact(&h).expect("gcd does not divide g");
    (h, cf, cg)
}

fn present_vars(f: &ZPoly, g: &ZPoly) -> Vec<Var> {
    // Evaluate the variable of largest degree last; it keeps the integers smaller.
    let mut vars: Vec<Var> =
        Var::ALL.into_iter().filter(|&v| f.contains_var(v) || g.contains_var(v)).collect();
    vars.sort_by_key(|&v| std::cmp::Reverse(f.degree_in(v).max(g.degree_in(v))));
    vars
}

fn trivial(f: &ZPoly, g: &ZPoly) -> Option<(ZPoly, ZPoly, ZPoly)> {
    let sign_one = |p: &ZPoly| if p.leading_coeff_is_negative() { ZPoly::from_i64(-1) } else { ZPoly::one() };
    if f.is_zero() && g.is_zero() {
        return Some((ZPoly::zero(), ZPoly::zero(), ZPoly::zero()));
    }
    if f.is_zero() {
        let s = sign_one(g);
        return Some((&s * g, ZPoly::zero(), s));
    }
    if g.is_zero() {
        let s = sign_one(f);
        return Some((&s * f, s, ZPoly::zero()));
    }
    if f.is_constant() || g.is_constant() {
        let c = f.content().gcd(&g.content());
        return Some((ZPoly::constant(c.clone()), f.div_int_exact(&c), g.div_int_exact(&c)));
    }
    None
}

/// Heuristic gcd with cofactors; `vars` lists the variables still to be eliminated.
fn heu_gcd(f: &ZPoly, g: &ZPoly, vars: &[Var]) -> Option<(ZPoly, ZPoly, ZPoly)> {
    if let Some(r) = trivial(f, g) {
        return Some(r);
    }
    let Some((&v, rest)) = vars.split_first() else {
        // Both constants; handled by `trivial`.
        unreachable!("non-constant polynomial with no variables")
    };
    if !f.contains_var(v) && !g.contains_var(v) {
        return heu_gcd(f, g, rest);
    }
    let c = f.content().gcd(&g.content());
    let f = f.div_int_exact(&c);
    let g = g.div_int_exact(&c);

    let f_norm = f.max_norm();
    let g_norm = g.max_norm();
    let lc = |p: &ZPoly| p.leading_term().unwrap().1.abs();
    let b: BigInt = BigInt::from(2) * (&f_norm).min(&g_norm) + 29;
    let by_lc = (&f_norm / lc(&f)).min(&g_norm / lc(&g));
    let mut xi = std::cmp::max(std::cmp::min(b.clone(), BigInt::from(99) * b.sqrt()), BigInt::from(2) * by_lc + 4);

    for _ in 0..HEU_ATTEMPTS {
        let ff = f.eval_var(v, &xi);
        let gg = g.eval_var(v, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some((h, cff, cfg)) = heu_gcd(&ff, &gg, rest) {
                let h = primitive(&interpolate(&h, &xi, v));
                if let Some(cf) = f.div_exact(&h) {
                    if let Some(cg) = g.div_exact(&h) {
                        return Some((h.scale(&c), cf, cg));
                    }
                }
                let cff = interpolate(&cff, &xi, v);
                if let Some(h) = f.div_exact(&cff) {
                    if let Some(cg) = g.div_exact(&h) {
                        return Some((h.scale(&c), cff, cg));
                    }
                }
                let cfg = interpolate(&cfg, &xi, v);
                if let Some(h) = g.div_exact(&cfg) {
                    if let Some(cf) = f.div_exact(&h) {
                        return Some((h.scale(&c), cf, cfg));
                    }
                }
            }
        }
        xi = BigInt::from(73794) * &xi * xi.sqrt().sqrt() / BigInt::from(27011);
    }
    None
}

fn primitive(p: &ZPoly) -> ZPoly {
    let c = p.content();
    if c.is_zero() {
        return p.clone();
    }
    let mut out = p.div_int_exact(&c);
    if out.leading_coeff_is_negative() {
        out = -out;
    }
    out
}

/// Symmetric residue of `c` modulo `m`, in `(-m/2, m/2]`.
fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if BigInt::from(2) * &r > *m {
        r - m
    } else {
        r
    }
}

/// Recovers a polynomial in `v` from its image at `v = xi` by balanced xi-adic digits.
fn interpolate(h: &ZPoly, xi: &BigInt, v: Var) -> ZPoly {
    let mut digits = Vec::new();
    let mut h = h.clone();
    while !h.is_zero() {
        let d = h.map_coeffs(|c| sym_mod(c, xi));
        h = (&h - &d).div_int_exact(xi);
        digits.push(d);
    }
    ZPoly::from_coefficients_in(v, &digits)
}

/// Recursive primitive remainder sequence; result up to sign.
fn prs_gcd(f: &ZPoly, g: &ZPoly, vars: &[Var]) -> ZPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let Some(pos) = vars.iter().position(|&v| f.contains_var(v) || g.contains_var(v)) else {
        return ZPoly::constant(f.content().gcd(&g.content()));
    };
    let v = vars[pos];
    let rest: Vec<Var> = vars.iter().copied().filter(|&w| w != v).collect();
    let cf = content_in(f, v, &rest);
    let cg = content_in(g, v, &rest);
    let c = prs_gcd(&cf, &cg, &rest);
    let mut a = f.div_exact(&cf).unwrap();
    let mut b = g.div_exact(&cg).unwrap();
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.degree_in(v) == 0 {
            // b is a nonzero element of Z[rest] and primitive in v, hence a unit.
            return c;
        }
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        a = b;
        let cr = content_in(&r, v, &rest);
        b = r.div_exact(&cr).unwrap();
    }
    let cb = content_in(&b, v, &rest);
    &c * &b.div_exact(&cb).unwrap()
}

fn content_in(p: &ZPoly, v: Var, rest: &[Var]) -> ZPoly {
    let mut acc = ZPoly::zero();
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = prs_gcd(&acc, &c, rest);
        if acc.is_one() {
            break;
        }
    }
    if acc.leading_coeff_is_negative() {
        -acc
    } else {
        acc
    }
}

fn pseudo_rem(a: &ZPoly, b: &ZPoly, v: Var) -> ZPoly {
    let db = b.degree_in(v);
    let lb = b.coefficients_in(v).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v).pop().unwrap();
        let shift = ZPoly::var(v).pow(dr - db);
        r = &(&lb * &r) - &(&(&lr * b) * &shift);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Monomial;

    fn zp(terms: &[(u32, u32, u32, i64)]) -> ZPoly {
        ZPoly::from_terms(terms.iter().map(|&(a, b, c, k)| (Monomial::new(a, b, c), BigInt::from(k))))
    }

    #[test]
    fn difference_of_squares_shares_linear_factor() {
        let f = zp(&[(2, 0, 0, 1), (0, 2, 0, -1)]);
        let g = zp(&[(1, 0, 0, 1), (0, 1, 0, -1)]);
        // t is the leading monomial, so the normalised gcd is t - q.
        assert_eq!(gcd(&f, &g), -g);
    }

    #[test]
    fn contents_and_monomials_are_included() {
        let f = zp(&[(2, 1, 0, 6), (1, 2, 0, 6)]);
        let g = zp(&[(1, 1, 1, 4)]);
        assert_eq!(gcd(&f, &g), zp(&[(1, 1, 0, 2)]));
    }

    #[test]
    fn heuristic_and_prs_agree() {
        let a = zp(&[(1, 0, 0, 1), (0, 1, 1, -3), (0, 0, 0, 2)]);
        let b = zp(&[(2, 0, 0, 1), (0, 1, 0, 1)]);
        let c = zp(&[(0, 2, 0, 1), (1, 0, 1, -1), (0, 0, 0, 5)]);
        let f = &(&a * &b) * &b;
        let g = &(&a * &b) * &c;
        let vars = present_vars(&f, &g);
        let mut expect = &a * &b;
        if expect.leading_coeff_is_negative() {
            expect = -expect;
        }
        assert_eq!(gcd(&f, &g), expect);
        let p = primitive(&prs_gcd(&f, &g, &vars));
        assert_eq!(p, expect);
    }

    #[test]
    fn coprime_inputs_give_one() {
        let f = zp(&[(1, 0, 0, 1), (0, 0, 0, -1)]);
        let g = zp(&[(1, 0, 0, 1), (0, 0, 0, 1)]);
        assert!(gcd(&f, &g).is_one());
        let vars = present_vars(&f, &g);
        assert!(primitive(&prs_gcd(&f, &g, &vars)).is_one());
    }
}
