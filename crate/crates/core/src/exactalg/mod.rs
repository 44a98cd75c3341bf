//! Exact polynomial and rational-function arithmetic in `q, t, z`, plus q-analogues.

mod gcd;
mod monomial;
mod poly;
mod qanalog;
mod rational;
pub mod text;

pub use gcd::{gcd, gcd_cofactors};
pub use monomial::{Monomial, Var};
pub use poly::{MPoly, Poly, Ring, ZPoly};
pub use qanalog::{q_binom, q_factorial, q_int, q_pochhammer, q_pochhammer_rational, QBinomTable};
pub use rational::QTRational;
pub use text::{format_poly, parse_poly, parse_rational, qt};
