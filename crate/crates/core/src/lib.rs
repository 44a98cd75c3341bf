//! Exact q,t-arithmetic for the valley Delta conjectures.
//!
//! * [`exactalg`]: polynomials and rational functions in `q, t, z`.
//! * [`symfun`]: symmetric functions over `Q(q, t)`, modified Macdonald
//!   polynomials and the diagonal operators.
//! * [`paths`]: decorated labelled Dyck and square paths with their statistics.
//! * [`identities`]: exact checks of the recursions and enumerative identities.
//! * [`cli`]: the `valley-delta` command-line harness.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod identities;
pub mod paths;
pub mod symfun;

pub use error::{Error, ExactError, Result};
