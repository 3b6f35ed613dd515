//! Exact computation of the two-variable unified `sl2` knot invariant
//! `F_inf(q, q^alpha)` as a truncated integer series, together with
//! independent colored Jones, Alexander and ADO computations and the
//! congruence and finite-type checks that tie them together.

pub mod algebra;
pub mod coefficients;
pub mod error;
pub mod knots;
pub mod oracles;
pub mod universal;
pub mod vassiliev;

pub use algebra::{BivariateSeries, CycloSeries, CyclotomicInt, LaurentPoly, QaLaurent, Var};
pub use error::{Error, Result};
