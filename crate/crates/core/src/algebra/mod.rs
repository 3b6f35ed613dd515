//! Exact arithmetic kernels.

pub mod arith;
pub mod cyclo_series;
pub mod cyclotomic;
pub mod laurent;
pub mod qa;
pub mod series;

pub use cyclo_series::{eval_root, mod_r_reduce, mod_r_reduce_int, CycloSeries};
pub use cyclotomic::{check_zeta_ideal, check_zeta_ideal_literal, CyclotomicInt};
pub use laurent::{LaurentPoly, Var};
pub use qa::QaLaurent;
pub use series::BivariateSeries;

/// Product of two series, truncated to the smaller order.
pub fn series_mul(a: &BivariateSeries, b: &BivariateSeries) -> BivariateSeries {
    a * b
}

/// Expands a Laurent polynomial in `q` or `t` into the `(x, y)` basis.
pub fn laurent_to_series(p: &LaurentPoly, order: u32) -> error::Result<BivariateSeries> {
    BivariateSeries::from_laurent(p, order)
}

/// Replaces `y` by `(1 + x)^N - 1`.
pub fn substitute_color(s: &BivariateSeries, color: u32) -> BivariateSeries {
    s.substitute_color(color)
}

/// Coordinates of `c` in the basis `(zeta - 1)^n`.
pub fn zeta_power_to_offset_basis(c: &CyclotomicInt) -> Vec<num_bigint::BigInt> {
    c.to_offset_basis()
}

use crate::error;
