//! The unified invariant `F_inf(q, q^alpha)` from a truncated state sum on
//! the Verma module.

pub mod statesum;
pub mod weights;

use std::cell::RefCell;
use std::collections::HashMap;

use crate::algebra::{BivariateSeries, QaLaurent};
use crate::coefficients::{CoefficientTable, TableKind};
use crate::error::{Error, Result};
use crate::knots::{closure_to_long, normalize_writhe, BraidWord, LongKnotDiagram};

pub use statesum::{state_sum, StateRing};
pub use weights::crossing_weights;

/// Series in `u = q - 1`, `w = q^alpha - 1` truncated at total degree `D`.
pub struct VermaRing {
    order: u32,
    q_powers: RefCell<HashMap<i64, BivariateSeries>>,
    a_powers: RefCell<HashMap<i64, BivariateSeries>>,
}

impl VermaRing {
    pub fn new(order: u32) -> Self {
        VermaRing { order, q_powers: RefCell::default(), a_powers: RefCell::default() }
    }

    fn monomial(&self, q: i64, a: i64) -> BivariateSeries {
        let d = self.order;
        let qs = self.q_powers.borrow_mut().entry(q).or_insert_with(|| BivariateSeries::one_plus_x_pow(q, d)).clone();
        let as_ = self.a_powers.borrow_mut().entry(a).or_insert_with(|| BivariateSeries::one_plus_y_pow(a, d)).clone();
        &qs * &as_
    }
}

impl StateRing for VermaRing {
    type Elem = BivariateSeries;

    fn zero(&self) -> BivariateSeries {
        BivariateSeries::zero(self.order)
    }

    fn is_zero(&self, e: &BivariateSeries) -> bool {
        e.is_zero()
    }

    fn add_assign(&self, acc: &mut BivariateSeries, e: &BivariateSeries) {
        acc.add_assign_ref(e);
    }

    fn mul(&self, a: &BivariateSeries, b: &BivariateSeries) -> BivariateSeries {
        a * b
    }

    fn embed(&self, p: &QaLaurent) -> BivariateSeries {
        let mut out = self.zero();
        for (q, a, c) in p.terms() {
            out.add_assign_ref(&self.monomial(q, a).scale(c));
        }
        out
    }

    fn index_cap(&self) -> u32 {
        self.order
    }

    fn order_budget(&self) -> Option<u32> {
        Some(self.order)
    }
}

/// `F_inf` of a writhe-0 long knot in the basis `x = q^2 - 1`,
/// `y = q^{2 alpha} - 1`, truncated at total degree `order`.
pub fn compute_f_infinity(d: &LongKnotDiagram, order: u32) -> Result<BivariateSeries> {
    let linear = state_sum(&VermaRing::new(order), d)?;
    linear.square_basis_from_linear().map_err(|e| match e {
        Error::OddExponent { var: 'a', exponent } => {
            Error::OddAlphaExponent(format!("degree {exponent} term of {} events", d.events().len()))
        }
        other => other,
    })
}

/// `F_inf` of the closure of a braid, framed by writhe normalization.
pub fn f_infinity(b: &BraidWord, order: u32) -> Result<BivariateSeries> {
    compute_f_infinity(&normalize_writhe(&closure_to_long(b)?), order)
}

/// The table `b_{n,m}` for `n + m <= order`.
pub fn b_table(b: &BraidWord, order: u32) -> Result<CoefficientTable> {
    Ok(CoefficientTable::from_series(TableKind::B, None, &f_infinity(b, order)?))
}
