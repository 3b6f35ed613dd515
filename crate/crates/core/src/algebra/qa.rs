//! Laurent polynomials in `q` and `A = q^alpha`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::LaurentPoly;

/// Element of `Z[q^{+-1}, A^{+-1}]`, keyed by `(q exponent, A exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QaLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl QaLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q: i64, a: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(q, a, &c.into());
        p
    }

    pub fn add_term(&mut self, q: i64, a: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((q, a)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q, a));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(q, a), c)| (q, a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `{alpha - l} = A q^{-l} - A^{-1} q^{l}`.
    pub fn curly(l: i64) -> Self {
        let mut p = Self::monomial(-l, 1, 1);
        p.add_term(l, -1, &BigInt::from(-1));
        p
    }

    /// `{alpha - l; n} = {alpha - l} {alpha - l - 1} ... {alpha - l - n + 1}`.
    pub fn curly_falling(l: i64, n: u32) -> Self {
        (0..n as i64).fold(Self::one(), |acc, k| &acc * &Self::curly(l + k))
    }

    /// Evaluates `A -> q^k`.
    pub fn specialize_alpha(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero(super::laurent::Var::Q);
        for (q, a, c) in self.terms() {
            out.add_term(q + k * a, c);
        }
        out
    }
}

impl From<&LaurentPoly> for QaLaurent {
    /// Reads a polynomial in `q` as an element with no `A` dependence.
    fn from(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, 0, c);
        }
        out
    }
}

impl Add for &QaLaurent {
    type Output = QaLaurent;
    fn add(self, rhs: &QaLaurent) -> QaLaurent {
        let mut out = self.clone();
        for (q, a, c) in rhs.terms() {
            out.add_term(q, a, c);
        }
        out
    }
}

impl Neg for &QaLaurent {
    type Output = QaLaurent;
    fn neg(self) -> QaLaurent {
        QaLaurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &QaLaurent {
    type Output = QaLaurent;
    fn mul(self, rhs: &QaLaurent) -> QaLaurent {
        let mut out = QaLaurent::zero();
        for (q1, a1, c1) in self.terms() {
            for (q2, a2, c2) in rhs.terms() {
                out.add_term(q1 + q2, a1 + a2, &(c1 * c2));
            }
        }
        out
    }
}
