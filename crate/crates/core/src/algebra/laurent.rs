use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Variable a [`LaurentPoly`] is written in.
///
/// `T` stands for `q^{2 alpha}`; `A` for `q^alpha` itself, which is needed
/// only for link Alexander polynomials where half-integer powers of `t` occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    Q,
    T,
    A,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::T => 't',
            Var::A => 'a',
        }
    }
}

/// Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, BigInt::one())
    }

    pub fn monomial(var: Var, exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, &coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when `p(v) = p(v^{-1})`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Multiplies by `v^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitutes `v -> v^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Divides every exponent by `k`; fails if some exponent is not a multiple.
    pub fn compress_exponents(&self, k: i64, var: Var) -> Option<Self> {
        let mut out = Self::zero(var);
        for (e, c) in &self.terms {
            if e % k != 0 {
                return None;
            }
            out.add_term(e / k, c);
        }
        Some(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dmin, dmax) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        while let Some(top) = rem.max_exp() {
            if top - dmax < rem.min_exp()? - dmin {
                return None;
            }
            let (q, r) = rem.coeff(top).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let shift = top - dmax;
            quot.add_term(shift, &q);
            for (e, c) in &divisor.terms {
                rem.add_term(e + shift, &(-(c * &q)));
            }
        }
        Some(quot)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = (c.is_negative(), c.abs());
            match (i, sign) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match *e {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => {}
                _ => write!(f, "{abs}*")?,
            }
            match *e {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::T, terms.iter().copied())
    }

    #[test]
    fn display_trefoil() {
        assert_eq!(t(&[(1, 1), (0, -1), (-1, 1)]).to_string(), "t - 1 + t^-1");
        assert_eq!(t(&[(2, -3)]).to_string(), "-3*t^2");
        assert_eq!(LaurentPoly::zero(Var::Q).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let num = t(&[(3, 1), (0, 1)]);
        let den = t(&[(1, 1), (0, 1)]);
        assert_eq!(num.div_exact(&den), Some(t(&[(2, 1), (1, -1), (0, 1)])));
        assert_eq!(t(&[(2, 1), (0, 1)]).div_exact(&den), None);
        let shifted = t(&[(-2, 1), (-1, 2), (0, 1)]);
        assert_eq!(shifted.div_exact(&den), Some(t(&[(-2, 1), (-1, 1)])));
    }

    #[test]
    fn symmetry_and_eval() {
        let p = t(&[(1, -1), (0, 3), (-1, -1)]);
        assert!(p.is_symmetric());
        assert_eq!(p.eval_at_one(), BigInt::from(1));
        assert!(!t(&[(1, 1)]).is_symmetric());
    }
}
