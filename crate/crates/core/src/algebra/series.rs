//! Total-degree truncated series in two variables over the integers.
//!
//! The same container serves two bases. In the *square* basis the
//! variables are `x = q^2 - 1` and `y = q^{2 alpha} - 1`; this is where the
//! unified invariant and all coefficient tables live. In the *linear* basis
//! they are `u = q - 1` and `w = q^alpha - 1`, where state sums are
//! accumulated.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::arith::binomial;
use super::laurent::{LaurentPoly, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivariateSeries {
    order: u32,
    coeffs: Vec<BigInt>,
}

#[inline]
fn slot(n: u32, m: u32) -> usize {
    let k = (n + m) as usize;
    k * (k + 1) / 2 + m as usize
}

fn len_for(order: u32) -> usize {
    let d = order as usize + 1;
    d * (d + 1) / 2
}

impl BivariateSeries {
    pub fn zero(order: u32) -> Self {
        BivariateSeries { order, coeffs: vec![BigInt::zero(); len_for(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(order, BigInt::one())
    }

    pub fn constant(order: u32, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The first variable (`x` or `u`).
    pub fn x(order: u32) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[slot(1, 0)] = BigInt::one();
        }
        s
    }

    /// The second variable (`y` or `w`).
    pub fn y(order: u32) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[slot(0, 1)] = BigInt::one();
        }
        s
    }

    /// Builds a series from `(n, m, c)` triples; terms with `n + m > order`
    /// are dropped.
    pub fn from_terms<I, C>(order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (n, m, c) in terms {
            if n + m <= order {
                s.coeffs[slot(n, m)] += c.into();
            }
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of `x^n y^m`; zero beyond the truncation order.
    pub fn coeff(&self, n: u32, m: u32) -> BigInt {
        if n + m > self.order {
            return BigInt::zero();
        }
        self.coeffs[slot(n, m)].clone()
    }

    pub fn coeff_ref(&self, n: u32, m: u32) -> &BigInt {
        &self.coeffs[slot(n, m)]
    }

    pub fn set(&mut self, n: u32, m: u32, c: BigInt) {
        assert!(n + m <= self.order, "({n},{m}) beyond order {}", self.order);
        self.coeffs[slot(n, m)] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coefficients, by increasing total degree then `m`.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        (0..=self.order).flat_map(move |k| {
            (0..=k).filter_map(move |m| {
                let c = &self.coeffs[slot(k - m, m)];
                (!c.is_zero()).then_some((k - m, m, c))
            })
        })
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        BivariateSeries { order, coeffs: self.coeffs[..len_for(order)].to_vec() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BivariateSeries { order: self.order, coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        if rhs.order < self.order {
            *self = self.truncate(rhs.order);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True when no coefficient involves the second variable.
    pub fn is_univariate_x(&self) -> bool {
        self.iter_nonzero().all(|(_, m, _)| m == 0)
    }

    /// `(1 + x)^k` for any integer `k`.
    pub fn one_plus_x_pow(k: i64, order: u32) -> Self {
        Self::from_terms(order, (0..=order).map(|n| (n, 0, binomial(k, n))))
    }

    /// `(1 + y)^k` for any integer `k`.
    pub fn one_plus_y_pow(k: i64, order: u32) -> Self {
        Self::from_terms(order, (0..=order).map(|m| (0, m, binomial(k, m))))
    }

    /// Expands a Laurent polynomial: `q^{2k} -> (1+x)^k`, `t^k -> (1+y)^k`,
    /// `(q^alpha)^{2k} -> (1+y)^k`. Odd powers of `q` or `q^alpha` are rejected.
    pub fn from_laurent(p: &LaurentPoly, order: u32) -> Result<Self> {
        let mut out = Self::zero(order);
        for (e, c) in p.terms() {
            let var = p.var();
            let half = match var {
                Var::T => e,
                Var::Q | Var::A if e % 2 == 0 => e / 2,
                _ => return Err(Error::OddExponent { var: var.symbol(), exponent: e }),
            };
            let term = match var {
                Var::Q => Self::one_plus_x_pow(half, order),
                _ => Self::one_plus_y_pow(half, order),
            };
            out.add_assign_ref(&term.scale(c));
        }
        Ok(out)
    }

    /// Substitutes `y -> (1+x)^N - 1`; the result only involves `x`.
    pub fn substitute_color(&self, color: u32) -> Self {
        let d = self.order;
        let shift = &Self::one_plus_x_pow(color as i64, d) - &Self::one(d);
        let mut out = Self::zero(d);
        let mut power = Self::one(d);
        for m in 0..=d {
            for n in 0..=d - m {
                let c = &self.coeffs[slot(n, m)];
                if c.is_zero() {
                    continue;
                }
                // x^n * shift^m, shift^m is supported on x-degrees >= m
                for k in m..=d - n {
                    let v = power.coeff_ref(k, 0);
                    if !v.is_zero() {
                        out.coeffs[slot(n + k, 0)] += c * v;
                    }
                }
            }
            power = &power * &shift;
        }
        out
    }

    /// Rewrites a series given in the linear basis `(u, w) = (q-1, q^alpha-1)`
    /// in the square basis `(x, y) = (q^2-1, q^{2alpha}-1)`.
    ///
    /// Fails when the result would need non-integral coefficients, which is
    /// exactly what happens for series that are not functions of `q^2` and
    /// `q^{2 alpha}`.
    pub fn square_basis_from_linear(&self) -> Result<Self> {
        let d = self.order;
        // x = 2u + u^2 and y = 2w + w^2 in the linear basis
        let x_lin = Self::from_terms(d, [(1, 0, 2), (2, 0, 1)]);
        let y_lin = Self::from_terms(d, [(0, 1, 2), (0, 2, 1)]);
        let x_pows: Vec<Self> =
            std::iter::successors(Some(Self::one(d)), |p| Some(p * &x_lin)).take(d as usize + 1).collect();
        let y_pows: Vec<Self> =
            std::iter::successors(Some(Self::one(d)), |p| Some(p * &y_lin)).take(d as usize + 1).collect();
        let mut residual = self.clone();
        let mut out = Self::zero(d);
        for k in 0..=d {
            let lead = BigInt::from(2).pow(k);
            for m in 0..=k {
                let n = k - m;
                let (b, rem) = residual.coeffs[slot(n, m)].div_rem(&lead);
                if !rem.is_zero() {
                    let var = if m > 0 { 'a' } else { 'q' };
                    return Err(Error::OddExponent { var, exponent: k as i64 });
                }
                if b.is_zero() {
                    continue;
                }
                let basis = &x_pows[n as usize] * &y_pows[m as usize];
                residual = &residual - &basis.scale(&b);
                out.coeffs[slot(n, m)] = b;
            }
        }
        Ok(out)
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self + &(-rhs)
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;
    fn neg(self) -> BivariateSeries {
        BivariateSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let d = self.order.min(rhs.order);
        let mut out = BivariateSeries::zero(d);
        for k1 in 0..=d {
            for m1 in 0..=k1 {
                let a = &self.coeffs[slot(k1 - m1, m1)];
                if a.is_zero() {
                    continue;
                }
                let n1 = k1 - m1;
                for k2 in 0..=d - k1 {
                    for m2 in 0..=k2 {
                        let b = &rhs.coeffs[slot(k2 - m2, m2)];
                        if !b.is_zero() {
                            out.coeffs[slot(n1 + k2 - m2, m1 + m2)] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRecord {
    #[serde(rename = "D")]
    order: u32,
    coeffs: Vec<(u32, u32, String)>,
}

impl Serialize for BivariateSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRecord { order: self.order, coeffs: self.iter_nonzero().map(|(n, m, c)| (n, m, c.to_string())).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariateSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = SeriesRecord::deserialize(d)?;
        let mut s = BivariateSeries::zero(rec.order);
        for (n, m, c) in rec.coeffs {
            if n + m > rec.order {
                return Err(D::Error::custom(format!("({n},{m}) beyond D={}", rec.order)));
            }
            let v: BigInt = c.parse().map_err(D::Error::custom)?;
            s.coeffs[slot(n, m)] += v;
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(order: u32, coeffs: &[i64]) -> BivariateSeries {
        BivariateSeries::from_terms(order, coeffs.iter().enumerate().map(|(n, c)| (n as u32, 0, *c)))
    }

    #[test]
    fn geometric_inverse() {
        let a = xs(3, &[1, 1]);
        let b = xs(3, &[1, -1, 1, -1]);
        assert_eq!(&a * &b, BivariateSeries::one(3));
    }

    #[test]
    fn identity_and_binomial_square() {
        let a = BivariateSeries::from_terms(4, [(1, 2, 5), (0, 0, -3)]);
        assert_eq!(&a * &BivariateSeries::one(4), a);
        let s = &BivariateSeries::x(2) + &BivariateSeries::y(2);
        let expected = BivariateSeries::from_terms(2, [(2, 0, 1), (1, 1, 2), (0, 2, 1)]);
        assert_eq!(s.pow(2), expected);
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = BivariateSeries::one(5);
        let b = BivariateSeries::x(2);
        assert_eq!((&a * &b).order(), 2);
    }

    #[test]
    fn trefoil_alexander_expansion() {
        let p = LaurentPoly::from_terms(Var::T, [(1, 1), (0, -1), (-1, 1)]);
        let s = BivariateSeries::from_laurent(&p, 3).unwrap();
        assert_eq!(s, BivariateSeries::from_terms(3, [(0, 0, 1), (0, 2, 1), (0, 3, -1)]));
    }

    #[test]
    fn laurent_expansion_edge_cases() {
        let one = LaurentPoly::one(Var::T);
        assert_eq!(BivariateSeries::from_laurent(&one, 3).unwrap(), BivariateSeries::one(3));
        let qinv2 = LaurentPoly::monomial(Var::Q, -2, 1);
        assert_eq!(BivariateSeries::from_laurent(&qinv2, 4).unwrap(), xs(4, &[1, -1, 1, -1, 1]));
        let odd = LaurentPoly::monomial(Var::Q, 3, 1);
        assert_eq!(BivariateSeries::from_laurent(&odd, 4), Err(Error::OddExponent { var: 'q', exponent: 3 }));
    }

    #[test]
    fn color_substitution() {
        let y = BivariateSeries::y(2);
        assert_eq!(y.substitute_color(1), BivariateSeries::x(2));
        assert_eq!(y.substitute_color(2), xs(2, &[0, 2, 1]));
        let s = BivariateSeries::from_terms(3, [(0, 0, 1), (1, 0, 4), (0, 1, 7), (1, 2, 1)]);
        assert_eq!(s.substitute_color(0), xs(3, &[1, 4]));
    }

    #[test]
    fn basis_change_rejects_odd_series() {
        // q^alpha = 1 + w is not a function of q^{2 alpha}
        let w = &BivariateSeries::one(3) + &BivariateSeries::y(3);
        assert!(w.square_basis_from_linear().is_err());
        // q^2 = 1 + 2u + u^2 = 1 + x
        let q2 = BivariateSeries::from_terms(3, [(0, 0, 1), (1, 0, 2), (2, 0, 1)]);
        let expected = &BivariateSeries::one(3) + &BivariateSeries::x(3);
        assert_eq!(q2.square_basis_from_linear().unwrap(), expected);
    }

    #[test]
    fn json_schema() {
        let s = BivariateSeries::from_terms(2, [(0, 0, 1), (1, 1, -12)]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"D":2,"coeffs":[[0,0,"1"],[1,1,"-12"]]}"#);
        let back: BivariateSeries = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<BivariateSeries>(r#"{"D":1,"coeffs":[[1,1,"3"]]}"#).is_err());
    }
}
