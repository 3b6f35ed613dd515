//! Series in `y` whose coefficients live in `Z[zeta_r]` and are only known
//! modulo a power of `(zeta_r - 1)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::arith::prime_power;
use super::cyclotomic::CyclotomicInt;
use super::series::BivariateSeries;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloSeries {
    conductor: u64,
    coeffs: Vec<CyclotomicInt>,
    precision: Vec<u32>,
}

impl CycloSeries {
    /// Builds a series from per-`m` coefficients and precisions.
    pub fn new(conductor: u64, coeffs: Vec<CyclotomicInt>, precision: Vec<u32>) -> Result<Self> {
        if coeffs.len() != precision.len() {
            return Err(Error::InvalidParameter("coefficient and precision lengths differ".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| c.conductor() != conductor) {
            return Err(Error::ConductorMismatch(conductor, c.conductor()));
        }
        Ok(CycloSeries { conductor, coeffs, precision })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Highest stored power of `y`.
    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, m: u32) -> &CyclotomicInt {
        &self.coeffs[m as usize]
    }

    /// `e(m)`: the coefficient of `y^m` is known modulo `(zeta - 1)^{e(m)}`.
    pub fn precision(&self, m: u32) -> u32 {
        self.precision[m as usize]
    }

    /// Product truncated to the shorter operand; the precision of each
    /// output coefficient is the minimum over contributing operands.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.conductor != rhs.conductor {
            return Err(Error::ConductorMismatch(self.conductor, rhs.conductor));
        }
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        let mut precision = Vec::with_capacity(len);
        for m in 0..len {
            let mut acc = CyclotomicInt::zero(self.conductor)?;
            let mut e = u32::MAX;
            for k in 0..=m {
                acc.add_assign_ref(&(&self.coeffs[k] * &rhs.coeffs[m - k]));
                e = e.min(self.precision[k]).min(rhs.precision[m - k]);
            }
            coeffs.push(acc);
            precision.push(e);
        }
        Ok(CycloSeries { conductor: self.conductor, coeffs, precision })
    }

    /// For each common `m`, the `(zeta - 1)`-valuation of the coefficient
    /// difference (`None` when it vanishes) and the joint precision.
    pub fn compare(&self, rhs: &Self) -> Result<Vec<(Option<u32>, u32)>> {
        if self.conductor != rhs.conductor {
            return Err(Error::ConductorMismatch(self.conductor, rhs.conductor));
        }
        self.coeffs
            .iter()
            .zip(&rhs.coeffs)
            .zip(self.precision.iter().zip(&rhs.precision))
            .map(|((a, b), (ea, eb))| Ok(((a - b).zeta_valuation()?, *ea.min(eb))))
            .collect()
    }
}

/// Evaluates `x -> zeta_r - 1`, keeping `y` formal.
///
/// The `y^m` coefficient only sees `x^n` with `n <= D - m`, so it is known
/// modulo `(zeta_r - 1)^{D - m + 1}`.
pub fn eval_root(s: &BivariateSeries, r: u64) -> Result<CycloSeries> {
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let d = s.order();
    let zm1 = &CyclotomicInt::zeta(r)? - &CyclotomicInt::one(r)?;
    let powers: Vec<CyclotomicInt> =
        std::iter::successors(Some(CyclotomicInt::one(r)?), |p| Some(p * &zm1)).take(d as usize + 1).collect();
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    let mut precision = Vec::with_capacity(d as usize + 1);
    for m in 0..=d {
        let mut acc = CyclotomicInt::zero(r)?;
        for n in 0..=d - m {
            let c = s.coeff_ref(n, m);
            if !c.is_zero() {
                acc.add_assign_ref(&powers[n as usize].scale(c));
            }
        }
        coeffs.push(acc);
        precision.push(d - m + 1);
    }
    Ok(CycloSeries { conductor: r, coeffs, precision })
}

/// Reduces power-basis coordinates into `[0, r^j)`.
pub fn mod_r_reduce(c: &CyclotomicInt, r: u64, j: u32) -> CyclotomicInt {
    c.reduce_mod(&BigInt::from(r).pow(j))
}

/// Reduces an integer into `[0, r^j)`.
pub fn mod_r_reduce_int(c: &BigInt, r: u64, j: u32) -> BigInt {
    use num_integer::Integer;
    c.mod_floor(&BigInt::from(r).pow(j))
}
