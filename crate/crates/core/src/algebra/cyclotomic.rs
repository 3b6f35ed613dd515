//! Exact arithmetic in `Z[zeta_m]` for `m = p^l` or `m = 2 p^l`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::arith::{binomial, prime_power, totient, valuation};
use crate::error::{Error, Result};

/// Element of `Z[zeta_m]` in the power basis `1, zeta, ..., zeta^{phi(m)-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    conductor: u64,
    coords: Vec<BigInt>,
}

/// Non-leading terms `(exponent, coefficient)` of the cyclotomic polynomial.
fn cyclotomic_tail(m: u64) -> Result<(usize, Vec<(usize, i64)>)> {
    if m == 2 {
        // Phi_2 = X + 1
        return Ok((1, vec![(0, 1)]));
    }
    let (odd, negate) =
        if m.is_multiple_of(2) && prime_power(m / 2).is_some_and(|(p, _)| p != 2) { (m / 2, true) } else { (m, false) };
    let (p, l) = prime_power(odd).ok_or(Error::UnsupportedConductor(m))?;
    let step = p.pow(l - 1) as usize;
    let phi = (p as usize - 1) * step;
    // Phi_{p^l}(X) = sum_{i<p} X^{i p^{l-1}}; Phi_{2n}(X) = Phi_n(-X) for odd n
    let tail = (0..p as usize - 1).map(|i| (i * step, if negate && i % 2 == 1 { -1 } else { 1 })).collect();
    Ok((phi, tail))
}

/// Validates a conductor and returns `phi(m)`.
pub fn check_conductor(m: u64) -> Result<usize> {
    cyclotomic_tail(m).map(|(phi, _)| phi)
}

impl CyclotomicInt {
    pub fn zero(conductor: u64) -> Result<Self> {
        let phi = check_conductor(conductor)?;
        Ok(CyclotomicInt { conductor, coords: vec![BigInt::zero(); phi] })
    }

    pub fn from_int(conductor: u64, c: impl Into<BigInt>) -> Result<Self> {
        let mut z = Self::zero(conductor)?;
        z.coords[0] = c.into();
        Ok(z)
    }

    pub fn one(conductor: u64) -> Result<Self> {
        Self::from_int(conductor, 1)
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(conductor: u64, k: i64) -> Result<Self> {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut c = vec![BigInt::zero(); e + 1];
        c[e] = BigInt::one();
        Self::from_poly(conductor, c)
    }

    pub fn zeta(conductor: u64) -> Result<Self> {
        Self::zeta_pow(conductor, 1)
    }

    /// Reduces `sum c_k zeta^k` (any length) into the power basis.
    pub fn from_poly(conductor: u64, mut c: Vec<BigInt>) -> Result<Self> {
        let (phi, tail) = cyclotomic_tail(conductor)?;
        let m = conductor as usize;
        if c.len() > m {
            for k in m..c.len() {
                let v = std::mem::take(&mut c[k]);
                c[k % m] += v;
            }
            c.truncate(m);
        }
        reduce_in_place(&mut c, phi, &tail);
        c.resize(phi, BigInt::zero());
        Ok(CyclotomicInt { conductor, coords: c })
    }

    /// Element with the given power-basis coordinates (length `phi(m)`).
    pub fn from_coords(conductor: u64, coords: Vec<BigInt>) -> Result<Self> {
        let phi = check_conductor(conductor)?;
        if coords.len() != phi {
            return Err(Error::InvalidParameter(format!(
                "expected {phi} coordinates for conductor {conductor}, got {}",
                coords.len()
            )));
        }
        Ok(CyclotomicInt { conductor, coords })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CyclotomicInt { conductor: self.conductor, coords: self.coords.iter().map(|v| v * c).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn one_like(&self) -> Self {
        let mut coords = vec![BigInt::zero(); self.coords.len()];
        coords[0] = BigInt::one();
        CyclotomicInt { conductor: self.conductor, coords }
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }

    /// Exact division by an integer.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coords.push(q);
        }
        Some(CyclotomicInt { conductor: self.conductor, coords })
    }

    /// Galois action `zeta -> zeta^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: u64) -> Self {
        let m = self.conductor;
        let mut c = vec![BigInt::zero(); m as usize];
        for (j, v) in self.coords.iter().enumerate() {
            c[(j as u64 * k % m) as usize] += v;
        }
        Self::from_poly(m, c).expect("conductor already validated")
    }

    fn galois_keys(&self) -> impl Iterator<Item = u64> + '_ {
        (2..self.conductor).filter(|k| k.gcd(&self.conductor) == 1)
    }

    /// Field norm to `Z`.
    pub fn norm(&self) -> BigInt {
        let mut acc = self.clone();
        for k in self.galois_keys() {
            acc = &acc * &self.galois(k);
        }
        acc.as_integer().cloned().expect("norm lies in Z")
    }

    /// Inverse in `Z[zeta_m]`, computed as the product of the other Galois
    /// conjugates divided by the norm.
    pub fn inverse(&self) -> Result<Self> {
        let mut conj = self.one_like();
        for k in self.galois_keys() {
            conj = &conj * &self.galois(k);
        }
        let norm = (&conj * self).as_integer().cloned().expect("norm lies in Z");
        if norm.abs() != BigInt::one() {
            return Err(Error::NotAUnit(format!("{self} has norm {norm}")));
        }
        Ok(conj.scale(&norm))
    }

    /// Coordinates `d_n` with `self = sum_n d_n (zeta - 1)^n`.
    pub fn to_offset_basis(&self) -> Vec<BigInt> {
        let phi = self.coords.len();
        (0..phi).map(|n| (n..phi).map(|k| binomial(k as i64, n as u32) * &self.coords[k]).sum()).collect()
    }

    /// Inverse of [`to_offset_basis`](Self::to_offset_basis).
    pub fn from_offset_basis(conductor: u64, d: &[BigInt]) -> Result<Self> {
        let phi = d.len();
        let coords = (0..phi)
            .map(|k| {
                (k..phi)
                    .map(|n| {
                        let b = binomial(n as i64, k as u32) * &d[n];
                        if (n - k) % 2 == 0 {
                            b
                        } else {
                            -b
                        }
                    })
                    .sum()
            })
            .collect();
        Self::from_coords(conductor, coords)
    }

    /// Largest `e` with `self` in the ideal `(zeta - 1)^e`; `None` for zero.
    ///
    /// Only meaningful for prime-power conductors, where `(zeta - 1)` is the
    /// unique prime above `p` and `(zeta - 1)^{phi} = (p)`.
    pub fn zeta_valuation(&self) -> Result<Option<u32>> {
        let (p, _) = prime_power(self.conductor).ok_or(Error::NotPrimePower(self.conductor))?;
        let phi = self.coords.len() as u32;
        Ok(self
            .to_offset_basis()
            .iter()
            .enumerate()
            .filter_map(|(n, d)| valuation(d, p).map(|v| v * phi + n as u32))
            .min())
    }

    /// Coordinates reduced into `[0, modulus)`.
    pub fn reduce_mod(&self, modulus: &BigInt) -> Self {
        CyclotomicInt { conductor: self.conductor, coords: self.coords.iter().map(|c| c.mod_floor(modulus)).collect() }
    }

    /// Maps an element of `Z[zeta_{2n}]` that lies in `Z[zeta_n]` down to
    /// conductor `n`.
    ///
    /// For odd `n` the rings coincide and `zeta_{2n} = -zeta_n^{(n+1)/2}`.
    /// For even `n` the element must only involve even powers of `zeta_{2n}`.
    pub fn descend(&self) -> Result<Self> {
        let m = self.conductor;
        if !m.is_multiple_of(2) || m < 4 {
            return Err(Error::UnsupportedConductor(m));
        }
        let n = m / 2;
        if n % 2 == 1 {
            let image = -&Self::zeta_pow(n, (n as i64 + 1) / 2)?;
            let mut acc = Self::zero(n)?;
            let mut power = Self::one(n)?;
            for c in &self.coords {
                acc.add_assign_ref(&power.scale(c));
                power = &power * &image;
            }
            return Ok(acc);
        }
        let phi = totient(n) as usize;
        let mut coords = vec![BigInt::zero(); phi];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k % 2 == 1 {
                return Err(Error::DivisionFailed(format!("{self} does not lie in the subring of conductor {n}")));
            }
            coords[k / 2] = c.clone();
        }
        Self::from_coords(n, coords)
    }
}

fn reduce_in_place(c: &mut [BigInt], phi: usize, tail: &[(usize, i64)]) {
    for k in (phi..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let v = std::mem::take(&mut c[k]);
        for &(e, a) in tail {
            c[k - phi + e] -= &v * a;
        }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { conductor: self.conductor, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        let phi = self.coords.len();
        let mut c = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        let (_, tail) = cyclotomic_tail(self.conductor).expect("conductor already validated");
        reduce_in_place(&mut c, phi, &tail);
        c.truncate(phi);
        CyclotomicInt { conductor: self.conductor, coords: c }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})z{}^{k}", self.conductor)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRecord {
    conductor: u64,
    coords: Vec<String>,
}

impl Serialize for CyclotomicInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRecord { conductor: self.conductor, coords: self.coords.iter().map(ToString::to_string).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = CyclotomicRecord::deserialize(d)?;
        let coords = rec
            .coords
            .iter()
            .map(|c| c.parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        CyclotomicInt::from_coords(rec.conductor, coords).map_err(D::Error::custom)
    }
}

/// `u = (zeta_r - 1)^{phi(r)} / p` for `r = p^l`, certified to be a unit of
/// `Z[zeta_r]` by exhibiting its inverse.
pub fn check_zeta_ideal(r: u64) -> Result<CyclotomicInt> {
    let (p, _) = prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let zm1 = &CyclotomicInt::zeta(r)? - &CyclotomicInt::one(r)?;
    let power = zm1.pow(totient(r) as u32);
    let u = power
        .div_exact_int(&BigInt::from(p))
        .ok_or_else(|| Error::DivisionFailed(format!("(zeta_{r}-1)^phi = {power} not divisible by {p}")))?;
    let inv = u.inverse()?;
    if !(&u * &inv).is_one() {
        return Err(Error::NotAUnit(format!("{u}")));
    }
    Ok(u)
}

/// Tests the ideal identity with `r` itself as the divisor: returns the
/// quotient `(zeta_r - 1)^{phi(r)} / r` when it exists and is a unit.
///
/// This holds for prime `r` only; for `r = p^l`, `l >= 2`, the ideal
/// `((zeta_r - 1)^{phi(r)})` is `(p)`, so the division fails.
pub fn check_zeta_ideal_literal(r: u64) -> Result<CyclotomicInt> {
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let zm1 = &CyclotomicInt::zeta(r)? - &CyclotomicInt::one(r)?;
    let power = zm1.pow(totient(r) as u32);
    let u = power
        .div_exact_int(&BigInt::from(r))
        .ok_or_else(|| Error::DivisionFailed(format!("(zeta_{r}-1)^phi = {power} not divisible by {r}")))?;
    u.inverse()?;
    Ok(u)
}
