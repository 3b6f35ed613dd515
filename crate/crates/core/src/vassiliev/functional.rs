use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::arith::{prime_power, totient};
use crate::coefficients::{c_table, d_table};
use crate::error::{Error, Result};
use crate::knots::{BraidWord, KnotCombination};
use crate::oracles::{ado, alexander, lambda_coeffs, lambda_tilde, lambda_tilde_row};
use crate::universal::{b_table, f_infinity};

/// Which coefficient a [`Functional`] reads off a knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// `b_{n,m}` of `F_inf`.
    B { n: u32, m: u32 },
    /// `c_{n,m}(r)` of `A(t^r) F_inf`.
    C { n: u32, m: u32, r: u64 },
    /// `d_{n,m}(r)` of `ADO_r`, `n < phi(r)`.
    D { n: u32, m: u32, r: u64 },
    /// `lambda_m` of the Alexander polynomial.
    Lambda { m: u32 },
    /// `lambda~_j(r)`.
    LambdaTilde { j: u32, r: u64 },
}

/// A knot invariant with values in `Z` or, when `modulus` is set, in
/// `Z / modulus Z` (represented by the least nonnegative residue).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Functional {
    pub descriptor: Descriptor,
    pub modulus: Option<u64>,
}

impl Functional {
    pub fn new(descriptor: Descriptor) -> Result<Self> {
        let f = Functional { descriptor, modulus: None };
        f.validate()?;
        Ok(f)
    }

    pub fn b(n: u32, m: u32) -> Self {
        Functional { descriptor: Descriptor::B { n, m }, modulus: None }
    }

    pub fn lambda(m: u32) -> Self {
        Functional { descriptor: Descriptor::Lambda { m }, modulus: None }
    }

    pub fn d(n: u32, m: u32, r: u64) -> Result<Self> {
        Self::new(Descriptor::D { n, m, r })
    }

    pub fn with_modulus(mut self, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParameter(format!("modulus must be at least 2, got {modulus}")));
        }
        self.modulus = Some(modulus);
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        match self.descriptor {
            Descriptor::C { r, .. } | Descriptor::LambdaTilde { r, .. } if r < 2 => {
                Err(Error::InvalidParameter(format!("r must be at least 2, got {r}")))
            }
            Descriptor::D { n, r, .. } => {
                prime_power(r).ok_or(Error::NotPrimePower(r))?;
                let phi = totient(r);
                if u64::from(n) >= phi {
                    return Err(Error::InvalidParameter(format!("d needs n < phi({r}) = {phi}, got {n}")));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// A degree bound this functional is proven to satisfy, if any.
    ///
    /// For prime `r`, `d` modulo `r` has degree `n + m` and modulo `r^k`
    /// degree `k phi(r) + m`. For `r = p^l`, `l >= 2`, `d` modulo `r^k` has
    /// degree `k l phi(r) + m`.
    pub fn degree(&self) -> Option<u32> {
        match (self.descriptor, self.modulus) {
            (Descriptor::B { n, m }, _) | (Descriptor::C { n, m, .. }, _) => Some(n + m),
            (Descriptor::Lambda { m }, _) => Some(m),
            (Descriptor::LambdaTilde { j, .. }, _) => Some(j),
            (Descriptor::D { .. }, None) => None,
            (Descriptor::D { n, m, r }, Some(modulus)) => {
                let k = (1..64).find(|&k| r.checked_pow(k) == Some(modulus))?;
                let (_, l) = prime_power(r)?;
                match (k, l) {
                    (1, 1) => Some(n + m),
                    _ => Some(k * l * totient(r) as u32 + m),
                }
            }
        }
    }

    fn reduce(&self, v: BigInt) -> BigInt {
        match self.modulus {
            Some(k) => v.mod_floor(&BigInt::from(k)),
            None => v,
        }
    }

    fn raw_value(&self, b: &BraidWord) -> Result<BigInt> {
        match self.descriptor {
            Descriptor::B { n, m } => Ok(f_infinity(b, n + m)?.coeff(n, m)),
            Descriptor::C { n, m, r } => {
                let order = n + m;
                let lambda = lambda_coeffs(&alexander(b)?, order)?;
                let c = c_table(&b_table(b, order)?, &lambda_tilde_row(&lambda, r, order), r)?;
                Ok(c.at(n, m))
            }
            Descriptor::D { n, m, r } => Ok(d_table(&ado(b, r)?, m)?.at(n, m)),
            Descriptor::Lambda { m } => Ok(lambda_coeffs(&alexander(b)?, m)?[m as usize].clone()),
            Descriptor::LambdaTilde { j, r } => Ok(lambda_tilde(&lambda_coeffs(&alexander(b)?, j)?, r, j)),
        }
    }

    /// Value on the closure of `b`, reduced into the value ring.
    pub fn value(&self, b: &BraidWord) -> Result<BigInt> {
        self.validate()?;
        Ok(self.reduce(self.raw_value(b)?))
    }

    /// Linear extension `sum coeff * f(knot)`.
    pub fn evaluate(&self, comb: &KnotCombination) -> Result<BigInt> {
        self.evaluate_with(comb, |b| self.value(b))
    }

    /// As [`Functional::evaluate`], with knot values supplied by `value`.
    pub fn evaluate_with(
        &self,
        comb: &KnotCombination,
        mut value: impl FnMut(&BraidWord) -> Result<BigInt>,
    ) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (b, c) in comb.terms() {
            acc += c * value(b)?;
        }
        Ok(self.reduce(acc))
    }
}

/// Linear extension of `f`.
pub fn evaluate(f: &Functional, comb: &KnotCombination) -> Result<BigInt> {
    f.evaluate(comb)
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.descriptor {
            Descriptor::B { n, m } => write!(f, "b:{n},{m}")?,
            Descriptor::C { n, m, r } => write!(f, "c:{n},{m},{r}")?,
            Descriptor::D { n, m, r } => write!(f, "d:{n},{m},{r}")?,
            Descriptor::Lambda { m } => write!(f, "lambda:{m}")?,
            Descriptor::LambdaTilde { j, r } => write!(f, "lambdatilde:{j},{r}")?,
        }
        if let Some(k) = self.modulus {
            write!(f, "%{k}")?;
        }
        Ok(())
    }
}

/// Syntax: `b:n,m`, `c:n,m,r`, `d:n,m,r`, `lambda:m`, `lambdatilde:j,r`,
/// optionally followed by `%modulus`.
impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad functional `{s}`"));
        let (body, modulus) = match s.trim().split_once('%') {
            Some((body, k)) => (body, Some(k.trim().parse::<u64>().map_err(|_| bad())?)),
            None => (s.trim(), None),
        };
        let (name, args) = body.split_once(':').ok_or_else(bad)?;
        let args: Vec<u64> =
            args.split(',').map(|a| a.trim().parse::<u64>().map_err(|_| bad())).collect::<Result<_>>()?;
        let small = |v: u64| u32::try_from(v).map_err(|_| bad());
        let descriptor = match (name.trim(), args.as_slice()) {
            ("b", &[n, m]) => Descriptor::B { n: small(n)?, m: small(m)? },
            ("c", &[n, m, r]) => Descriptor::C { n: small(n)?, m: small(m)?, r },
            ("d", &[n, m, r]) => Descriptor::D { n: small(n)?, m: small(m)?, r },
            ("lambda", &[m]) => Descriptor::Lambda { m: small(m)? },
            ("lambdatilde", &[j, r]) => Descriptor::LambdaTilde { j: small(j)?, r },
            _ => return Err(bad()),
        };
        let f = Functional::new(descriptor)?;
        match modulus {
            Some(k) => f.with_modulus(k),
            None => Ok(f),
        }
    }
}

impl Serialize for Functional {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Functional {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Pointwise product `(f g)(K) = f(K) g(K)`, in `Z` or modulo the gcd of the
/// moduli that are set.
pub fn product_value(f: &Functional, g: &Functional, b: &BraidWord) -> Result<BigInt> {
    let v = f.value(b)? * g.value(b)?;
    Ok(match product_modulus(f, g) {
        Some(k) => v.mod_floor(&BigInt::from(k)),
        None => v,
    })
}

pub(crate) fn product_modulus(f: &Functional, g: &Functional) -> Option<u64> {
    match (f.modulus, g.modulus) {
        (None, None) => None,
        (Some(k), None) | (None, Some(k)) => Some(k),
        (Some(a), Some(b)) => Some(a.gcd(&b)),
    }
}
