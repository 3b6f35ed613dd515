use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::arith::binomial;
use crate::algebra::{CyclotomicInt, QaLaurent};
use crate::error::{Error, Result};
use crate::knots::{closure_to_long, normalize_writhe, BraidWord};
use crate::universal::{state_sum, StateRing};

/// Laurent polynomial in `A = q^alpha` over `Z[zeta_{2r}]`, `q = zeta_{2r}`.
struct RootOfUnityRing {
    r: u64,
    zeta_powers: Vec<CyclotomicInt>,
}

type CycloLaurent = BTreeMap<i64, CyclotomicInt>;

impl RootOfUnityRing {
    fn new(r: u64) -> Result<Self> {
        let m = 2 * r;
        let zeta_powers = (0..m as i64).map(|k| CyclotomicInt::zeta_pow(m, k)).collect::<Result<_>>()?;
        Ok(RootOfUnityRing { r, zeta_powers })
    }

    fn add_term(acc: &mut CycloLaurent, e: i64, c: &CyclotomicInt) {
        match acc.get_mut(&e) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    acc.remove(&e);
                }
            }
            None if !c.is_zero() => {
                acc.insert(e, c.clone());
            }
            None => {}
        }
    }
}

impl StateRing for RootOfUnityRing {
    type Elem = CycloLaurent;

    fn zero(&self) -> CycloLaurent {
        BTreeMap::new()
    }

    fn is_zero(&self, e: &CycloLaurent) -> bool {
        e.is_empty()
    }

    fn add_assign(&self, acc: &mut CycloLaurent, e: &CycloLaurent) {
        for (k, c) in e {
            Self::add_term(acc, *k, c);
        }
    }

    fn mul(&self, a: &CycloLaurent, b: &CycloLaurent) -> CycloLaurent {
        let mut out = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                Self::add_term(&mut out, ea + eb, &(ca * cb));
            }
        }
        out
    }

    fn embed(&self, p: &QaLaurent) -> CycloLaurent {
        let m = 2 * self.r as i64;
        let mut out = BTreeMap::new();
        for (q, a, c) in p.terms() {
            Self::add_term(&mut out, a, &self.zeta_powers[q.rem_euclid(m) as usize].scale(c));
        }
        out
    }

    fn index_cap(&self) -> u32 {
        self.r as u32 - 1
    }

    fn order_budget(&self) -> Option<u32> {
        None
    }

    fn pivotal_alpha_shift(&self) -> i64 {
        -(self.r as i64)
    }
}

/// ADO invariant: Laurent polynomial in `t = q^{2 alpha}` with coefficients
/// in `Z[zeta_r]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdoPolynomial {
    pub r: u64,
    #[serde(with = "terms_json")]
    pub terms: BTreeMap<i64, CyclotomicInt>,
}

impl AdoPolynomial {
    pub fn one(r: u64) -> Result<Self> {
        Ok(AdoPolynomial { r, terms: [(0, CyclotomicInt::one(r)?)].into_iter().collect() })
    }

    pub fn coeff(&self, e: i64) -> Result<CyclotomicInt> {
        match self.terms.get(&e) {
            Some(c) => Ok(c.clone()),
            None => CyclotomicInt::zero(self.r),
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(CyclotomicInt::is_one)
    }

    /// Coefficients of `y^0, ..., y^M` after `t -> 1 + y`.
    pub fn y_expansion(&self, max_m: u32) -> Result<Vec<CyclotomicInt>> {
        (0..=max_m)
            .map(|m| {
                let mut acc = CyclotomicInt::zero(self.r)?;
                for (e, c) in &self.terms {
                    let b = binomial(*e, m);
                    if !b.is_zero() {
                        acc.add_assign_ref(&c.scale(&b));
                    }
                }
                Ok(acc)
            })
            .collect()
    }
}

mod terms_json {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<i64, CyclotomicInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        m.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<i64, CyclotomicInt>, D::Error> {
        Ok(Vec::<(i64, CyclotomicInt)>::deserialize(d)?.into_iter().collect())
    }
}

/// ADO invariant of the closure from the `r`-dimensional module at
/// `q = zeta_{2r}`, 0-framed and normalized to 1 on the unknot.
pub fn ado(b: &BraidWord, r: u64) -> Result<AdoPolynomial> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("ADO needs r >= 2, got {r}")));
    }
    let d = normalize_writhe(&closure_to_long(b)?);
    let raw = state_sum(&RootOfUnityRing::new(r)?, &d)?;
    let mut terms = BTreeMap::new();
    for (e, c) in raw {
        if e % 2 != 0 {
            return Err(Error::OddAlphaExponent(format!("A^{e} in ADO_{r} of {b}")));
        }
        terms.insert(e / 2, c.descend()?);
    }
    Ok(AdoPolynomial { r, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::knot_table;
    use crate::oracles::alexander;
    use num_bigint::BigInt;

    #[test]
    fn unknot() {
        for r in [2, 3, 4, 5] {
            assert!(ado(&BraidWord::unknot(), r).unwrap().is_one());
            assert!(ado(&BraidWord::parse("1 -2", None).unwrap(), r).unwrap().is_one());
        }
    }

    // ADO_2 is the Alexander polynomial.
    #[test]
    fn r2_is_alexander() {
        for name in ["trefoil", "figure8", "5_2"] {
            let b = knot_table(name).unwrap();
            let a = ado(&b, 2).unwrap();
            let alex = alexander(&b).unwrap();
            let ints: Vec<(i64, BigInt)> = a.terms.iter().map(|(e, c)| (*e, c.coords()[0].clone())).collect();
            let expected: Vec<(i64, BigInt)> = alex.terms().map(|(e, c)| (e, c.clone())).collect();
            assert_eq!(ints, expected, "{name}");
        }
    }

    #[test]
    fn json_schema() {
        let a = AdoPolynomial::one(3).unwrap();
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"r":3,"terms":[[0,{"conductor":3,"coords":["1","0"]}]]}"#);
        assert_eq!(serde_json::from_str::<AdoPolynomial>(&js).unwrap(), a);
    }
}
