//! Linear extension of coefficient functionals to knot combinations and
//! finite-type degree checks on resolutions of singular braids.

mod functional;
mod sampler;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coefficients::Status;
use crate::error::{Error, Result};
use crate::knots::{resolve_singular, BraidWord, SingularBraidWord};

pub use functional::{evaluate, product_value, Descriptor, Functional};
pub use sampler::{sample_singular, SamplerConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub braid: String,
    pub strands: usize,
    pub marks: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VassilievReport {
    pub check: String,
    pub functional: String,
    pub degree: u32,
    pub marks: usize,
    pub seed: u64,
    pub status: Status,
    pub samples: Vec<SampleRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl VassilievReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn run(
    check: &str,
    label: String,
    degree: u32,
    config: &SamplerConfig,
    mut value: impl FnMut(&BraidWord) -> Result<BigInt>,
    reduce: impl Fn(BigInt) -> BigInt,
) -> Result<VassilievReport> {
    if config.marks != degree as usize + 1 {
        return Err(Error::InvalidParameter(format!(
            "degree {degree} needs {} marks, sampler has {}",
            degree + 1,
            config.marks
        )));
    }
    let mut cache: BTreeMap<BraidWord, BigInt> = BTreeMap::new();
    let mut samples = Vec::new();
    let mut failures = Vec::new();
    for sb in sample_singular(config)? {
        let mut acc = BigInt::zero();
        for (b, c) in resolve_singular(&sb)?.terms() {
            let v = match cache.get(b) {
                Some(v) => v.clone(),
                None => {
                    let v = value(b)?;
                    cache.insert(b.clone(), v.clone());
                    v
                }
            };
            acc += c * v;
        }
        let acc = reduce(acc);
        if !acc.is_zero() {
            failures.push(format!("{} marks {:?}: {acc}", sb.braid(), sb.marks()));
        }
        samples.push(record(&sb, &acc));
    }
    Ok(VassilievReport {
        check: check.into(),
        functional: label,
        degree,
        marks: config.marks,
        seed: config.seed,
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        samples,
        failures,
    })
}

fn record(sb: &SingularBraidWord, v: &BigInt) -> SampleRecord {
    SampleRecord {
        braid: sb.braid().to_text(),
        strands: sb.braid().strands(),
        marks: sb.marks().iter().copied().collect(),
        value: v.to_string(),
    }
}

fn reducer(modulus: Option<u64>) -> impl Fn(BigInt) -> BigInt {
    move |v| match modulus {
        Some(k) => num_integer::Integer::mod_floor(&v, &BigInt::from(k)),
        None => v,
    }
}

/// Evaluates `f` on the resolution of each sampled singular braid with
/// `degree + 1` double points; any nonzero value is a failure.
pub fn degree_vanishing_check(f: &Functional, degree: u32, config: &SamplerConfig) -> Result<VassilievReport> {
    run("vassiliev", f.to_string(), degree, config, |b| f.value(b), reducer(f.modulus))
}

/// As [`degree_vanishing_check`] for the pointwise product `f g` with
/// claimed degree `a + b`.
pub fn product_degree_check(
    f: &Functional,
    a: u32,
    g: &Functional,
    b: u32,
    config: &SamplerConfig,
) -> Result<VassilievReport> {
    let modulus = functional::product_modulus(f, g);
    run("product", format!("{f}*{g}"), a + b, config, |k| product_value(f, g, k), reducer(modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(marks: usize, samples: usize) -> SamplerConfig {
        SamplerConfig { seed: 7, samples, marks, ..SamplerConfig::default() }
    }

    #[test]
    fn b_vanishes() {
        let rep = degree_vanishing_check(&Functional::b(1, 1), 2, &config(3, 5)).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.samples.len(), 5);
    }

    #[test]
    fn b_does_not_vanish_below_degree() {
        // b_{0,2} has degree 2, so it need not vanish on 1-mark samples.
        let rep = degree_vanishing_check(&Functional::b(0, 2), 0, &config(1, 20)).unwrap();
        assert!(!rep.passed());
    }

    #[test]
    fn products() {
        let b00 = Functional::b(0, 0);
        assert!(product_degree_check(&b00, 0, &b00, 0, &config(1, 5)).unwrap().passed());
        let l2 = Functional::lambda(2);
        assert!(product_degree_check(&l2, 2, &Functional::b(1, 0), 1, &config(4, 5)).unwrap().passed());
    }

    #[test]
    fn marks_must_match_degree() {
        assert!(degree_vanishing_check(&Functional::b(0, 0), 1, &config(1, 1)).is_err());
    }
}
