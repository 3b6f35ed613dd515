use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::pipeline::{d_reconstruct, d_table};
use super::table::CoefficientTable;
use crate::algebra::arith::{prime_power, totient};
use crate::algebra::{check_zeta_ideal, eval_root, BivariateSeries, CycloSeries, CyclotomicInt};
use crate::error::{Error, Result};
use crate::knots::{knot_table, BraidWord, KNOT_NAMES};
use crate::oracles::{
    ado, alexander, binomial_inner_sum, binomial_lemma_check, lambda_coeffs, lambda_tilde_row, AdoPolynomial,
};
use crate::universal::f_infinity;

/// A `(zeta - 1)`-adic valuation or an `m` index that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn from_option(v: Option<u32>) -> Self {
        v.map_or(Valuation::Infinite, Valuation::Finite)
    }

    pub fn at_least(self, bound: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u32(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) if s == "inf" => Ok(Valuation::Infinite),
            v => v
                .as_u64()
                .map(|v| Valuation::Finite(v as u32))
                .ok_or_else(|| D::Error::custom("expected an integer or \"inf\"")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Per-`m` line of a report. `precision` is the exponent `e` such that the
/// compared quantities are known modulo `(zeta_r - 1)^e` (for congruence
/// checks: the number of `n` values compared).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginEntry {
    pub m: u32,
    pub precision: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Valuation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub knot: String,
    pub r: u64,
    pub status: Status,
    pub per_m: Vec<MarginEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<Valuation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `A(t^r) F_inf` evaluated at `x = zeta_r - 1`.
pub fn unified_side(b: &BraidWord, r: u64, order: u32) -> Result<CycloSeries> {
    let f = f_infinity(b, order)?;
    let a = alexander(b)?;
    let scaled = BivariateSeries::from_laurent(&a.substitute_power(r as i64), order)?;
    eval_root(&(&scaled * &f), r)
}

/// Compares `ADO_r` (expanded in `y`) with `ev_r(A(t^r) F_inf)` for
/// `m <= max_m`, each coefficient modulo `(zeta_r - 1)^{D - m + 1}`.
pub fn factorization_report(b: &BraidWord, knot: &str, r: u64, order: u32, max_m: u32) -> Result<Report> {
    if max_m > order {
        return Err(Error::InvalidParameter(format!("M = {max_m} exceeds D = {order}")));
    }
    let rhs = unified_side(b, r, order)?;
    let lhs = d_reconstruct(&d_table(&ado(b, r)?, max_m)?)?;
    let mut per_m = Vec::new();
    let mut failures = Vec::new();
    for m in 0..=max_m {
        let diff = &lhs[m as usize] - rhs.coeff(m);
        let agreement = Valuation::from_option(diff.zeta_valuation()?);
        let precision = rhs.precision(m);
        let ok = agreement.at_least(precision);
        if !ok {
            failures.push(format!("m={m}: agreement {agreement} below precision {precision}"));
        }
        per_m.push(MarginEntry { m, precision, agreement: Some(agreement), ok: Some(ok) });
    }
    Ok(Report {
        check: "factorization".into(),
        knot: knot.into(),
        r,
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        per_m,
        valuation: None,
        failures,
    })
}

/// As [`factorization_report`], but a mismatch is an error.
pub fn check_unified_vs_ado(b: &BraidWord, knot: &str, r: u64, order: u32, max_m: u32) -> Result<Report> {
    let report = factorization_report(b, knot, r, order, max_m)?;
    if let Some(e) = report.per_m.iter().find(|e| e.ok == Some(false)) {
        let valuation = match e.agreement {
            Some(Valuation::Finite(v)) => v,
            _ => 0,
        };
        return Err(Error::MismatchBeyondPrecision { m: e.m, valuation, precision: e.precision });
    }
    Ok(report)
}

/// The `(n, m)` pairs with `n < phi(r)`, `m < r`, `n + m <= D` on which
/// `d_{n,m} = b_{n,m} (mod r)` is asserted.
fn congruence_window(r: u64, order: u32) -> impl Iterator<Item = (u32, u32)> {
    let phi = totient(r) as u32;
    (0..order.min(r as u32 - 1) + 1).flat_map(move |m| (0..phi).filter(move |n| n + m <= order).map(move |n| (n, m)))
}

fn congruence_inner(b: &BraidWord, knot: &str, r: u64, order: u32) -> Result<(Report, Option<(u32, u32)>)> {
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let f = f_infinity(b, order)?;
    let a = ado(b, r)?;
    let bt = CoefficientTable::from_series(super::TableKind::B, None, &f);
    let dt = d_table(&a, order.min(r as u32 - 1))?;
    let modulus = BigInt::from(r);
    let mut first = None;
    let mut failures = Vec::new();
    let mut per_m: Vec<MarginEntry> = Vec::new();
    for (n, m) in congruence_window(r, order) {
        let ok = (dt.at(n, m) - bt.at(n, m)).mod_floor(&modulus).is_zero();
        if !ok {
            first.get_or_insert((n, m));
            failures.push(format!("(n={n}, m={m}): d={} b={}", dt.at(n, m), bt.at(n, m)));
        }
        match per_m.last_mut() {
            Some(e) if e.m == m => {
                e.precision += 1;
                e.ok = Some(e.ok.unwrap_or(true) && ok);
            }
            _ => per_m.push(MarginEntry { m, precision: 1, agreement: None, ok: Some(ok) }),
        }
    }
    let report = Report {
        check: "congruence".into(),
        knot: knot.into(),
        r,
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        per_m,
        valuation: Some(valuation_from(&f, &a, order)?),
        failures,
    };
    Ok((report, first))
}

/// `d_{n,m}(r) = b_{n,m} (mod r)` for all stored pairs with `m < r`, plus
/// the valuation of [`valuation_mod_r`] with `M = D`.
pub fn congruence_report(b: &BraidWord, knot: &str, r: u64, order: u32) -> Result<Report> {
    Ok(congruence_inner(b, knot, r, order)?.0)
}

/// As [`congruence_report`], but the first failure is an error.
pub fn mod_r_congruence_check(b: &BraidWord, knot: &str, r: u64, order: u32) -> Result<Report> {
    match congruence_inner(b, knot, r, order)? {
        (_, Some((n, m))) => Err(Error::CongruenceFailure { n, m, modulus: r }),
        (report, None) => Ok(report),
    }
}

fn valuation_from(f: &BivariateSeries, a: &AdoPolynomial, max_m: u32) -> Result<Valuation> {
    let r = a.r;
    let (_, l) = prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let threshold = l * totient(r) as u32;
    let top = max_m.min(f.order());
    let fr = eval_root(f, r)?;
    let ys = a.y_expansion(top)?;
    for m in 0..=top {
        let diff: CyclotomicInt = fr.coeff(m) - &ys[m as usize];
        let v = Valuation::from_option(diff.zeta_valuation()?);
        if !v.at_least(threshold.min(fr.precision(m))) {
            return Ok(Valuation::Finite(m));
        }
    }
    Ok(Valuation::Infinite)
}

/// Smallest `m <= max_m` for which the `y^m` coefficient of
/// `F_inf(zeta_r, q^alpha) - ADO_r` is provably nonzero modulo `r`.
///
/// The coefficient is known modulo `(zeta_r - 1)^{D-m+1}` and lies in
/// `r Z[zeta_r]` iff its valuation reaches `l phi(r)` for `r = p^l`, so it is
/// provably nonzero iff its computed valuation is below both bounds.
pub fn valuation_mod_r(b: &BraidWord, r: u64, order: u32, max_m: u32) -> Result<Valuation> {
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    valuation_from(&f_infinity(b, order)?, &ado(b, r)?, max_m)
}

/// Valuation report: passes when the valuation is at least `r`
/// (or `max_m < r` and no nonzero coefficient was found).
pub fn valuation_report(b: &BraidWord, knot: &str, r: u64, order: u32, max_m: u32) -> Result<Report> {
    let v = valuation_mod_r(b, r, order, max_m)?;
    let ok = v.at_least(r as u32);
    Ok(Report {
        check: "valuation".into(),
        knot: knot.into(),
        r,
        status: if ok { Status::Pass } else { Status::Fail },
        per_m: Vec::new(),
        valuation: Some(v),
        failures: if ok { Vec::new() } else { vec![format!("valuation {v} below {r}")] },
    })
}

/// If `b_{n,m} != 0` with `m < r`, then `d_{n,m} = b_{n,m} (mod r)`, and
/// `d_{n,m} != 0 (mod r)` whenever `r` does not divide `b_{n,m}`.
pub fn corollary_report(b: &BraidWord, knot: &str, r: u64, order: u32) -> Result<Report> {
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let bt = CoefficientTable::from_series(super::TableKind::B, None, &f_infinity(b, order)?);
    let dt = d_table(&ado(b, r)?, order.min(r as u32 - 1))?;
    let modulus = BigInt::from(r);
    let mut failures = Vec::new();
    for (n, m) in congruence_window(r, order) {
        let bv = bt.at(n, m);
        if bv.is_zero() {
            continue;
        }
        let (bm, dm) = (bv.mod_floor(&modulus), dt.at(n, m).mod_floor(&modulus));
        if bm != dm || (!bm.is_zero() && dm.is_zero()) {
            failures.push(format!("(n={n}, m={m}): b mod r = {bm}, d mod r = {dm}"));
        }
    }
    Ok(Report {
        check: "corollary".into(),
        knot: knot.into(),
        r,
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        per_m: Vec::new(),
        valuation: None,
        failures,
    })
}

/// Instances of the three arithmetic lemmas for one `r`: the unit witness
/// for `(zeta_r - 1)^{phi(r)}`, vanishing of the binomial inner sums for
/// `j < m <= max_m`, and `r | lambda~_j(r)` for `0 < j < r` on table knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub check: String,
    pub r: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_witness: Option<CyclotomicInt>,
    pub binomial_cases: usize,
    pub lambda_tilde: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn lemma_report(r: u64, max_m: u32) -> Result<LemmaReport> {
    let mut failures = Vec::new();
    let unit_witness = match check_zeta_ideal(r) {
        Ok(u) => Some(u),
        Err(e) => {
            failures.push(format!("unit witness: {e}"));
            None
        }
    };
    let mut binomial_cases = 0;
    for m in 1..=max_m {
        for j in 0..m {
            binomial_cases += 1;
            if !binomial_lemma_check(r, m, j) {
                failures.push(format!("inner sum r={r} m={m} j={j} is {}", binomial_inner_sum(r, m, j)));
            }
        }
    }
    let modulus = BigInt::from(r);
    let mut lambda_tilde = BTreeMap::new();
    for name in KNOT_NAMES {
        let top = r as u32 - 1;
        let row = lambda_tilde_row(&lambda_coeffs(&alexander(&knot_table(name)?)?, top)?, r, top);
        if !row[0].is_one() {
            failures.push(format!("{name}: lambda~_0 = {}", row[0]));
        }
        for (j, v) in row.iter().enumerate().skip(1) {
            if !v.mod_floor(&modulus).is_zero() {
                failures.push(format!("{name}: lambda~_{j}({r}) = {v} not divisible by {r}"));
            }
        }
        lambda_tilde.insert(name.to_string(), row.iter().map(BigInt::to_string).collect());
    }
    Ok(LemmaReport {
        check: "lemmas".into(),
        r,
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        unit_witness,
        binomial_cases,
        lambda_tilde,
        failures,
    })
}
