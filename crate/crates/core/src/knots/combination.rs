use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::braid::{BraidWord, SingularBraidWord};
use crate::error::{Error, Result};

/// Formal integer combination of knots, keyed by freely reduced braid words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnotCombination {
    terms: BTreeMap<BraidWord, BigInt>,
}

impl KnotCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(b: BraidWord) -> Self {
        let mut c = Self::new();
        c.add_term(b, BigInt::one());
        c
    }

    pub fn add_term(&mut self, b: BraidWord, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = b.free_reduce();
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BraidWord, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::new();
        for (b, v) in &self.terms {
            out.add_term(b.clone(), v * c);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (b, v) in &rhs.terms {
            out.add_term(b.clone(), v.clone());
        }
        out
    }
}

/// The `2^d` signed resolutions of a singular braid, before any
/// cancellation.
pub fn resolutions(sb: &SingularBraidWord) -> Result<Vec<(BraidWord, i64)>> {
    let base = sb.braid();
    base.ensure_knot()?;
    let marks: Vec<usize> = sb.marks().iter().copied().collect();
    let mut out = Vec::with_capacity(1 << marks.len());
    for choice in 0u64..1 << marks.len() {
        let mut letters = base.letters().to_vec();
        let mut sign = 1i64;
        for (bit, &pos) in marks.iter().enumerate() {
            let gen = letters[pos].abs();
            if choice >> bit & 1 == 1 {
                letters[pos] = -gen;
                sign = -sign;
            } else {
                letters[pos] = gen;
            }
        }
        out.push((BraidWord::new(base.strands(), letters)?, sign));
    }
    Ok(out)
}

/// Expands each double point as (positive crossing) - (negative crossing).
pub fn resolve_singular(sb: &SingularBraidWord) -> Result<KnotCombination> {
    let mut out = KnotCombination::new();
    for (b, sign) in resolutions(sb)? {
        out.add_term(b, BigInt::from(sign));
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    braid: String,
    coeff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    strands: Option<usize>,
}

impl Serialize for KnotCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let inferred = BraidWord::parse(&b.to_text(), None).map(|p| p.strands()).ok();
                TermRecord {
                    braid: b.to_text(),
                    coeff: c.to_string(),
                    strands: (inferred != Some(b.strands())).then_some(b.strands()),
                }
            })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KnotCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut out = KnotCombination::new();
        for r in records {
            let b = BraidWord::parse(&r.braid, r.strands).map_err(D::Error::custom)?;
            let c = r.coeff.parse::<BigInt>().map_err(|e| D::Error::custom(Error::Parse(e.to_string())))?;
            out.add_term(b, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(s: &str) -> BraidWord {
        BraidWord::parse(s, None).unwrap()
    }

    #[test]
    fn one_mark() {
        let sb = SingularBraidWord::new(braid("1"), [0]).unwrap();
        let c = resolve_singular(&sb).unwrap();
        let terms: Vec<_> = c.terms().map(|(b, v)| (b.to_text(), v.clone())).collect();
        assert_eq!(terms, vec![("-1".to_string(), BigInt::from(-1)), ("1".to_string(), BigInt::from(1))]);
    }

    #[test]
    fn no_marks() {
        let sb = SingularBraidWord::new(braid("1 1 1"), []).unwrap();
        assert_eq!(resolve_singular(&sb).unwrap(), KnotCombination::single(braid("1 1 1")));
    }

    #[test]
    fn two_mark_signs() {
        let sb = SingularBraidWord::new(braid("1 1 1"), [0, 2]).unwrap();
        let c = resolve_singular(&sb).unwrap();
        let get = |s: &str| c.terms().find(|(b, _)| b.to_text() == s).map(|(_, v)| v.clone());
        assert_eq!(get("1 1 1"), Some(BigInt::from(1)));
        // -1 1 1 and 1 1 -1 both reduce to 1, and -1 1 -1 to -1
        assert_eq!(get("1"), Some(BigInt::from(-2)));
        assert_eq!(get("-1"), Some(BigInt::from(1)));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let mut c = KnotCombination::single(braid("1 1 1"));
        c.add_term(BraidWord::parse("1", Some(3)).unwrap(), BigInt::from(-2));
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(js, r#"[{"braid":"1 1 1","coeff":"1"},{"braid":"1","coeff":"-2","strands":3}]"#);
        assert_eq!(serde_json::from_str::<KnotCombination>(&js).unwrap(), c);
    }

    #[test]
    fn cancellation() {
        let mut c = KnotCombination::single(braid("1 2 -2"));
        c.add_term(BraidWord::parse("1", Some(3)).unwrap(), BigInt::from(-1));
        assert!(c.is_empty());
    }
}
