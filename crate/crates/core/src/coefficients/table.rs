use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::BivariateSeries;
use crate::error::{Error, Result};

/// Which coefficient family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// `b_{n,m}`: coefficients of the unified invariant.
    B,
    /// `c_{n,m}(r)`: coefficients of `A(t^r) F_inf`.
    C,
    /// `d_{n,m}(r)`: ADO in the `(zeta_r - 1)`-basis.
    D,
    /// `CL_{j,i,m}(r)`: `r`-adic digits of the `c` table.
    #[serde(rename = "CL")]
    Cl,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::B => "b",
            TableKind::C => "c",
            TableKind::D => "d",
            TableKind::Cl => "CL",
        })
    }
}

/// Integer table indexed by `(n, m)`, or by `(j, i, m)` for digit tables.
///
/// Only nonzero entries are stored. `order` is the truncation `D` for
/// `b`/`c` tables and `M` for `d`/`CL` tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub kind: TableKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<u32>,
    #[serde(rename = "D")]
    pub order: u32,
    #[serde(with = "entries_json")]
    pub coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl CoefficientTable {
    pub fn new(kind: TableKind, r: Option<u64>, order: u32) -> Self {
        CoefficientTable { kind, r, levels: None, order, coeffs: BTreeMap::new() }
    }

    pub fn from_series(kind: TableKind, r: Option<u64>, s: &BivariateSeries) -> Self {
        let mut t = Self::new(kind, r, s.order());
        for (n, m, c) in s.iter_nonzero() {
            t.set(&[n, m], c.clone());
        }
        t
    }

    pub fn set(&mut self, key: &[u32], c: BigInt) {
        if c.is_zero() {
            self.coeffs.remove(key);
        } else {
            self.coeffs.insert(key.to_vec(), c);
        }
    }

    pub fn get(&self, key: &[u32]) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    /// Shorthand for two-index tables.
    pub fn at(&self, n: u32, m: u32) -> BigInt {
        self.get(&[n, m])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u32], &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rebuilds the series of a `b` or `c` table.
    pub fn to_series(&self) -> Result<BivariateSeries> {
        if !matches!(self.kind, TableKind::B | TableKind::C) {
            return Err(Error::InvalidParameter(format!("{} table is not a series", self.kind)));
        }
        Ok(BivariateSeries::from_terms(self.order, self.coeffs.iter().map(|(k, v)| (k[0], k[1], v.clone()))))
    }

    /// Flat `n,m,value` rows (`j,i,m,value` for digit tables).
    pub fn to_csv(&self) -> String {
        let header = match self.kind {
            TableKind::Cl => "j,i,m,value",
            _ => "n,m,value",
        };
        let mut out = String::from(header);
        out.push('\n');
        for (k, v) in &self.coeffs {
            for i in k {
                out.push_str(&i.to_string());
                out.push(',');
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

mod entries_json {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};
    use serde_json::Value;

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vec<u32>, BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Value>> = m
            .iter()
            .map(|(k, v)| k.iter().map(|&i| Value::from(i)).chain([Value::String(v.to_string())]).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Vec<u32>, BigInt>, D::Error> {
        let rows = Vec::<Vec<Value>>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for row in rows {
            let (last, idx) = row.split_last().ok_or_else(|| D::Error::custom("empty row"))?;
            let key = idx
                .iter()
                .map(|v| v.as_u64().map(|i| i as u32).ok_or_else(|| D::Error::custom("bad index")))
                .collect::<std::result::Result<Vec<u32>, _>>()?;
            let val = last
                .as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| D::Error::custom("bad coefficient"))?;
            out.insert(key, val);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_csv() {
        let mut t = CoefficientTable::new(TableKind::B, None, 4);
        t.set(&[0, 0], BigInt::from(1));
        t.set(&[0, 2], BigInt::from(-3));
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"kind":"b","D":4,"coeffs":[[0,0,"1"],[0,2,"-3"]]}"#);
        assert_eq!(serde_json::from_str::<CoefficientTable>(&js).unwrap(), t);
        assert_eq!(t.to_csv(), "n,m,value\n0,0,1\n0,2,-3\n");
    }

    #[test]
    fn series_round_trip() {
        let s = BivariateSeries::from_terms(3, [(1, 1, 2), (0, 3, -1)]);
        let t = CoefficientTable::from_series(TableKind::C, Some(3), &s);
        assert_eq!(t.len(), 2);
        assert_eq!(t.to_series().unwrap(), s);
        let mut d = t.clone();
        d.kind = TableKind::D;
        assert!(d.to_series().is_err());
    }
}
