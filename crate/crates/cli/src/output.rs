use std::fs;
use std::io::Write;

use adoseries::{Error, LaurentPoly, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::OutputArgs;

/// `[[exponent, "coefficient"], ...]`.
pub fn laurent_terms(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Emits `text` to the configured sink; files are replaced atomically.
pub fn emit(out: &OutputArgs, text: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidParameter(format!("cannot write output: {e}"));
    match &out.out {
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
        Some(path) => {
            let mut tmp = path.clone().into_os_string();
            tmp.push(".tmp");
            fs::write(&tmp, text).map_err(io)?;
            fs::rename(&tmp, path).map_err(io)
        }
    }
}

/// Joins CSV rows under a header.
pub fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = String::from(header);
    s.push('\n');
    for r in rows {
        s.push_str(&r);
        s.push('\n');
    }
    s
}
