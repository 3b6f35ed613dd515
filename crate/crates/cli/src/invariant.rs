use adoseries::coefficients::CoefficientTable;
use adoseries::knots::BraidWord;
use adoseries::oracles::{ado, alexander, colored_jones};
use adoseries::universal::b_table;
use adoseries::{Error, Result};
use serde_json::{json, Value};

use crate::args::{Format, InvariantArgs, InvariantKind};
use crate::output::{csv, emit, laurent_terms, to_json};

struct Row {
    label: String,
    json: Value,
    csv: Vec<String>,
}

fn jones_rows(name: &str, b: &BraidWord, colors: &[u32]) -> Result<Vec<Row>> {
    colors
        .iter()
        .map(|&n| {
            let j = colored_jones(b, n)?;
            Ok(Row {
                label: "N,exponent,value".into(),
                json: json!({"invariant": "jones", "knot": name, "N": n, "var": "q", "terms": laurent_terms(&j)}),
                csv: j.terms().map(|(e, c)| format!("{n},{e},{c}")).collect(),
            })
        })
        .collect()
}

fn alexander_row(name: &str, b: &BraidWord) -> Result<Row> {
    let a = alexander(b)?;
    Ok(Row {
        label: "exponent,value".into(),
        json: json!({"invariant": "alexander", "knot": name, "var": "t", "terms": laurent_terms(&a)}),
        csv: a.terms().map(|(e, c)| format!("{e},{c}")).collect(),
    })
}

fn ado_rows(name: &str, b: &BraidWord, rs: &[u64]) -> Result<Vec<Row>> {
    rs.iter()
        .map(|&r| {
            let a = ado(b, r)?;
            let mut body = serde_json::to_value(&a).map_err(|e| Error::InvalidParameter(e.to_string()))?;
            body["invariant"] = json!("ado");
            body["knot"] = json!(name);
            body["var"] = json!("t");
            let rows = a
                .terms
                .iter()
                .flat_map(|(e, c)| {
                    c.coords().iter().enumerate().map(move |(i, v)| format!("{r},{e},{i},{v}")).collect::<Vec<_>>()
                })
                .collect();
            Ok(Row { label: "r,exponent,zeta_power,value".into(), json: body, csv: rows })
        })
        .collect()
}

fn ftable_row(name: &str, table: &CoefficientTable) -> Result<Row> {
    let mut body = serde_json::to_value(table).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    body["invariant"] = json!("ftable");
    body["knot"] = json!(name);
    let text = table.to_csv();
    let mut lines = text.lines();
    let label = lines.next().unwrap_or("n,m,value").to_string();
    Ok(Row { label, json: body, csv: lines.map(str::to_string).collect() })
}

pub fn run(args: &InvariantArgs) -> Result<()> {
    let knots = args.source.resolve(&["trefoil"])?;
    let mut rows: Vec<(String, Row)> = Vec::new();
    for (name, b) in &knots {
        let found = match args.kind {
            InvariantKind::Jones => jones_rows(name, b, &args.n)?,
            InvariantKind::Alexander => vec![alexander_row(name, b)?],
            InvariantKind::Ado => ado_rows(name, b, &args.r)?,
            InvariantKind::Ftable => vec![ftable_row(name, &b_table(b, args.d)?)?],
        };
        rows.extend(found.into_iter().map(|r| (name.clone(), r)));
    }
    let text = match args.output.format {
        Format::Json if rows.len() == 1 => to_json(&rows[0].1.json),
        Format::Json => to_json(&rows.iter().map(|(_, r)| r.json.clone()).collect::<Vec<_>>()),
        Format::Csv => {
            let multi = knots.len() > 1;
            let header = rows.first().map(|(_, r)| r.label.clone()).unwrap_or_default();
            let header = if multi { format!("knot,{header}") } else { header };
            let mut lines = Vec::new();
            for (name, row) in &rows {
                for l in &row.csv {
                    lines.push(if multi { format!("{name},{l}") } else { l.clone() });
                }
            }
            csv(&header, lines)
        }
    };
    emit(&args.output, &text)
}
