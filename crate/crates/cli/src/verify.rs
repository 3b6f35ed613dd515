use adoseries::coefficients::{
    congruence_report, factorization_report, lemma_report, valuation_report, LemmaReport, Report,
};
use adoseries::knots::{BraidWord, KNOT_NAMES};
use adoseries::vassiliev::{degree_vanishing_check, Functional, SamplerConfig, VassilievReport};
use adoseries::{Error, Result};
use serde_json::Value;

use crate::args::{Format, Suite, VerifyArgs};
use crate::output::{csv, emit, to_json};

enum Outcome {
    Coefficient(Report),
    Vassiliev(VassilievReport),
    Lemmas(LemmaReport),
}

impl Outcome {
    fn passed(&self) -> bool {
        match self {
            Outcome::Coefficient(r) => r.passed(),
            Outcome::Vassiliev(r) => r.passed(),
            Outcome::Lemmas(r) => r.passed(),
        }
    }

    fn json(&self) -> Value {
        let v = match self {
            Outcome::Coefficient(r) => serde_json::to_value(r),
            Outcome::Vassiliev(r) => serde_json::to_value(r),
            Outcome::Lemmas(r) => serde_json::to_value(r),
        };
        v.expect("serializable")
    }

    fn csv_rows(&self) -> Vec<String> {
        match self {
            Outcome::Coefficient(r) => {
                let status = if r.passed() { "pass" } else { "fail" };
                let head = format!("{},{},{},{}", r.check, r.knot, r.r, status);
                if r.per_m.is_empty() {
                    let v = r.valuation.map(|v| v.to_string()).unwrap_or_default();
                    return vec![format!("{head},,,,{v}")];
                }
                r.per_m
                    .iter()
                    .map(|e| {
                        let a = e.agreement.map(|a| a.to_string()).unwrap_or_default();
                        format!("{head},{},{},{a},", e.m, e.precision)
                    })
                    .collect()
            }
            Outcome::Vassiliev(r) => r
                .samples
                .iter()
                .map(|s| {
                    let marks: Vec<String> = s.marks.iter().map(usize::to_string).collect();
                    format!("{},{},{},{},{},{}", r.functional, r.seed, s.braid, s.strands, marks.join(" "), s.value)
                })
                .collect(),
            Outcome::Lemmas(r) => {
                vec![format!("{},{},{}", r.r, if r.passed() { "pass" } else { "fail" }, r.failures.len())]
            }
        }
    }
}

fn csv_header(suite: Suite) -> &'static str {
    match suite {
        Suite::Vassiliev => "functional,seed,braid,strands,marks,value",
        Suite::Lemmas => "r,status,failures",
        _ => "check,knot,r,status,m,precision,agreement,valuation",
    }
}

fn knots(args: &VerifyArgs, default: &[&str]) -> Result<Vec<(String, BraidWord)>> {
    args.source.resolve(default)
}

fn r_list(args: &VerifyArgs, default: &[u64]) -> Vec<u64> {
    if args.r.is_empty() {
        default.to_vec()
    } else {
        args.r.clone()
    }
}

fn collect(args: &VerifyArgs, out: &mut Vec<Outcome>) -> Result<()> {
    let d = args.d;
    match args.suite {
        Suite::Factorization => {
            let m = args.m.unwrap_or(3.min(d));
            for (name, b) in knots(args, &["trefoil", "figure8"])? {
                for r in r_list(args, &[2, 3, 4, 5, 8, 9]) {
                    out.push(Outcome::Coefficient(factorization_report(&b, &name, r, d, m)?));
                }
            }
        }
        Suite::Congruence => {
            for (name, b) in knots(args, &KNOT_NAMES)? {
                for r in r_list(args, &[2, 3, 5]) {
                    out.push(Outcome::Coefficient(congruence_report(&b, &name, r, d)?));
                }
            }
        }
        Suite::Valuation => {
            let m = args.m.unwrap_or(4.min(d));
            for (name, b) in knots(args, &KNOT_NAMES)? {
                for r in r_list(args, &[2, 3]) {
                    out.push(Outcome::Coefficient(valuation_report(&b, &name, r, d, m)?));
                }
            }
        }
        Suite::Vassiliev => {
            let text = args
                .functional
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("vassiliev needs --functional".into()))?;
            let f: Functional = text.parse()?;
            let marks = match (args.marks, f.degree()) {
                (Some(k), _) => k,
                (None, Some(deg)) => deg as usize + 1,
                (None, None) => {
                    return Err(Error::InvalidParameter(format!("{f} has no known degree; pass --marks")));
                }
            };
            if marks == 0 {
                return Err(Error::InvalidParameter("--marks must be at least 1".into()));
            }
            let config = SamplerConfig { seed: args.seed, samples: args.samples, marks, ..SamplerConfig::default() };
            out.push(Outcome::Vassiliev(degree_vanishing_check(&f, marks as u32 - 1, &config)?));
        }
        Suite::Lemmas => {
            for r in r_list(args, &[2, 3, 4, 5, 7, 8, 9]) {
                out.push(Outcome::Lemmas(lemma_report(r, args.max_m)?));
            }
        }
    }
    Ok(())
}

fn render(args: &VerifyArgs, outcomes: &[Outcome]) -> String {
    match args.output.format {
        Format::Json => to_json(&outcomes.iter().map(Outcome::json).collect::<Vec<_>>()),
        Format::Csv => csv(csv_header(args.suite), outcomes.iter().flat_map(Outcome::csv_rows)),
    }
}

/// Runs the suite, writes every report produced (even on error), and
/// returns whether all checks passed.
pub fn run(args: &VerifyArgs) -> Result<bool> {
    let mut outcomes = Vec::new();
    let result = collect(args, &mut outcomes);
    if result.is_ok() || !outcomes.is_empty() {
        emit(&args.output, &render(args, &outcomes))?;
    }
    for o in outcomes.iter().filter(|o| !o.passed()) {
        if let Some(Value::String(check)) = o.json().get("check") {
            eprintln!("FAIL {check}: {}", o.json().get("failures").map(Value::to_string).unwrap_or_default());
        }
    }
    result?;
    Ok(outcomes.iter().all(Outcome::passed))
}
