use std::path::PathBuf;

use adoseries::knots::{knot_table, BraidWord};
use adoseries::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "adoseries",
    version,
    about = "Unified sl2 knot invariant, ADO, colored Jones and Alexander polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute an invariant of one knot.
    Invariant(InvariantArgs),
    /// Run a verification suite; exits 0 iff every check passes.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    /// Colored Jones polynomial J_N in q.
    Jones,
    /// Alexander polynomial in t.
    Alexander,
    /// ADO_r polynomial in t over Z[zeta_r].
    Ado,
    /// Table b_{n,m} of the unified invariant.
    Ftable,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// ADO_r against A(t^r) F_inf at zeta_r.
    Factorization,
    /// d_{n,m}(r) = b_{n,m} mod r.
    Congruence,
    /// Valuation of F_inf(zeta_r) - ADO_r modulo r.
    Valuation,
    /// Vanishing of a functional on resolutions of singular braids.
    Vassiliev,
    /// Unit witness, binomial sums and lambda~ divisibility.
    Lemmas,
}

#[derive(Args, Debug, Clone)]
pub struct KnotSource {
    /// Named knot (unknot, trefoil, figure8, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1); repeatable or comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub knot: Vec<String>,
    /// Braid word such as "1 -2 1 -2".
    #[arg(long, conflicts_with = "knot")]
    pub braid: Option<String>,
    /// Strand count for --braid (default: inferred).
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
}

impl KnotSource {
    /// Labelled braids, or `default` names when no source is given.
    pub fn resolve(&self, default: &[&str]) -> Result<Vec<(String, BraidWord)>> {
        if let Some(text) = &self.braid {
            return Ok(vec![(text.trim().to_string(), BraidWord::parse(text, self.strands)?)]);
        }
        let names: Vec<String> =
            if self.knot.is_empty() { default.iter().map(|s| s.to_string()).collect() } else { self.knot.clone() };
        names.into_iter().map(|n| knot_table(&n).map(|b| (n, b))).collect()
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InvariantArgs {
    #[arg(value_enum)]
    pub kind: InvariantKind,
    #[command(flatten)]
    pub source: KnotSource,
    /// Colors for jones; comma-separated.
    #[arg(long = "N", value_delimiter = ',', default_value = "1")]
    pub n: Vec<u32>,
    /// Root order for ado; comma-separated.
    #[arg(long = "r", value_delimiter = ',', default_value = "3")]
    pub r: Vec<u64>,
    /// Truncation degree for ftable.
    #[arg(long = "D", default_value_t = 4)]
    pub d: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub source: KnotSource,
    /// Root orders; comma-separated (default depends on the suite).
    #[arg(long = "r", value_delimiter = ',')]
    pub r: Vec<u64>,
    /// Truncation degree.
    #[arg(long = "D", default_value_t = 5)]
    pub d: u32,
    /// Largest y-power compared (default depends on the suite).
    #[arg(long = "M")]
    pub m: Option<u32>,
    /// Sampler seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of singular samples.
    #[arg(long, default_value_t = 30)]
    pub samples: usize,
    /// Functional for the vassiliev suite: b:n,m | c:n,m,r | d:n,m,r | lambda:m | lambdatilde:j,r, optionally %modulus.
    #[arg(long)]
    pub functional: Option<String>,
    /// Double points per sample (default: proven degree + 1).
    #[arg(long)]
    pub marks: Option<usize>,
    /// Largest m for the binomial lemma.
    #[arg(long = "max-m", default_value_t = 8)]
    pub max_m: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}
