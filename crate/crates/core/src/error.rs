use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants that signal a falsified identity (`DivisionFailed`, `NotAUnit`,
/// `MismatchBeyondPrecision`, `CongruenceFailure`) are never expected on
/// correct input; callers should treat them as fatal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("conductor {0} is not of the form p^l or 2p^l")]
    UnsupportedConductor(u64),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("odd power {exponent} of {var} cannot be expanded in the squared variable")]
    OddExponent { var: char, exponent: i64 },
    #[error("exact division failed: {0}")]
    DivisionFailed(String),
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("unknown knot name `{0}`")]
    UnknownKnot(String),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("odd q^alpha exponent in state sum: {0}")]
    OddAlphaExponent(String),
    #[error("alpha^2/2 counter is {0}, expected 0 (writhe not normalized)")]
    NonzeroAlphaSquareCounter(i64),
    #[error("y^{m} coefficients disagree: valuation {valuation} below precision {precision}")]
    MismatchBeyondPrecision { m: u32, valuation: u32, precision: u32 },
    #[error("congruence fails at (n={n}, m={m}) modulo {modulus}")]
    CongruenceFailure { n: u32, m: u32, modulus: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
