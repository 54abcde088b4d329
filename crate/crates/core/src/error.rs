use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("extended gcd of two zero polynomials")]
    GcdOfZeros,

    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands live in different cyclotomic fields (n = {0} and n = {1})")]
    MixedModulus(u64, u64),

    #[error("cyclotomic element is not rational: coefficients [{}]", join_rationals(.0))]
    NonRational(Vec<Rational>),

    #[error("q-number [{k}]_q vanishes and cannot be raised to a negative power")]
    ZeroQNumber { k: u64 },

    #[error("degenerate q: {0}")]
    DegenerateQ(String),

    #[error("{route} is only valid for {bound}; got {got}")]
    OutOfValidityRange {
        route: &'static str,
        bound: String,
        got: String,
    },

    #[error("generating-function denominator has unexpected valuation: {0}")]
    Valuation(String),

    #[error("interpolation did not stabilize below degree {cap}")]
    NoStabilization { cap: usize },

    #[error("internal routes disagree: {0}")]
    RouteMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty range")]
    EmptyRange,
}

pub type Result<T> = std::result::Result<T, Error>;

fn join_rationals(v: &[Rational]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
