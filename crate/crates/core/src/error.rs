use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("{a} is divisible by {p}; the Legendre symbol is undefined")]
    DivisibleArgument { a: i64, p: u64 },

    #[error("labeling is not a bijection onto 1..={n}")]
    NotBijective { n: usize },

    #[error("labeling has order {found}, expected {expected}")]
    OrderMismatch { expected: u64, found: u64 },

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    /// The size bracket was not divisible by 4. This can only come from a bug.
    #[error("size bracket {bracket} for n={n}, p={p} is not divisible by 4")]
    SizeNotIntegral { n: u64, p: u64, bracket: i64 },

    #[error("bound m = {0} is not part of the survey table")]
    UnknownBound(u64),

    #[error("invalid survey range: {0}")]
    InvalidSurvey(&'static str),
}
