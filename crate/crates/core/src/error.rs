use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coefficient {coeff} is not divisible by {divisor}")]
    NonDivisibleCoefficient { coeff: BigInt, divisor: BigInt },

    #[error("division by a zero coefficient")]
    DivisionByZero,

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("index {0} is out of range (indices start at 1)")]
    InvalidIndex(usize),

    #[error("Lecture Hall polynomial {0} has not been computed yet")]
    NotComputed(usize),

    /// The coefficient of the unknown in the defining equation was not a
    /// single term, so the solve step cannot proceed.
    #[error("coefficient of the unknown in equation {index} has {terms} terms: {poly}")]
    NonMonomialCoefficient {
        index: usize,
        terms: usize,
        poly: String,
    },

    #[error("subset {0:?} is not strictly increasing with positive entries")]
    InvalidSubset(Vec<usize>),

    #[error("vector {0:?} is not a Hilbert basis element")]
    MalformedHilbertBasis(Vec<i64>),

    #[error("fixture line {line}: {msg}")]
    FixtureParse { line: usize, msg: String },
}
