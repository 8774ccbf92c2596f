use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("entries do not share a parity class or have the wrong parity for this pair")]
    Parity,
    #[error("parameter is not strictly decreasing")]
    NotDominant,
    #[error("weight is not weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("rank ordering requires l <= lp (got l = {l}, lp = {lp})")]
    RankOrder { l: usize, lp: usize },
    #[error("invalid dual pair: {0}")]
    InvalidPair(String),
    #[error("representation does not occur: {0}")]
    NotOccurring(String),
    #[error("sum of parameter entries is not an integer")]
    NonIntegralSum,
    #[error("polynomial is not divisible by the Vandermonde product")]
    NotDivisible,
    #[error("distributions are not proportional")]
    NotProportional,
    #[error("Hermitian eigensolver did not converge")]
    NoConvergence,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
