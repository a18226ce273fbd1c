use thiserror::Error;

use crate::group_ring::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element has an even denominator; not in the localization at 2")]
    EvenDenominator,

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("generators span a lattice of rank {0} < 2; not a finite-index ideal")]
    DegenerateLattice(usize),

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("ideal is fractional (denominator {0})")]
    FractionalIdeal(Int),

    #[error("{0} is not an odd prime")]
    NotOddPrime(Int),

    #[error("{0} is not prime")]
    NotPrime(Int),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("relation matrix has infinite cokernel")]
    InfiniteCokernel,

    #[error("presentation has {0} generators; at most {1} supported for minor enumeration")]
    TooManyGenerators(usize, usize),

    #[error("module order {0} exceeds the brute-force bound {1}")]
    BoundExceeded(Int, Int),

    #[error("element does not have order 2: {0}")]
    NotOrderTwo(String),

    #[error("{0} is not a fundamental discriminant of a real quadratic field")]
    NotFundamental(Int),

    #[error("prime set is invalid: {0}")]
    InvalidPrimeSet(String),

    #[error("inconsistent W2 data: {0}")]
    InconsistentW2(String),

    #[error("Birch–Tate inconsistency: {0}")]
    BirchTate(String),

    #[error("invalid record: {0}")]
    InvalidRecord(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Parse {
            what,
            detail: detail.into(),
        }
    }

    /// True for errors raised by the mathematics rather than by malformed input.
    pub fn is_mathematical_alarm(&self) -> bool {
        matches!(self, Error::BirchTate(_))
    }
}
