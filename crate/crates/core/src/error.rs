use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors are split into two families: input/hypothesis failures that a
/// caller is expected to hit (ineligible pairs, malformed discriminants),
/// and internal consistency failures that indicate a bug.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not a discriminant (need -d = 0 or 1 mod 4)")]
    NotADiscriminant(i64),

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("no Dirichlet inverse: leading term is not invertible")]
    NoDirichletInverse,

    #[error("division by a non-invertible element")]
    NotInvertible,

    #[error("not a polynomial in j: residual coefficient at q^{exponent}")]
    NotPolynomialInJ { exponent: i64 },

    #[error("series truncated at q^{available}, need q^{needed}")]
    Truncation { needed: i64, available: i64 },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("no weight decomposition for k = {0}")]
    NoWeightDecomposition(u64),

    #[error("eigenbasis not defined over F_{ell}: {reason}")]
    EigenbasisNotSplit { ell: u64, reason: String },

    #[error("eligibility failed for d = {d}, ell = {ell}: {reason}")]
    Ineligible { d: u64, ell: u64, reason: String },

    #[error("formula requires ell to not divide n (ell = {ell}, n = {n})")]
    EllDividesN { ell: u64, n: u64 },

    #[error("bad reduction at p = {0}")]
    BadReduction(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("insufficient precision for d = {d} after {attempts} attempts")]
    InsufficientPrecision { d: u64, attempts: u32 },

    #[error("singular or inconsistent linear system")]
    SingularSystem,

    #[error("congruence verification failed at q^{index}")]
    VerificationFailed { index: u64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures caused by the caller's input or by an unmet
    /// mathematical hypothesis, as opposed to a broken invariant.
    pub fn is_user_error(&self) -> bool {
        !matches!(
            self,
            Error::Internal(_)
                | Error::NotPolynomialInJ { .. }
                | Error::VerificationFailed { .. }
                | Error::InsufficientPrecision { .. }
                | Error::SingularSystem
                | Error::Io(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
