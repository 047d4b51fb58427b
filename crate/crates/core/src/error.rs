use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the zero polynomial has no admissible partitions (its cone is everything)")]
    ZeroPolynomial,

    #[error("support of size {size} exceeds the enumeration guard {limit}")]
    SupportTooLarge { size: usize, limit: usize },

    #[error("map on abelianizations has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis {which} fails: {detail}")]
    Hypothesis { which: String, detail: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short stable identifier used in machine-readable error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::Parse { .. } => "parse",
            Error::UnknownGenerator(_) => "unknown_generator",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::SupportTooLarge { .. } => "support_too_large",
            Error::RankDeficient { .. } => "rank_deficient",
            Error::Precondition(_) => "precondition",
            Error::Hypothesis { .. } => "hypothesis",
            Error::Internal(_) => "internal",
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
