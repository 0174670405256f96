use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("incomparable grading: weights {lhs} and {rhs} differ")]
    WeightMismatch { lhs: u32, rhs: u32 },

    #[error("bump {lambda}[{rho}] undefined")]
    BumpUndefined { lambda: String, rho: String },

    #[error("expected a two-part partition, got {0}")]
    NotTwoPart(String),

    #[error("shape must be nonempty")]
    EmptyShape,

    #[error("partition {partition} has more than {max} parts")]
    TooManyParts { partition: String, max: usize },

    #[error("{0} has an odd number of parts")]
    OddPartCount(String),

    #[error("multiset {0} is not nested")]
    NotNested(String),

    #[error("multiset must be nonempty")]
    EmptyMultiset,

    #[error("degree {degree} exceeds the configured bound {bound}")]
    BoundExceeded { degree: u32, bound: u32 },

    #[error("degree mismatch: {lhs} vs {rhs}")]
    DegreeMismatch { lhs: u32, rhs: u32 },

    #[error("rows do not form a semistandard tableau of shape {0}")]
    NotSemistandard(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
