use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse group `{input}`: {reason}")]
    GroupParse { input: String, reason: String },

    #[error("cyclic factor Z{0} is not allowed, orders must be at least 1")]
    ZeroOrder(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid partition {parts:?} for prime {prime}: {reason}")]
    InvalidPartition {
        prime: u64,
        parts: Vec<u32>,
        reason: &'static str,
    },

    #[error("invalid Cayley table: {0}")]
    CayleyTable(String),

    #[error("{what} of size {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u128,
        bound: u128,
    },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid block shape: {0}")]
    InvalidShape(String),

    #[error("Burnside numerator {numerator} is not divisible by the group order {order}")]
    Integrality { numerator: String, order: u64 },

    #[error("{divisor} does not divide the exponent {exponent}")]
    NotADivisor { divisor: u64, exponent: u64 },

    #[error("invalid order profile: {0}")]
    InvalidProfile(String),

    #[error("operation requires an abelian group")]
    RequiresAbelian,

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("inconsistent count sequence: {0}")]
    InconsistentSequence(String),

    #[error("count sequence has {have} terms but {need} are required")]
    InsufficientTerms { have: u64, need: u64 },

    #[error("group order cannot be inferred from the sequence: {0}")]
    AmbiguousOrder(String),

    #[error("invalid count sequence file: {0}")]
    SequenceFormat(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
