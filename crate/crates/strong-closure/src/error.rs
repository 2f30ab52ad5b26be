use thiserror::Error;

/// Errors surfaced by group construction and the structural operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("images do not form a bijection on 1..={degree}: {reason}")]
    NotABijection { degree: usize, reason: String },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },

    #[error("subgroup is not contained in the ambient group")]
    NotContained,

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} does not divide the group order {1}")]
    NotADivisor(u64, u64),

    #[error("group of order {0} is not a p-group")]
    NotAPGroup(u64),

    #[error("group order overflows u64")]
    OrderOverflow,

    #[error("Sylow 2-subgroup is not normal; refusing complement search")]
    SylowTwoNotNormal,

    #[error("invalid target order {order} for Sylow subgroup of order {sylow_order}")]
    InvalidTargetOrder { order: u64, sylow_order: u64 },

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("{path}:{line}: {msg}")]
    GroupFileParse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("unknown built-in group or instance id: {0}")]
    UnknownId(String),

    #[error("unknown check id: {0}")]
    UnknownCheck(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
