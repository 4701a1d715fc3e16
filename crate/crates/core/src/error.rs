use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {requested} exceeds the configured maximum {max}")]
    LimitExceeded { requested: usize, max: usize },

    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("paths have different orders ({left} and {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix is not upper unitriangular in the given order")]
    NotUnitriangular,

    #[error("matrix dimensions do not match ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("polynomial division left a non-zero remainder")]
    InexactDivision,

    #[error("evaluation point is a pole: {0}")]
    PoleDetected(String),

    #[error("value {value} is out of range 1..={n}")]
    OutOfRange { value: usize, n: usize },

    #[error("not a parking function: {0:?}")]
    InvalidParkingFunction(Vec<usize>),

    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),

    #[error("independent routes disagree for {quantity}: {left} vs {right}")]
    RouteMismatch {
        quantity: &'static str,
        left: String,
        right: String,
    },

    #[error("unknown sequence {0}")]
    UnknownSequence(String),

    #[error("snapshot parse error: {0}")]
    SnapshotParse(String),
}

impl Error {
    /// True for the errors that guard combinatorial blowup.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::LimitExceeded { .. } | Error::BudgetExceeded { .. })
    }
}
