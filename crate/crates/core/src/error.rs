use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid shape {rows}x{cols} for {len} entries")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("non-finite entry in matrix or vector")]
    NonFinite,
    #[error("operator {index} is not Hermitian (residual {residual:e})")]
    NotHermitian { index: usize, residual: f64 },
    #[error("state {label:?} is not normalized (norm {norm})")]
    NotNormalized { label: String, norm: f64 },
    #[error("states {i} and {j} are not orthogonal (overlap {overlap})")]
    NotOrthogonal { i: usize, j: usize, overlap: f64 },
    #[error("complete set in {dim_a}x{dim_b} must contain {expected} states, found {found}")]
    IncompleteSet { dim_a: usize, dim_b: usize, expected: usize, found: usize },
    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),
    #[error("state is not semi-classical in the given flag basis (off-block residual {residual:e})")]
    NotSemiClassical { residual: f64 },
    #[error("flag basis is not orthonormal (deviation {deviation:e})")]
    FlagBasis { deviation: f64 },
    #[error("value {value} out of range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },
    #[error("set of {count} states exceeds exhaustive search limit {max}")]
    TooLarge { count: usize, max: usize },
    #[error("protocol did not terminate within {0} rounds")]
    MaxRoundsExceeded(usize),
    #[error("unknown builtin corpus {0:?}")]
    UnknownBuiltin(String),
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("empty input")]
    Empty,
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
