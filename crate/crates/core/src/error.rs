use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition `{0}`: expected comma-separated positive integers in weakly decreasing order")]
    InvalidPartition(String),
    #[error("invalid label `{0}`: expected `mu=<partition>;lambda=<partition>`")]
    InvalidLabel(String),
    #[error("{name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },
    #[error("{{{label}}} is not an irreducible U({m}) label")]
    NonBasisLabel { label: String, m: usize },
    #[error("partition {partition} has more than {m} parts")]
    TooManyParts { partition: String, m: usize },
    #[error("oracle limited to |lambda| <= {limit}, got {size}")]
    OracleTooLarge { size: usize, limit: usize },
    #[error("frame is not orthonormal (Gram deviation {deviation:.3e})")]
    NonOrthonormalFrame { deviation: f64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("degenerate simplex: {0}")]
    DegenerateSimplex(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(
    name: &'static str,
    value: impl TryInto<i64>,
    expected: impl Into<String>,
) -> Error {
    Error::OutOfRange {
        name,
        value: value.try_into().unwrap_or(i64::MAX),
        expected: expected.into(),
    }
}
