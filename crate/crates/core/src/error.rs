use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the geometric and numerical routines.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} coordinates")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a projective point needs at least 2 coordinates, got {0}")]
    TooFewCoordinates(usize),

    #[error("the zero vector does not represent a projective point")]
    ZeroVector,

    #[error("point is not proper: <x,x> = {0}")]
    NotProper(f64),

    #[error("cosh argument {0} is below 1; input is numerically inconsistent")]
    CoshBelowOne(f64),

    #[error("malformed Coxeter symbol {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("Coxeter weight {0} is below 3")]
    WeightTooSmall(u64),

    #[error("unsupported symbol {symbol}: {reason}")]
    UnsupportedSymbol { symbol: String, reason: String },

    #[error("matrix is singular (pivot {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },

    #[error("Gram entry {0} is positive; off-diagonal entries must be <= 0")]
    PositiveGramEntry(f64),

    #[error("vertex {index}: expected {expected} (h = {value})")]
    VertexClass {
        index: usize,
        expected: &'static str,
        value: f64,
    },

    #[error("form has signature ({positive},{negative}), expected exactly one negative direction")]
    FormSignature { positive: usize, negative: usize },

    #[error("argument must be finite, got {0}")]
    NonFinite(f64),

    #[error("{what}: argument {value} outside the domain")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid {what}: {value}")]
    InvalidArgument { what: &'static str, value: f64 },

    #[error("quadrature did not converge: best estimate {estimate} with error {error:e} after {subdivisions} subdivisions")]
    NoConvergence {
        estimate: f64,
        error: f64,
        subdivisions: usize,
    },
}

impl Error {
    /// `true` for errors caused by malformed or unsupported input rather
    /// than by numerical trouble.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::WeightTooSmall(_)
                | Error::UnsupportedSymbol { .. }
                | Error::NonFinite(_)
                | Error::InvalidArgument { .. }
                | Error::DimensionMismatch { .. }
                | Error::TooFewCoordinates(_)
                | Error::ZeroVector
        )
    }
}
