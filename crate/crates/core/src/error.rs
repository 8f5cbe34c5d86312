use thiserror::Error;

/// Errors raised by supertropical operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix of order {n} exceeds the determinant size cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("element {0} is not invertible (only tangible elements are)")]
    NotInvertible(String),
    #[error("matrix is strictly singular (determinant is -inf)")]
    StrictlySingular,
    #[error("matrix is not non-singular (determinant {0} is not tangible)")]
    NotNonSingular(String),
    #[error("matrix is not definite")]
    NotDefinite,
    #[error("bad elementary matrix indices: {0}")]
    BadIndices(String),
    #[error("polynomial is identically -inf; every element is a root")]
    DegeneratePolynomial,
    #[error("eigenvector candidate has a ghost entry at position {0}")]
    GhostInEigenvector(usize),
    #[error("eigenvalue candidate {0} must be tangible or -inf")]
    GhostEigenvalue(String),
    #[error("could not generate a matrix satisfying {constraint} after {attempts} attempts")]
    ConstraintUnsatisfiable { constraint: String, attempts: usize },
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
