use thiserror::Error;

/// Errors raised by lattice validation, label construction and table assembly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Gram matrix is empty; the lattice must have rank at least 1")]
    EmptyLattice,
    #[error("Gram matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("Gram matrix is not symmetric: entry ({i},{j}) differs from ({j},{i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("lattice is not even: diagonal entry {i} is {value}, which is odd")]
    NotEven { i: usize, value: i64 },
    #[error("Gram matrix is not positive definite: leading principal minor of order {order} is {minor}")]
    NotPositiveDefinite { order: usize, minor: i64 },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector {0} does not lie in the ambient group of the quotient")]
    NotInAmbientGroup(String),
    #[error("vector {0} does not lie in the dual lattice")]
    NotInDual(String),
    #[error("vector {0} does not lie in the lattice")]
    NotInLattice(String),
    #[error("pairing {0} is not an integer")]
    NonIntegralPairing(String),
    #[error("non-diagonal label needs inequivalent entries, but {0} and {1} agree modulo L")]
    DegeneratePair(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fusion table refused: |L°/L| = {det} exceeds the configured bound {max}")]
    TableTooLarge { det: i64, max: i64 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
