//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by exact arithmetic and by precondition checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The rank (number of torus variables) of two operands disagrees.
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// A construction that needs an even rank was given an odd one.
    #[error("rank must be even, got {0}")]
    OddRank(usize),

    /// Rank outside the supported range (at least 2).
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),

    /// Exact division failed: the dividend is not a multiple of the divisor.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// Division by zero requested.
    #[error("division by zero")]
    ZeroDivisor,

    /// A mutation direction outside 1..=n.
    #[error("mutation direction {k} out of range 1..={n}")]
    DirectionOutOfRange { k: usize, n: usize },

    /// Two factors fail the quasi-commutation test their labels promise.
    #[error("factors {a} and {b} do not quasi-commute with the labelled exponent")]
    NotQuasiCommuting { a: usize, b: usize },

    /// A grid or continuant index outside its documented range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A window [j_min, j_max] that does not contain column 0.
    #[error("invalid window: j_min ({j_min}) must be <= 0 <= j_max ({j_max})")]
    InvalidWindow { j_min: i64, j_max: i64 },

    /// A reconstructed grid violates the determinant-one relation it must
    /// satisfy.
    #[error("unimodular relation violated: {0}")]
    UnimodularViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
