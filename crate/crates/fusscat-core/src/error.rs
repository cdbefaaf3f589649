//! Typed errors shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Enumeration blow-ups are reported through [`Error::ResourceCap`] rather than
/// by attempting the enumeration; callers (notably the CLI) map the variants to
/// distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would produce more objects than the configured cap.
    #[error("enumerating {count} objects would exceed the configured cap of {cap}")]
    ResourceCap { count: String, cap: u64 },

    /// A code fails the weakly-increasing / slope-bound conditions.
    #[error("invalid slope-{r} path code: {reason}")]
    InvalidPath { r: u32, reason: String },

    /// A word is not a parking word for the given slope.
    #[error("invalid parking word: {reason}")]
    InvalidParking { reason: String },

    /// A two-row array violates one of its admissibility conditions.
    #[error("invalid two-row array: {reason}")]
    InvalidArray { reason: String },

    /// A part sequence is not a valid (staircase-bounded) partition.
    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    /// Two homogeneous objects of different weights were combined.
    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: u64, right: u64 },

    /// A basis conversion was requested beyond the configured degree cap.
    #[error("degree {degree} exceeds the basis-conversion cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    /// A series operation's precondition (constant term, precision) failed.
    #[error("series precondition violated: {0}")]
    SeriesPrecondition(String),

    /// A lattice query referenced a path that is not a node.
    #[error("node not in lattice: {0}")]
    UnknownNode(String),

    /// A parameter is outside the domain of the requested operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A fixture file is missing or unreadable.
    #[error("fixture error: {0}")]
    Fixture(String),

    /// A quasi-symmetric expansion turned out not to be symmetric.
    #[error("not symmetric: {0}")]
    NotSymmetric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
