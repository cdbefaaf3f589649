//! Exact-arithmetic enumerative combinatorics of slope-`r` lattice paths.
//!
//! The crate provides, over arbitrary-precision rationals:
//!
//! * [`dyck`] — height-`n` slope-`r` lattice paths in weakly increasing code
//!   form, Fuss–Catalan counting, the `area` statistic and its `q`-enumerator;
//! * [`tamari`] — the generalized Tamari lattice on those paths: covers,
//!   reachability, interval counting, Möbius values, longest-chain distances,
//!   and `(q,t)` interval enumerators;
//! * [`parking`] — `r`-parking functions: shapes, standardization, blocks,
//!   two-row array encodings, `dinv`, diagonal reading words and descents,
//!   cover moves, and the set of path/function pairs ordered by shape;
//! * [`partitions`], [`symfunc`], [`qsym`] — integer partitions, the five
//!   classical symmetric-function bases with exact change of basis, Kostka
//!   numbers, Hall pairing, `ω`, principal specializations, and the monomial /
//!   fundamental quasi-symmetric bases;
//! * [`frobenius`] — Frobenius characteristics of the parking-function and
//!   interval-pair actions, the graded polynomial-ring character, and the
//!   combinatorial `(q,t)` sums built from `dinv` and descent compositions;
//! * [`series`] — truncated formal power series used to verify the
//!   generating-function identities satisfied by all of the above;
//! * [`verify`] — a registry of named, machine-checkable claims tying every
//!   module to its reference values.
//!
//! All public types are immutable values after construction and safe to share
//! across threads. Enumerations that could blow up take an explicit object cap
//! and return a typed resource error instead of thrashing.

pub mod bitset;
pub mod dyck;
pub mod error;
pub mod expand;
pub mod frobenius;
pub mod parking;
pub mod partitions;
pub mod qsym;
pub mod qt;
pub mod ratpoly;
pub mod series;
pub mod symfunc;
pub mod tamari;
pub mod verify;

pub use error::{Error, Result};

/// Default cap on the number of objects any single enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Default truncation order for series identity verification.
pub const DEFAULT_SERIES_CAP: usize = 12;

/// Default maximum homogeneous degree for symmetric-function basis conversion.
pub const DEFAULT_DEGREE_CAP: usize = 10;
