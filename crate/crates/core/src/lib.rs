//! Exact arithmetic for two-dimensional commutative algebras over ℚ.
//!
//! The crate computes the twisted polynomial invariants of a commutative
//! (not necessarily associative, not necessarily unital) product on ℚ²,
//! classifies such products up to basis change, reconstructs products from
//! their invariants, and implements a Gauss-style composition law on the
//! discriminant fibers.  Everything is done in exact rational arithmetic;
//! there are no floating point numbers anywhere.

pub mod algebra;
pub mod arith;
pub mod classify;
pub mod construct;
pub mod cubics;
pub mod gauss;
pub mod invariants;
pub mod poly;
pub mod quad;
pub mod verify;

/// Crate-wide error type.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Domain(String),
    #[error("case not supported: {0}")]
    Unsupported(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
