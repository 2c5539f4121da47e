//! Exact-rational geometry of character spheres and the sigma-invariant
//! calculus of weak commutativity constructions.
//!
//! The crate stores *complements* of sigma-invariants as closed, rationally
//! defined spherical polyhedra ([`geometry::SphSet`]) and implements the
//! transformations that move sigma-data between a finitely generated group
//! `G`, its weak commutativity group `X(G)`, the quotient `X(G)/W(G)` and
//! Rocco's construction `nu(G)`, entirely in exact rational arithmetic.
//!
//! Points of a character sphere are represented by primitive integer vectors
//! ([`geometry::RayPoint`]); any rational character is scaled to one.

pub mod cli;
pub mod geometry;
pub mod group;
pub mod io;
pub mod num;
pub mod oracle;
pub mod sigma;

mod matrix;

pub use matrix::RatMatrix;

/// Errors shared by every layer of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("containment query exceeded branch cap of {cap}")]
    BranchLimitExceeded { cap: u64 },
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("ill-formed word: {0}")]
    IllFormedWord(String),
    #[error("missing sigma data: {0}")]
    MissingSigma(String),
    #[error("hypothesis violated: flag `{flag}` is false")]
    HypothesisViolated { flag: String },
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported document version {got} (supported: {supported})")]
    Version { got: u32, supported: u32 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
