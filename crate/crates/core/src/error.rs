//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("modulus must be a prime >= 5, got {0}")]
    BadModulus(u64),

    /// Raised by `quotient_dim` when span(B) is not contained in span(Z).
    /// Seeing this from a cohomology computation signals a broken coboundary.
    #[error("span(B) is not contained in span(Z)")]
    NotASubspace,

    #[error("structure constants do not define a Lie algebra ({violations} identity violation(s), first at {first:?})")]
    NotALieAlgebra { violations: usize, first: Vec<usize> },

    #[error("structure constants do not define a Lie triple system ({violations} axiom violation(s), first: {first})")]
    NotALieTripleSystem { violations: usize, first: String },

    #[error("cochain level {0} is not supported")]
    UnsupportedLevel(usize),

    #[error("cochain is not a 3-cocycle")]
    NotACocycle,

    #[error("cochain does not lie in the constrained cochain space")]
    NotConstrained,

    #[error("operator is not a Nijenhuis operator")]
    NotNijenhuis,

    #[error("polynomial has a nonzero constant term")]
    ConstantTermRejected,

    #[error("matrix is not a section of the projection")]
    NotASection,

    #[error("not an abelian extension: {0}")]
    NotAnExtension(String),

    #[error("bracket value escapes the abelian ideal")]
    BracketEscapesIdeal,

    #[error("witness does not satisfy the coboundary equation")]
    InvalidWitness,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bad scalar literal {literal:?}: {reason}")]
    BadScalar { literal: String, reason: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
