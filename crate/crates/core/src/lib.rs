//! Exact calculator for finite-dimensional Lie triple systems.
//!
//! A Lie triple system is given here by its structure constants over the
//! rationals or a prime field F_p (p >= 5). On top of that representation the
//! crate mechanizes:
//!
//! - axiom verification and construction from Lie algebras ([`lts_core`]);
//! - the Leibniz algebra on the fundamental set g (x) g and its module
//!   axioms ([`fundamental_leibniz`]);
//! - representations (V, theta), the adjoint representation, and the induced
//!   module structure on Hom(g, V) ([`representation`]);
//! - the Yamaguti and Loday-Pirashvili coboundary operators, cocycle
//!   checkers, and cohomology in degrees 1, 3, 5 ([`cochain_complex`]);
//! - Nijenhuis operators and infinitesimal deformations ([`deformation`]);
//! - abelian extensions and their classification by H^3 ([`extension`]);
//! - JSON file formats and the `ltscalc` command-line tool ([`cli_io`]).
//!
//! Everything is exact: no floating point, no tolerances.

pub mod cli_io;
pub mod cochain_complex;
pub mod deformation;
pub mod error;
pub mod exact_linalg;
pub mod extension;
pub mod fundamental_leibniz;
pub mod lts_core;
pub mod representation;

pub use error::{Error, Result};
pub use exact_linalg::{Field, Matrix, Scalar};
pub use lts_core::LieTripleSystem;
