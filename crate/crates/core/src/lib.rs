//! Exact oriented chromatic polynomials of oriented and mixed graphs.
//!
//! Two independent routes compute the polynomial: exhaustive colouring
//! counts interpolated at `k = 0..n` ([`colouring::poly_bruteforce`]) and the
//! edge-addition / vertex-identification recursion
//! ([`colouring::poly_reduction`]). On top of these sit the structural
//! coefficient predictions ([`structure`]), the chromatic-invariance
//! classifiers ([`invariance`]) and exact real-root isolation ([`roots`]).

pub mod cli;
pub mod colouring;
pub mod error;
pub mod graph;
pub mod invariance;
pub mod poly;
pub mod roots;
pub mod structure;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{GraphKind, MixedGraph, Relation};
pub use poly::{IntPolynomial, Rational};
