//! Exact decision procedures for one-sided primeness of left ideals in three
//! concrete noncommutative principal ideal domains: skew polynomials over
//! finite fields twisted by a Frobenius power, polynomials over the rational
//! quaternions, and rational function coefficients twisted by the shift
//! x ↦ x+1.
//!
//! The library classifies a principal left ideal against four primeness
//! notions — extremely, completely, structurally, and weakly prime — and
//! cross-checks its classifiers against brute-force definitional oracles on
//! finite rings. Every answer is exact: arithmetic is over F_q, Q, and H_Q
//! with no floating point, and procedures that search bounded spaces report
//! `Inconclusive` rather than guess when a configured cap is exceeded.

pub mod error;
pub mod factorization;
pub mod finitelab;
pub mod linalg;
pub mod oracle;
pub mod parse;
pub mod primeness;
pub mod scalars;
pub mod similarity;
pub mod skewpoly;
pub mod structure;
pub mod verdict;

pub use error::{Error, Result};
