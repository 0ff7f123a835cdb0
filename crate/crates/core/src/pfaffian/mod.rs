//! Symbolic algebra for Pfaffian formats.
//!
//! - [`SparsePoly`] over a [`Ring`] of named graded variables;
//! - [`SkewMatrix5`] and its [`maximal_pfaffians`];
//! - [`TriangularIdeal`] membership, and the [`Format`] predicates [`is_tom`] and [`is_jerry`];
//! - the degree calculus [`solve_entry_weights`] and [`pfaffian_numerator`];
//! - the text format read by [`parse_format_file`].

mod degrees;
mod ideal;
mod matrix;
mod parse;
mod poly;

use thiserror::Error;

pub use degrees::{numerator_overlaps, pfaffian_numerator, solve_entry_weights, EntryWeights, SkewDegreeMatrix5};
pub use ideal::TriangularIdeal;
pub use matrix::{
    degree_obstructions, is_jerry, is_tom, maximal_pfaffians, satisfies, upper_pairs, Format, SkewMatrix5,
};
pub use parse::{parse_expression, parse_format_file, FormatFile, ParseError};
pub use poly::{GradedVariable, Ring, SparsePoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PfaffianError {
    #[error("variable `{0}` must have positive weight")]
    ZeroWeight(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("a 5x5 skew matrix needs 10 upper entries, got {0}")]
    MatrixShape(usize),
    #[error("cannot parse degree matrix `{0}`; expected four `;`-separated rows of 4, 3, 2, 1 integers")]
    DegreeSyntax(String),
    #[error("inconsistent degree matrix: entries {0:?} violate b_ab = q_a + q_b")]
    InconsistentDegrees(Vec<(usize, usize)>),
    #[error("Pfaffian degrees {degrees:?} must lie in [0, k) for k = {k}")]
    DegreeAboveAdjunction { degrees: [i64; 5], k: i64 },
    #[error("ideal is not triangular: {0}")]
    NotTriangular(String),
}
