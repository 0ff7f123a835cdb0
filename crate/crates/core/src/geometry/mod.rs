//! Numerical bookkeeping behind the constructions: node counts, unprojection
//! steps in the Hilbert series, Euler characteristics and the web of families.

mod euler;
mod hilbert;
mod nodes;
mod web;

use thiserror::Error;

pub use euler::{chi_conifold, chi_contract_plane, chi_crepant_third, ConifoldLedger, LedgerStep};
pub use hilbert::{ci_series, numerator_over, unproject_term};
pub use nodes::{
    determinantal_length, standard_choice_nodes, weighted_bezout, DeterminantalData, DivisorPieces, NodeReport,
    WeightedPlane,
};
pub use web::{build_web, known_family_counts, WebEdge, WebGraph, WebNode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("plane weights must be positive")]
    ZeroWeight,
    #[error("cannot parse `{0}`")]
    Syntax(String),
    #[error("matrix entry of negative degree")]
    NegativeEntryDegree,
    #[error("not zero-dimensional by degree count (pole order {pole_order:?})")]
    NotZeroDimensional { pole_order: Option<u32> },
    #[error("non-integral point count {0}")]
    NonIntegral(String),
    #[error("at least one divisor with at least one piece is required")]
    NoPieces,
}
