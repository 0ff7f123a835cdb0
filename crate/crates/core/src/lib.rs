//! Graded rings of Calabi-Yau threefolds in weighted projective space.
//!
//! The crate covers the full pipeline from orbifold Riemann-Roch data to
//! explicit Pfaffian equations:
//!
//! - [`series`]: rational Hilbert series and truncated expansions;
//! - [`orbifold`]: Hilbert series from `h^0(A)`, `h^0(2A)` and a basket;
//! - [`recognition`]: weights, equation degrees and resolution shapes from a series;
//! - [`pfaffian`]: graded polynomials, 5x5 skew matrices, Tom and Jerry formats;
//! - [`geometry`]: node counts, unprojection bookkeeping, Euler characteristics, the web graph;
//! - [`cli`]: the command-line front end.
//!
//! Runnable tours live in `examples/`; run one with `cargo run --example <name>`.

pub mod cli;
pub mod geometry;
pub mod orbifold;
pub mod pfaffian;
pub mod recognition;
pub mod series;
