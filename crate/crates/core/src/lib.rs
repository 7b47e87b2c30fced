//! A computational laboratory for sums-differences inequalities over prime
//! fields and for discretized line-family (Kakeya-type) experiments.
//!
//! The crate is organized around six pieces:
//!
//! * [`field`] — exact slope arithmetic in `F_p ∪ {∞}`: projections,
//!   dual slopes, and the fractional linear maps fixing −1.
//! * [`config`] — finite plane configurations with an injective −1
//!   projection, their segment and corner families, and the popularity
//!   refinement operators.
//! * [`sd`] — verification and brute-force search for sums-differences
//!   bounds, plus certificate-producing replays of the counting pipelines
//!   (four-slope, six-slope, substructure, iteration, and the slope-tree
//!   descent).
//! * [`exponents`] — exact evaluation of the exponent recursions, their
//!   fixed points, and the dimension-bound comparison tables.
//! * [`grid`] — discretized points, lines, separated families and
//!   shadings on a `1/N` grid, with two-ends checks, slice extraction,
//!   and the six-slices reduction to a sums-differences instance.
//! * [`cli`] / [`io`] — the command-line front end, JSON/CSV schemas,
//!   and reproducible report plumbing.
//!
//! Everything that a proof pipeline claims is recorded in a
//! [`cert::Certificate`]: exact integer counts, the inequality checked at
//! each step, and the realized constant. Certificates are self-contained;
//! replaying the recorded numbers reproduces the verdict.

pub mod cert;
pub mod cli;
pub mod config;
pub mod exponents;
pub mod field;
pub mod grid;
pub mod io;
pub mod sd;
