//! Exact chromatic-polynomial toolkit.
//!
//! Everything here is exact: polynomials carry arbitrary-precision integer
//! coefficients, ray inequalities are certified by real-root isolation, and
//! graph invariants are computed by exhaustive or branch-and-bound search at
//! desk scale (n ≤ 64 for graphs, n ≤ 16 for chromatic polynomials).
//!
//! Module map:
//! - [`polyalg`]: integer polynomials, falling factorials, the `f_bound`
//!   family, and nonnegativity certificates on rays.
//! - [`graphcore`]: simple graphs, invariants (χ, ω, α, κ, l-core),
//!   ear decompositions, canonical forms, graph6 I/O.
//! - [`chrompoly`]: chromatic polynomials by deletion-contraction with
//!   reduction traces, plus an independent brute-force interpolation oracle.
//! - [`families`]: named graph families and figure fixtures with their
//!   expected polynomials.
//! - [`verify`]: small-graph enumeration, bound checking, structural lemma
//!   audits, and verification campaigns.

pub mod chrompoly;
pub mod error;
pub mod families;
pub mod graphcore;
pub mod polyalg;
pub mod verify;

pub use error::{Error, Result};

pub use polyalg::IntPoly;
