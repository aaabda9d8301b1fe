//! Weierstrass semigroups of triples of rational points on Hermitian curves.
//!
//! The Hermitian curve over `F_{q^2}` is the smooth plane curve cut out by
//! `X^{q+1} = Y^q Z + Y Z^q`. It has genus `q(q-1)/2` and `q^3 + 1` rational
//! points. For a set `T = {P, Q, R}` of three distinct rational points (a
//! *Hermitian triangle*), the Weierstrass semigroup `H(P, Q, R)` collects all
//! triples of pole orders realized simultaneously at the three points by a
//! single rational function; its finite complement in `N^3` is the gap set.
//!
//! This crate computes these objects exactly, at desk scale (`q <= 16`), by
//! two independent routes that are checked against each other:
//!
//! * a closed-form discrepancy table ([`discrepancy::SigmaTable`]) from which
//!   Riemann-Roch dimensions, base points, gaps, and pure gaps are read off
//!   in O(q) time per query, and
//! * a brute-force Riemann-Roch oracle ([`oracle`]) that computes dimensions
//!   by exact linear algebra on local power-series expansions.
//!
//! On top of these sit the gap census ([`census`]) with its closed-form
//! counts, minimal generating sets of the semigroups ([`semigroup`]), the
//! classification of triangles up to automorphism ([`curve`], [`orbits`]),
//! and a self-verification suite ([`verify`]).
//!
//! Start with the runnable examples (`cargo run --example gap_census`), or
//! with the `hermitian-semigroups` binary which exposes every computation as
//! a subcommand with JSON/CSV output.

pub mod census;
pub mod cli;
pub mod curve;
pub mod discrepancy;
mod error;
pub mod field;
pub mod oracle;
pub mod orbits;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};

/// A triple of divisor coefficients `(a, b, c)` attached to the three points
/// of a triangle, ordered lexicographically.
pub type Triple = (u32, u32, u32);
