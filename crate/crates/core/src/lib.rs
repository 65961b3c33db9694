//! Exact arithmetic for real-rooted polynomials and zero interlacing.
//!
//! Everything in this crate computes over arbitrary-precision rationals;
//! there is no floating point anywhere in a decision path. The central
//! objects are:
//!
//! * [`poly::Poly`] — canonical dense polynomials over `BigRational`;
//! * [`roots`] — Sturm chains, exact root counting, isolation and
//!   refinement, real-rootedness and the PF (nonnegative + real-rooted)
//!   predicate;
//! * [`interlace`] — certified comparison of the zero orders of two
//!   real-rooted polynomials (alternating/interlacing, weak or strict),
//!   plus Sturm-sequence and generalized-Sturm-sequence checks;
//! * [`criteria`] — certifiers for a collection of linear-combination
//!   theorems that produce real-rooted polynomials from interlacing pairs,
//!   together with a randomized soundness harness;
//! * [`families`] — recurrence-generated combinatorial families
//!   (orthogonal kinds, Stirling/Eulerian/derangement/Narayana and
//!   relatives) with independent brute-force enumeration oracles;
//! * [`graph`] — weighted matching polynomials and rook polynomials with
//!   the root-interlacing verification for vertex deletion;
//! * [`genus`] — polynomial transfer matrices, the "nice matrix" predicate
//!   and production for genus distribution sequences, including the
//!   counterexample family;
//! * [`diagnostics`] — Newton inequality margins, log-concavity,
//!   unimodality, modes and the mean-based mode interval.

pub mod diagnostics;
mod error;
pub mod families;
pub mod genus;
pub mod graph;
pub mod interlace;
pub mod poly;
pub mod report;
pub mod roots;

pub mod criteria;

pub use error::{Error, Result};
