//! Exact-arithmetic toolkit for Legendrian knots presented by contact
//! (±1)-surgery diagrams.
//!
//! The crate computes the classical invariants `tb` and `rot` of a
//! distinguished knot in a surgered 3-sphere, the `d3`-invariant of the
//! resulting contact structure, tight-contact-structure counts on
//! torus-knot complements by boundary slope, and the parametrized families
//! of strongly exceptional realizations those counts certify.
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! always reduced, and no code path touches floating point.
//!
//! Module layout:
//! - [`exact`] — integer matrix kernel (determinant, solve, signature) and
//!   negative continued fractions, generic over the scalar type;
//! - [`diagram`] — surgery-diagram model, linking/extended matrices,
//!   push-off deflation, JSON file format;
//! - [`invariants`] — tb / rot / d3 reports for full and deflated diagrams;
//! - [`seifert`] — torus-knot complement Seifert data, slopes, case
//!   classification, and tight-structure counting;
//! - [`families`] — generators and enumerators for the exceptional-knot
//!   families, with closed-form cross-checks;
//! - [`verify`] — the self-contained reproduction suite;
//! - [`cli`] — command layer shared by the `legctl` binary and tests.

pub mod cli;
pub mod diagram;
pub mod exact;
pub mod families;
pub mod invariants;
pub mod seifert;
pub mod verify;

/// Arbitrary-precision signed integer scalar.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Square integer matrix over [`Int`] (linking matrices and friends).
pub type IntMatrix = exact::Matrix<Int>;

pub use exact::{mat, rat};
