//! Exact verification of dynamical twist, coboundary and quantum Weyl group
//! identities for `U_q(sl2)` on finite-dimensional representations.
//!
//! Scalars live in `Q(t, y)` with `t = q^{1/4}` and `y = x^{1/2}`, so every
//! exponent that appears (including `q^{h²/4}` and `x^{h/2}`) is an integer.

pub mod error;
pub mod qhyper;
pub mod qscalar;
pub mod dyncalc;
pub mod elements;
pub mod repr;
pub mod suites;

pub use error::{Error, Result};
pub use qscalar::{Agreement, Anchor, QScalar};
