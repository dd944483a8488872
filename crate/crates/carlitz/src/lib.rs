//! Exact arithmetic for degenerate special numbers and polynomials.
//!
//! Everything here is a polynomial in the deformation parameter `lambda`
//! over the rationals, computed exactly. The crate provides:
//!
//! - [`rational`]: arbitrary-precision rational scalars.
//! - [`poly`]: dense univariate polynomials over a coefficient ring;
//!   [`LambdaPoly`] (polynomials in lambda) and [`XPoly`] (polynomials in
//!   an outer variable with `LambdaPoly` coefficients).
//! - [`series`]: truncated formal power series, used to realize
//!   generating-function definitions by exact division.
//! - [`factorial`]: generalized falling/rising factorials and the
//!   degenerate exponential.
//! - [`stirling`]: triangles of degenerate Stirling numbers of both kinds,
//!   unsigned brackets, and basis conversion between the monomial,
//!   classical-falling and lambda-falling bases.
//! - [`appell`]: degenerate Bernoulli and Frobenius-Euler numbers and
//!   polynomials.
//! - [`eulerian`]: degenerate Eulerian numbers and polynomials by several
//!   independent routes, Carlitz's variant, and the permutation-descent
//!   oracle.
//! - [`suite`]: mechanical verification of a catalogue of finite-sum
//!   identities relating all of the above, with machine-readable results.
//!
//! The crate is `no_std` (requires `alloc`); IO and serialization live in
//! the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod appell;
pub mod display;
pub mod error;
pub mod eulerian;
pub mod factorial;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod stirling;
pub mod suite;

pub use error::Error;
pub use poly::{LambdaPoly, Poly, XPoly};
pub use rational::Rational;
pub use ring::Ring;
pub use series::Series;
