//! Exact-arithmetic verification of Euler-line and Brocard-axis theorems for
//! a rectangle and an arbitrary point.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: rationals, sparse multivariate polynomials, rational functions
//! - [`field`]: the scalar trait that the geometry is generic over
//! - [`geometry`]: points, lines, circles and exact predicates
//! - [`centers`]: triangle centers and central lines
//! - [`theorems`]: configurations, claim checks, symbolic and sampled drivers
//! - [`cli`]: the `verify`, `formulas` and `figure` commands
//!
//! See the `examples/` directory for one runnable walkthrough per layer.

pub mod arith;
pub mod centers;
pub mod cli;
pub mod field;
pub mod geometry;
pub mod theorems;

pub use arith::{BigRat, MultiPoly, RatFun};
pub use field::Field;
