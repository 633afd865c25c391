//! Exact scalar arithmetic: rationals, sparse multivariate polynomials and
//! rational functions over the rationals.
//!
//! Everything in here is immutable once built. Operations are pure and all
//! types are `Send + Sync`.

mod parse;
mod poly;
mod ratfun;
mod rational;
mod sampling;
mod zippel;

pub use parse::parse_poly;
pub use poly::{
    poly_arith, var_names, with_product_limit, MultiPoly, PolyOp, MAX_ARITY, MAX_DEGREE,
};
pub use ratfun::{ratfun_arith, ratfun_eq, RatFun, RatOp};
pub use rational::{decimal17, format_rational, parse_rational, BigRat};
pub use sampling::{sample_rational, SampleKey};
pub use zippel::schwartz_zippel_check;

use thiserror::Error;

/// Errors raised by the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("evaluation point has {got} coordinates, polynomial has arity {arity}")]
    LengthMismatch { arity: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported arity {0} (at most {MAX_ARITY} variables)")]
    UnsupportedArity(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
