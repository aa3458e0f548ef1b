//! Exact scalar, polynomial, rational-function, and matrix arithmetic.
//!
//! Every value here is immutable once built and every operation is pure, so
//! values can be shared across threads freely.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use ratfunc::RationalFunction;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
