//! Exact arithmetic for the order-`m` Polymatrix, generalized Polynacci
//! sequences, and their reflected and inverted companions.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod exact;
pub mod genfunc;
pub mod oeis;
pub mod order;
pub mod polymatrix;
pub mod roots;
pub mod selftest;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{IntMatrix, IntPolynomial, Integer, RationalFunction};
pub use order::Order;
