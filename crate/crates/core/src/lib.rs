//! Exact arithmetic for the major index over Delannoy and Schröder
//! lattice paths.
//!
//! The library enumerates the path families `Del(m,n,l)`, `Sch(n,l)` and
//! `BDel(n,n,l)` over the step alphabet {E, D, N}, computes maj
//! distributions under any linear ordering of the alphabet, evaluates the
//! matching closed-form q-polynomials, and implements the depth-pivot
//! bijection from bad square paths onto `Del(n+1,n-1,l)` together with the
//! flawed single-letter map it replaces. Everything is exact: coefficients
//! are arbitrary-precision integers and divisions verify their remainders.
//!
//! The `verify` module cross-checks the closed forms against brute-force
//! enumeration and the bijection against its defining properties, at any
//! desk-scale bound.

pub mod bijections;
pub mod closedform;
pub mod error;
pub mod paths;
pub mod qpoly;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use paths::{LatticeWord, PathFamily, Step};
pub use qpoly::QPoly;
pub use stats::StepOrder;
