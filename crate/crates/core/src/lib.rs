//! Slopes of angle bisectors that are integers or rationals.
//!
//! Lines through the origin with slopes `a` and `b` have a bisector of slope
//! `c` exactly when `(a-c)^2 (b^2+1) = (b-c)^2 (a^2+1)`. This crate builds all
//! integral solutions from solutions of negative Pell equations
//! `x^2 - d y^2 = -1`, builds rational ones from pairs of Pythagorean triples
//! with a common leg, and checks both against brute-force search.

pub mod arith;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod pell;
pub mod rational;
pub mod star;
pub mod triple;
pub mod verify;

pub use error::{Error, Result};
pub use pell::{PellContext, PellPair};
pub use triple::{Provenance, StarTriple};
