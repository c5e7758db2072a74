//! Exact scalar expressions: rational functions in chart coordinates with
//! Gaussian-rational coefficients.
//!
//! [`Scalar`] is the single scalar type underlying the whole crate. A scalar
//! is a quotient of two multivariate polynomials over ℚ(i). Fractions are
//! not kept GCD-reduced; equality and the zero test work by
//! cross-multiplication, which is sound and complete for rational functions.

mod coeff;
pub(crate) mod parse;
mod poly;
mod scalar;

pub use coeff::{cnum_from_int, cnum_from_ratio, cnum_i, cnum_one, cnum_zero, CNum};
pub use parse::parse_scalar;
pub use poly::{Monomial, Poly};
pub use scalar::Scalar;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A chart coordinate, identified by name. Comparison, ordering and hashing
/// all go through the name; the name `i` is reserved for the imaginary unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coord(Arc<str>);

impl Coord {
    pub fn new(name: &str) -> Self {
        Coord(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Errors from scalar construction, parsing, arithmetic and evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at byte {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("no value assigned for coordinate `{0}`")]
    UnassignedCoord(String),
}
