//! Exact arithmetic kernel: rationals, parameter polynomials, Puiseux
//! polynomials and cyclotomic numbers.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so values can be shared and sent between tasks freely.

mod cyclotomic;
mod parampoly;
mod puiseux;
pub mod symbol;

pub use cyclotomic::{phi, CycloPoly, CyclotomicNumber};
pub use parampoly::{Monomial, ParamPoly};
pub use puiseux::PuiseuxPoly;
pub use symbol::{sym, Sym};

use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exact fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// `param_eval` was handed an environment missing a symbol of the
    /// polynomial being evaluated.
    #[error("no value assigned to symbol `{0}`")]
    MissingSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    /// Cyclotomic orders other than 2, 3, 4, 6 are out of scope.
    #[error("unsupported cyclotomic order {0}")]
    UnsupportedOrder(u8),
    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u8, u8),
}
