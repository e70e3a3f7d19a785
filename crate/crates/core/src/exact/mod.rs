//! Exact arithmetic: rationals, dense univariate and sparse bivariate
//! polynomials, resultants, and the quotient rings `Q[t]/(h)` that model the
//! constructed number fields.
//!
//! Nothing here ever rounds. Every value is immutable once built.

mod bipoly;
mod poly;
mod quotient;
mod rat;
mod resultant;

use std::ops::{Add, Mul, Sub};

use thiserror::Error;

pub use bipoly::BiPoly;
pub use poly::UniPoly;
pub use quotient::{quot_arith, QuotElem, QuotOp};
pub use rat::{
    format_rat, int_pow, int_valuation, is_integer, is_prime, is_q_integral, parse_rat, primes,
    rat, rat_from_int, rat_pow, ratio, rational_sqrt, valuation, Rat, Valuation,
};
pub use resultant::{
    determinant, discriminant, interpolate, resultant, sylvester_matrix, sylvester_resultant,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("resultant of two zero polynomials is undefined")]
    ZeroResultant,
    #[error("polynomial degree too small for this operation")]
    DegreeTooSmall,
    #[error("element is not invertible; the modulus is reducible")]
    NotInvertible,
    #[error("elements live in different quotient rings")]
    ModulusMismatch,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Operation tags for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact ring operation on two polynomials of the same kind.
pub fn poly_arith<'a, P>(op: ArithOp, a: &'a P, b: &'a P) -> P
where
    &'a P: Add<Output = P> + Sub<Output = P> + Mul<Output = P>,
{
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}
