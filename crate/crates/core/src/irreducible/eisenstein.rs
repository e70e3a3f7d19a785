use std::fmt;

use num_traits::Zero;

use crate::exact::{valuation, UniPoly, Valuation};

/// Proof that `f / q^content_valuation` is Eisenstein at `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinCertificate {
    pub prime: u64,
    /// Power of the prime divided out before testing.
    pub content_valuation: u64,
    /// Valuation of the leading coefficient after division; always 0.
    pub leading_valuation: u64,
    pub verified: bool,
}

/// The condition that broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EisensteinFailure {
    NotIntegral,
    DegreeTooSmall,
    LeadingDivisible,
    MiddleNotDivisible { degree: usize },
    ConstantNotDivisible,
    ConstantSquareDivisible,
}

impl fmt::Display for EisensteinFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotIntegral => f.write_str("coefficients are not integers"),
            Self::DegreeTooSmall => f.write_str("degree must be at least 1"),
            Self::LeadingDivisible => f.write_str("leading coefficient divisible by q"),
            Self::MiddleNotDivisible { degree } => {
                write!(f, "coefficient of t^{degree} not divisible by q")
            }
            Self::ConstantNotDivisible => f.write_str("constant term is a unit at q"),
            Self::ConstantSquareDivisible => f.write_str("constant term divisible by q^2"),
        }
    }
}

/// Divides out the common power of `q` and tests the Eisenstein conditions.
pub fn eisenstein_check(f: &UniPoly, q: u64) -> Result<EisensteinCertificate, EisensteinFailure> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or(EisensteinFailure::DegreeTooSmall)?;
    if !f.is_integral() {
        return Err(EisensteinFailure::NotIntegral);
    }
    let vals: Vec<Valuation> = f.coeffs().iter().map(|c| valuation(c, q)).collect();
    // f is nonzero, so the minimum is finite
    let content = vals.iter().min().unwrap().finite().unwrap();
    let shifted = |i: usize| match vals[i] {
        Valuation::Finite(v) => Valuation::Finite(v - content),
        Valuation::Infinite => Valuation::Infinite,
    };
    if shifted(n) != Valuation::Finite(0) {
        return Err(EisensteinFailure::LeadingDivisible);
    }
    for i in 1..n {
        if !shifted(i).at_least(1) {
            return Err(EisensteinFailure::MiddleNotDivisible { degree: i });
        }
    }
    match shifted(0) {
        Valuation::Finite(1) => {}
        Valuation::Finite(0) => return Err(EisensteinFailure::ConstantNotDivisible),
        _ => return Err(EisensteinFailure::ConstantSquareDivisible),
    }
    debug_assert!(!f.coeff(0).is_zero());
    Ok(EisensteinCertificate {
        prime: q,
        content_valuation: content as u64,
        leading_valuation: 0,
        verified: true,
    })
}
