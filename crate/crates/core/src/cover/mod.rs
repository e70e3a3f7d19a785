//! Covers of `g(y) = f(x)` and `y^d = x^k + D` whose specializations define
//! degree-`p` fields carrying points of the curve.
//!
//! A plan fixes the exponents, [`build_cover`] (or [`super_build_cover`])
//! produces `h(u, t)`, and a specialization `h(u0, t)` certified irreducible
//! yields the field `Q[t]/(h(u0, t))` together with a lifted point.

mod coprime;
mod curve;
mod plan;
mod record;
mod small;
mod superelliptic;

use thiserror::Error;

use crate::exact::ExactError;
use crate::irreducible::IrreducibleError;

pub use coprime::{
    build_cover, lift_point, specialize, weierstrass_cover, weierstrass_polynomial, CoprimeCover,
};
pub use curve::{CurveEquation, CurveSpec, SuperellipticSpec};
pub use plan::{
    check_admissible, min_prime_bound, normalize_model, orient_and_bezout, represent_prime,
    CoverPlan, Orientation,
};
pub use record::{Construction, ExtensionRecord, LPoint};
pub use small::small_prime_paths;
pub use superelliptic::{
    super_build_cover, super_lift_point, super_plan, SuperCover, SuperCoverPlan,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("degrees {d} and {k} are not coprime")]
    NotCoprime { d: u64, k: u64 },
    #[error("curve degrees are too small")]
    DegreeTooSmall,
    #[error("f and g must be monic")]
    NotMonic,
    #[error("the constant D must be nonzero")]
    ZeroConstant,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {p} is below the bound N(C) = {bound}")]
    BelowBound { p: u64, bound: u64 },
    #[error("no representation of {p} for degrees ({d}, {k})")]
    NoRepresentation { p: u64, d: u64, k: u64 },
    #[error("coefficients have denominators prime to {q}")]
    NotQIntegral { q: u64 },
    #[error("inconsistent plan: {0}")]
    InconsistentPlan(String),
    #[error("q = {q} shares a factor with n = {n}")]
    SharesFactor { q: u64, n: u64 },
    #[error("D must be a unit at q = {q}")]
    ConstantNotUnit { q: u64 },
    #[error("small-prime paths need y^2 = monic cubic")]
    NotEllipticShape,
    #[error("small-prime path is only defined for p = 2 or 3, got {0}")]
    UnsupportedSmallPrime(u64),
    #[error("defining polynomial is not certified irreducible")]
    NotIrreducible,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Irreducible(#[from] IrreducibleError),
}

impl CoverError {
    /// True for the errors that mean "this prime cannot be represented".
    pub fn is_representation_failure(&self) -> bool {
        matches!(
            self,
            CoverError::BelowBound { .. } | CoverError::NoRepresentation { .. }
        )
    }
}
