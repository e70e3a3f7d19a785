use std::fmt;

use num_traits::Zero;

use crate::exact::{format_rat, ExactError, QuotElem, Rat, UniPoly};

use super::CoverError;

/// The plane curve `g(y) = f(x)` with `f`, `g` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    f: UniPoly,
    g: UniPoly,
}

impl CurveSpec {
    pub fn new(f: UniPoly, g: UniPoly) -> Result<Self, CoverError> {
        if f.degree().unwrap_or(0) < 1 || g.degree().unwrap_or(0) < 1 {
            return Err(CoverError::DegreeTooSmall);
        }
        if !f.is_monic() || !g.is_monic() {
            return Err(CoverError::NotMonic);
        }
        Ok(CurveSpec { f, g })
    }

    /// `y^2 = x^3 + A x + B`.
    pub fn weierstrass(a: Rat, b: Rat) -> Self {
        let f = UniPoly::new(vec![b, a, Rat::zero(), Rat::from_integer(1.into())]);
        let g = UniPoly::monomial(Rat::from_integer(1.into()), 2);
        CurveSpec { f, g }
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn g(&self) -> &UniPoly {
        &self.g
    }

    /// `deg f`.
    pub fn k(&self) -> usize {
        self.f.degree().unwrap()
    }

    /// `deg g`.
    pub fn d(&self) -> usize {
        self.g.degree().unwrap()
    }

    pub fn swapped(&self) -> CurveSpec {
        CurveSpec {
            f: self.g.clone(),
            g: self.f.clone(),
        }
    }

    /// True for `y^2 = monic cubic`.
    pub fn is_elliptic_shape(&self) -> bool {
        self.g == UniPoly::monomial(Rat::from_integer(1.into()), 2) && self.k() == 3
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.g.display_in("y"), self.f.display_in("x"))
    }
}

/// The curve `y^d = x^k + D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperellipticSpec {
    d: u64,
    k: u64,
    constant: Rat,
}

impl SuperellipticSpec {
    pub fn new(d: u64, k: u64, constant: Rat) -> Result<Self, CoverError> {
        if d < 2 || k < 2 {
            return Err(CoverError::DegreeTooSmall);
        }
        if constant.is_zero() {
            return Err(CoverError::ZeroConstant);
        }
        Ok(SuperellipticSpec { d, k, constant })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The constant `D`.
    pub fn constant(&self) -> &Rat {
        &self.constant
    }
}

impl fmt::Display for SuperellipticSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^{} = x^{} + {}",
            self.d,
            self.k,
            format_rat(&self.constant)
        )
    }
}

/// Either supported curve family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveEquation {
    Plane(CurveSpec),
    Superelliptic(SuperellipticSpec),
}

impl CurveEquation {
    /// `g(y) - f(x)` (resp. `y^d - x^k - D`) evaluated in the quotient ring.
    pub fn residual(&self, x: &QuotElem, y: &QuotElem) -> Result<QuotElem, ExactError> {
        if x.modulus() != y.modulus() {
            return Err(ExactError::ModulusMismatch);
        }
        match self {
            CurveEquation::Plane(c) => y.eval_poly(c.g()).sub(&x.eval_poly(c.f())),
            CurveEquation::Superelliptic(s) => Ok(y
                .pow(s.d as i64)?
                .sub(&x.pow(s.k as i64)?)?
                .add_rat(&-s.constant.clone())),
        }
    }
}

impl fmt::Display for CurveEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveEquation::Plane(c) => c.fmt(f),
            CurveEquation::Superelliptic(s) => s.fmt(f),
        }
    }
}

impl From<CurveSpec> for CurveEquation {
    fn from(c: CurveSpec) -> Self {
        CurveEquation::Plane(c)
    }
}

impl From<SuperellipticSpec> for CurveEquation {
    fn from(s: SuperellipticSpec) -> Self {
        CurveEquation::Superelliptic(s)
    }
}
