use std::sync::Arc;

use crate::exact::{QuotElem, Rat, UniPoly};
use crate::irreducible::{factor_over_rationals, FactorConfig};

use super::curve::{CurveEquation, CurveSpec};
use super::record::{Construction, ExtensionRecord, LPoint};
use super::CoverError;

/// Quadratic and cubic points on `y^2 = f(x)`.
///
/// `p = 2` uses `t^2 - f(u0)` with the point `(u0, α)`; `p = 3` uses
/// `f(t) - u0^2` with the point `(α, u0)`. A reducible defining polynomial
/// yields a record without a point, which callers report as skipped.
pub fn small_prime_paths(
    curve: &CurveSpec,
    p: u64,
    u0: &Rat,
    cfg: &FactorConfig,
) -> Result<ExtensionRecord, CoverError> {
    if !curve.is_elliptic_shape() {
        return Err(CoverError::NotEllipticShape);
    }
    let one = Rat::from_integer(1.into());
    let defining_poly = match p {
        2 => UniPoly::new(vec![-curve.f().eval(u0), Rat::from_integer(0.into()), one]),
        3 => curve.f() - &UniPoly::constant(u0 * u0),
        _ => return Err(CoverError::UnsupportedSmallPrime(p)),
    };
    let verdict = factor_over_rationals(&defining_poly, cfg)?;
    let point = if verdict.is_irreducible() {
        let modulus = Arc::new(defining_poly.clone());
        let alpha = QuotElem::generator(modulus.clone())?;
        let fixed = QuotElem::constant(modulus, u0.clone())?;
        Some(if p == 2 {
            LPoint { x: fixed, y: alpha }
        } else {
            LPoint { x: alpha, y: fixed }
        })
    } else {
        None
    };
    Ok(ExtensionRecord {
        construction: Construction::SmallPrime { p },
        curve: CurveEquation::Plane(curve.clone()),
        u0: u0.clone(),
        defining_poly,
        verdict,
        point,
        checks: None,
    })
}
