//! Exponent bookkeeping for the coprime-degree cover: orientation, the
//! Bézout pair `(a, b)`, the prime representation `p = mu*d + nu*k`, and the
//! rescaling that makes the model admissible at `q`.

use num_integer::Integer;
use num_traits::Zero;

use crate::exact::{is_q_integral, rat, rat_pow, valuation, Rat, UniPoly};

use super::curve::CurveSpec;
use super::CoverError;

/// All exponents of one coprime-degree construction.
///
/// `d` and `k` are the degrees of `g` and `f` after orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPlan {
    pub q: u64,
    pub a: u64,
    pub b: u64,
    /// Exponent of `t` in the `y` coordinate of the covering map.
    pub mu: u64,
    /// Exponent of `1/t` in the `x` coordinate of the covering map.
    pub nu: u64,
    pub p: u64,
    pub bound_n: u64,
    /// `x` and `y` were interchanged to orient the curve.
    pub swapped: bool,
    /// Normalization exponent `e`: `(x, y) = (X / q^{de}, Y / q^{ke})`.
    pub scale_e: u32,
    pub d: u64,
    pub k: u64,
}

impl CoverPlan {
    /// Checks `bk - ad = 1`, `p = mu*d + nu*k`, `1 <= nu <= d-1`, `mu >= 1`
    /// and `p >= k(d-1)+1`.
    pub fn validate(&self) -> Result<(), CoverError> {
        let bad = |what: &str| Err(CoverError::InconsistentPlan(what.to_string()));
        if self.b * self.k != self.a * self.d + 1 {
            return bad("b*k - a*d != 1");
        }
        if self.p != self.mu * self.d + self.nu * self.k {
            return bad("p != mu*d + nu*k");
        }
        if self.nu < 1 || self.nu >= self.d || self.mu < 1 {
            return bad("exponent range");
        }
        if self.bound_n != min_prime_bound(self.d, self.k) || self.p < self.bound_n {
            return bad("p below N(C)");
        }
        Ok(())
    }
}

/// Oriented curve with its Bézout pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub curve: CurveSpec,
    pub a: u64,
    pub b: u64,
    pub swapped: bool,
}

/// Finds the smallest positive `a, b` with `b*k - a*d = 1`.
///
/// The roles of `x` and `y` are interchanged only when `g` is linear, since
/// the prime representation needs `deg g >= 2`.
pub fn orient_and_bezout(curve: &CurveSpec) -> Result<Orientation, CoverError> {
    let (d, k) = (curve.d() as u64, curve.k() as u64);
    if d.gcd(&k) != 1 {
        return Err(CoverError::NotCoprime { d, k });
    }
    if d < 2 && k < 2 {
        return Err(CoverError::DegreeTooSmall);
    }
    let swapped = d == 1;
    let oriented = if swapped {
        curve.swapped()
    } else {
        curve.clone()
    };
    let (d, k) = (oriented.d() as u64, oriented.k() as u64);
    let b0 = (1..=d)
        .find(|b| (b * k) % d == 1 % d)
        .expect("gcd(d, k) = 1");
    let (mut a, mut b) = ((b0 * k - 1) / d, b0);
    if a == 0 {
        a += k;
        b += d;
    }
    Ok(Orientation {
        curve: oriented,
        a,
        b,
        swapped,
    })
}

/// `N(C) = k(d-1) + 1`.
pub fn min_prime_bound(d: u64, k: u64) -> u64 {
    k * (d - 1) + 1
}

/// The unique `(mu, nu)` with `p = mu*d + nu*k`, `1 <= nu <= d-1`, `mu >= 1`.
pub fn represent_prime(p: u64, d: u64, k: u64) -> Result<(u64, u64), CoverError> {
    let none = || CoverError::NoRepresentation { p, d, k };
    if d < 2 {
        return Err(none());
    }
    let nu = (1..d).find(|nu| (nu * k) % d == p % d).ok_or_else(none)?;
    let rest = p.checked_sub(nu * k).ok_or_else(none)?;
    let mu = rest / d;
    if mu < 1 {
        return Err(none());
    }
    Ok((mu, nu))
}

fn non_leading_ok(poly: &UniPoly, q: u64, need: i64) -> bool {
    let n = poly.degree().unwrap_or(0);
    poly.coeffs()[..n]
        .iter()
        .all(|c| c.is_zero() || (c.denom() == &1.into() && valuation(c, q).at_least(need)))
}

/// True iff every non-leading coefficient of `f` and `g` is an integer
/// divisible by `q^{da+1}`.
pub fn check_admissible(curve: &CurveSpec, q: u64, a: u64) -> bool {
    let need = (curve.d() as u64 * a + 1) as i64;
    non_leading_ok(curve.f(), q, need) && non_leading_ok(curve.g(), q, need)
}

/// `q^{w e i}` scaling of the coefficient of degree `n - i`.
fn rescale(poly: &UniPoly, q: u64, weight: u64, e: u32) -> UniPoly {
    let n = poly.degree().unwrap();
    let qr = rat(q as i64);
    UniPoly::new(
        poly.coeffs()
            .iter()
            .enumerate()
            .map(|(deg, c)| c * rat_pow(&qr, (weight * e as u64 * (n - deg) as u64) as i64))
            .collect(),
    )
}

/// Rescales to `F(X) = q^{dke} f(X / q^{de})`, `G(Y) = q^{dke} g(Y / q^{ke})`
/// with the least `e` making the model admissible at `(q, a)`.
///
/// Points map back by `(x, y) = (X / q^{de}, Y / q^{ke})`. Coefficients with a
/// denominator prime other than `q` can never become admissible this way and
/// are rejected.
pub fn normalize_model(curve: &CurveSpec, q: u64, a: u64) -> Result<(CurveSpec, u32), CoverError> {
    let all = curve.f().coeffs().iter().chain(curve.g().coeffs());
    if !all.clone().all(|c| is_q_integral(c, q)) {
        return Err(CoverError::NotQIntegral { q });
    }
    let (d, k) = (curve.d() as u64, curve.k() as u64);
    let mut e = 0u32;
    loop {
        let model = CurveSpec::new(rescale(curve.f(), q, d, e), rescale(curve.g(), q, k, e))?;
        if check_admissible(&model, q, a) {
            return Ok((model, e));
        }
        e += 1;
    }
}

/// `q^e` as a rational.
pub(crate) fn qpow(q: u64, e: u64) -> Rat {
    rat_pow(&rat(q as i64), e as i64)
}
