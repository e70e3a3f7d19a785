use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact::{is_prime, rat, BiPoly, QuotElem, Rat, UniPoly};
use crate::irreducible::{factor_over_rationals, FactorConfig, Verdict};

use super::curve::{CurveEquation, CurveSpec};
use super::plan::{
    min_prime_bound, normalize_model, orient_and_bezout, qpow, represent_prime, CoverPlan,
};
use super::record::{Construction, ExtensionRecord, LPoint};
use super::CoverError;

/// `h(u, t) = g(q^a t^mu) t^{k nu} - Σ_i T_i(f)(u) q^{ib} t^{nu(k-i)}` with
/// `T_i(f) = f^{(i)} / i!`.
///
/// `curve` is the oriented, normalized model the plan was made for.
pub fn build_cover(curve: &CurveSpec, plan: &CoverPlan) -> Result<BiPoly, CoverError> {
    plan.validate()?;
    if curve.d() as u64 != plan.d || curve.k() as u64 != plan.k {
        return Err(CoverError::InconsistentPlan(
            "curve degrees differ from plan".into(),
        ));
    }
    let (q, k, nu, mu) = (plan.q, plan.k as usize, plan.nu as usize, plan.mu as usize);
    let mut h = BiPoly::zero();
    for (j, c) in curve.g().coeffs().iter().enumerate() {
        if !c.is_zero() {
            h.add_term(c * qpow(q, plan.a * j as u64), 0, mu * j + k * nu);
        }
    }
    for i in 0..=k {
        let taylor = curve.f().taylor_div_coeff(i);
        let scale = qpow(q, plan.b * i as u64);
        for (deg_u, c) in taylor.coeffs().iter().enumerate() {
            if !c.is_zero() {
                h.add_term(-(c * &scale), deg_u, nu * (k - i));
            }
        }
    }
    Ok(h)
}

/// `h(u0, t)`.
pub fn specialize(h: &BiPoly, u0: &Rat) -> UniPoly {
    h.specialize(u0)
}

/// The elliptic special case `q^2 t^p - (u^3+Au+B) t^3 - (3u^2+A) q t^2 - 3 q^2 u t - q^3`.
pub fn weierstrass_cover(a: &Rat, b: &Rat, q: u64, p: u64) -> BiPoly {
    let qr = rat(q as i64);
    let mut h = BiPoly::zero();
    h.add_term(&qr * &qr, 0, p as usize);
    h.add_term(-Rat::one(), 3, 3);
    h.add_term(-a.clone(), 1, 3);
    h.add_term(-b.clone(), 0, 3);
    h.add_term(rat(-3) * &qr, 2, 2);
    h.add_term(-(a * &qr), 0, 2);
    h.add_term(rat(-3) * &qr * &qr, 1, 1);
    h.add_term(-(&qr * &qr * &qr), 0, 0);
    h
}

/// [`weierstrass_cover`] specialized at `u0`.
pub fn weierstrass_polynomial(a: &Rat, b: &Rat, q: u64, p: u64, u0: &Rat) -> UniPoly {
    weierstrass_cover(a, b, q, p).specialize(u0)
}

/// Lifts the class `α` of `t` to `(X, Y) = (u0 + q^b α^{-nu}, q^a α^mu)` and
/// maps it back to the original curve.
pub fn lift_point(
    plan: &CoverPlan,
    u0: &Rat,
    defining_poly: &UniPoly,
    verdict: &Verdict,
) -> Result<LPoint, CoverError> {
    if !verdict.is_irreducible() || defining_poly.degree() != Some(plan.p as usize) {
        return Err(CoverError::NotIrreducible);
    }
    let modulus = Arc::new(defining_poly.clone());
    let alpha = QuotElem::generator(modulus)?;
    let big_x = alpha
        .pow(-(plan.nu as i64))?
        .scale(&qpow(plan.q, plan.b))
        .add_rat(u0);
    let big_y = alpha.pow(plan.mu as i64)?.scale(&qpow(plan.q, plan.a));
    let e = plan.scale_e as u64;
    let x = big_x.scale(&qpow(plan.q, plan.d * e).recip());
    let y = big_y.scale(&qpow(plan.q, plan.k * e).recip());
    Ok(if plan.swapped {
        LPoint { x: y, y: x }
    } else {
        LPoint { x, y }
    })
}

/// A complete coprime-degree construction for one `(curve, q, p)`.
#[derive(Clone, Debug)]
pub struct CoprimeCover {
    pub original: CurveSpec,
    /// Oriented and normalized model.
    pub model: CurveSpec,
    pub plan: CoverPlan,
    pub h: BiPoly,
}

impl CoprimeCover {
    pub fn new(curve: &CurveSpec, q: u64, p: u64) -> Result<Self, CoverError> {
        for n in [q, p] {
            if !is_prime(n) {
                return Err(CoverError::NotPrime(n));
            }
        }
        let o = orient_and_bezout(curve)?;
        let (d, k) = (o.curve.d() as u64, o.curve.k() as u64);
        let bound = min_prime_bound(d, k);
        if p < bound {
            return Err(CoverError::BelowBound { p, bound });
        }
        let (mu, nu) = represent_prime(p, d, k)?;
        let (model, scale_e) = normalize_model(&o.curve, q, o.a)?;
        let plan = CoverPlan {
            q,
            a: o.a,
            b: o.b,
            mu,
            nu,
            p,
            bound_n: bound,
            swapped: o.swapped,
            scale_e,
            d,
            k,
        };
        let h = build_cover(&model, &plan)?;
        Ok(CoprimeCover {
            original: curve.clone(),
            model,
            plan,
            h,
        })
    }

    /// `h(0, t) / q^{da}`, Eisenstein at `q` for an admissible model.
    pub fn origin_polynomial(&self) -> UniPoly {
        self.h
            .specialize(&Rat::zero())
            .scale(&qpow(self.plan.q, self.plan.d * self.plan.a).recip())
    }

    /// Specializes at `u0`, certifies, and lifts when irreducible.
    pub fn record(&self, u0: &Rat, cfg: &FactorConfig) -> Result<ExtensionRecord, CoverError> {
        let defining_poly = self.h.specialize(u0);
        let verdict = factor_over_rationals(&defining_poly, cfg)?;
        let point = if verdict.is_irreducible() {
            Some(lift_point(&self.plan, u0, &defining_poly, &verdict)?)
        } else {
            None
        };
        Ok(ExtensionRecord {
            construction: Construction::Coprime(self.plan.clone()),
            curve: CurveEquation::Plane(self.original.clone()),
            u0: u0.clone(),
            defining_poly,
            verdict,
            point,
            checks: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_pow, ratio};
    use crate::irreducible::eisenstein_check;

    fn elliptic(a: i64, b: i64) -> CurveSpec {
        CurveSpec::weierstrass(rat(a), rat(b))
    }

    #[test]
    fn elliptic_cover_expansion() {
        let cover = CoprimeCover::new(&elliptic(8, 8), 2, 5).unwrap();
        let expected = BiPoly::from_terms([
            (rat(4), 0, 5),
            (rat(-1), 3, 3),
            (rat(-8), 1, 3),
            (rat(-8), 0, 3),
            (rat(-6), 2, 2),
            (rat(-16), 0, 2),
            (rat(-12), 1, 1),
            (rat(-8), 0, 0),
        ]);
        assert_eq!(cover.h, expected);
        assert_eq!(cover.h.leading_t_coeff(), UniPoly::from_ints(&[4]));
        assert_eq!(
            specialize(&cover.h, &rat(0)),
            UniPoly::from_ints(&[-8, 0, -16, -8, 0, 4])
        );
        assert_eq!(
            specialize(&cover.h, &rat(1)),
            UniPoly::from_ints(&[-8, -12, -22, -17, 0, 4])
        );
        assert_eq!(cover.h.eval(&rat(0), &rat(1)), rat(-28));
    }

    #[test]
    fn specialize_to_zero() {
        assert!(specialize(&BiPoly::term(rat(1), 1, 1), &rat(0)).is_zero());
    }

    #[test]
    fn origin_is_eisenstein() {
        let cover = CoprimeCover::new(&elliptic(8, 8), 2, 7).unwrap();
        let origin = cover.origin_polynomial();
        assert_eq!(origin.coeff(0), rat(-2));
        assert!(eisenstein_check(&origin, 2).is_ok());
    }

    #[test]
    fn weierstrass_examples() {
        assert_eq!(
            weierstrass_polynomial(&rat(0), &rat(-2), 2, 5, &rat(0)),
            UniPoly::from_ints(&[-8, 0, 0, 2, 0, 4])
        );
        assert_eq!(
            weierstrass_polynomial(&rat(0), &rat(0), 2, 5, &rat(0)),
            UniPoly::from_ints(&[-8, 0, 0, 0, 0, 4])
        );
        let cover = CoprimeCover::new(&elliptic(8, 8), 2, 11).unwrap();
        assert_eq!(cover.h, weierstrass_cover(&rat(8), &rat(8), 2, 11));
    }

    #[test]
    fn cover_identity_at_points() {
        let cover = CoprimeCover::new(&elliptic(8, 8), 2, 7).unwrap();
        let plan = &cover.plan;
        for (u0, t0) in [
            (ratio(1, 2), ratio(3, 5)),
            (rat(-4), ratio(-7, 3)),
            (rat(0), rat(1)),
        ] {
            let x = &u0 + qpow(2, plan.b) * rat_pow(&t0, -(plan.nu as i64));
            let y = qpow(2, plan.a) * rat_pow(&t0, plan.mu as i64);
            let rhs = rat_pow(&t0, (plan.nu * plan.k) as i64)
                * (cover.model.g().eval(&y) - cover.model.f().eval(&x));
            assert_eq!(cover.h.eval(&u0, &t0), rhs);
        }
    }

    #[test]
    fn lifted_point_lies_on_curve() {
        let curve = elliptic(8, 8);
        let cover = CoprimeCover::new(&curve, 2, 5).unwrap();
        let rec = cover.record(&rat(1), &FactorConfig::default()).unwrap();
        assert!(rec.verdict.is_irreducible());
        let pt = rec.point.unwrap();
        let res = CurveEquation::Plane(curve).residual(&pt.x, &pt.y).unwrap();
        assert!(res.is_zero());
        assert_eq!(rec.defining_poly.coeff(0), rat(-8));
    }

    #[test]
    fn normalized_and_swapped_lifts() {
        // needs e = 1 at q = 2
        let curve = elliptic(1, 1);
        let cover = CoprimeCover::new(&curve, 2, 5).unwrap();
        assert_eq!(cover.plan.scale_e, 1);
        for u in 1..4 {
            let rec = cover.record(&rat(u), &FactorConfig::default()).unwrap();
            if let Some(pt) = rec.point {
                assert!(CurveEquation::Plane(curve.clone())
                    .residual(&pt.x, &pt.y)
                    .unwrap()
                    .is_zero());
            }
        }
        // y = x^3 + 2 has a linear g, so the roles are swapped
        let curve = CurveSpec::new(
            UniPoly::from_ints(&[2, 0, 0, 1]),
            UniPoly::from_ints(&[0, 1]),
        )
        .unwrap();
        let cover = CoprimeCover::new(&curve, 3, 5).unwrap();
        assert!(cover.plan.swapped);
        let rec = cover.record(&rat(1), &FactorConfig::default()).unwrap();
        let pt = rec.point.expect("irreducible specialization");
        assert!(CurveEquation::Plane(curve)
            .residual(&pt.x, &pt.y)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn refuses_reducible_and_small_primes() {
        let cover = CoprimeCover::new(&elliptic(8, 8), 2, 5).unwrap();
        let poly = UniPoly::from_ints(&[-1, 0, 1]);
        let verdict = factor_over_rationals(&poly, &FactorConfig::default()).unwrap();
        assert_eq!(
            lift_point(&cover.plan, &rat(0), &poly, &verdict),
            Err(CoverError::NotIrreducible)
        );
        assert_eq!(
            CoprimeCover::new(&elliptic(8, 8), 2, 3).unwrap_err(),
            CoverError::BelowBound { p: 3, bound: 4 }
        );
        assert_eq!(
            CoprimeCover::new(&elliptic(8, 8), 4, 5).unwrap_err(),
            CoverError::NotPrime(4)
        );
    }
}
