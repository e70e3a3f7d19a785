use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::exact::{is_prime, rat, valuation, BiPoly, QuotElem, Rat, UniPoly, Valuation};
use crate::irreducible::{factor_over_rationals, FactorConfig, Verdict};

use super::curve::{CurveEquation, SuperellipticSpec};
use super::plan::qpow;
use super::record::{Construction, ExtensionRecord, LPoint};
use super::CoverError;

/// Exponents of the cover of `y^d = x^k + D` through `Y^n = X^n + q^{2n} D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperCoverPlan {
    pub q: u64,
    /// `lcm(d, k)`.
    pub n_lcm: u64,
    pub s: u64,
    pub r: u64,
    pub p: u64,
    /// `q^{2n} D`.
    pub d_scaled: Rat,
    /// `2n / k`.
    pub c1: u64,
    /// `2n / d`.
    pub c2: u64,
    pub d: u64,
    pub k: u64,
}

impl SuperCoverPlan {
    /// `max((n-1)(n-2), n+1)`.
    pub fn bound(&self) -> u64 {
        super_bound(self.n_lcm)
    }

    pub fn validate(&self) -> Result<(), CoverError> {
        let bad = |what: &str| Err(CoverError::InconsistentPlan(what.to_string()));
        let n = self.n_lcm;
        if n != self.d.lcm(&self.k) || n < 2 {
            return bad("n != lcm(d, k)");
        }
        if self.p != (n - 1) * self.s + self.r || self.r < 1 || self.s <= self.r {
            return bad("p != (n-1)s + r with s > r >= 1");
        }
        if self.c1 * self.k != 2 * n || self.c2 * self.d != 2 * n {
            return bad("scaling exponents");
        }
        if valuation(&self.d_scaled, self.q) != Valuation::Finite(2 * n as i64) {
            return bad("v_q(D_scaled) != 2n");
        }
        Ok(())
    }
}

fn super_bound(n: u64) -> u64 {
    ((n - 1) * (n - 2)).max(n + 1)
}

/// Chooses `r ≡ p (mod n-1)` in `1..n-1` and `s = (p - r)/(n - 1)`.
pub fn super_plan(spec: &SuperellipticSpec, q: u64, p: u64) -> Result<SuperCoverPlan, CoverError> {
    for m in [q, p] {
        if !is_prime(m) {
            return Err(CoverError::NotPrime(m));
        }
    }
    let (d, k) = (spec.d(), spec.k());
    let n = d.lcm(&k);
    if n % q == 0 {
        return Err(CoverError::SharesFactor { q, n });
    }
    if valuation(spec.constant(), q) != Valuation::Finite(0) {
        return Err(CoverError::ConstantNotUnit { q });
    }
    let bound = super_bound(n);
    if p < bound {
        return Err(CoverError::BelowBound { p, bound });
    }
    let r = match p % (n - 1) {
        0 => n - 1,
        r => r,
    };
    let s = (p - r) / (n - 1);
    if s <= r {
        return Err(CoverError::NoRepresentation { p, d, k });
    }
    let plan = SuperCoverPlan {
        q,
        n_lcm: n,
        s,
        r,
        p,
        d_scaled: spec.constant() * qpow(q, 2 * n),
        c1: 2 * n / k,
        c2: 2 * n / d,
        d,
        k,
    };
    plan.validate()?;
    Ok(plan)
}

fn bi_pow(base: &BiPoly, e: u64) -> BiPoly {
    let mut acc = BiPoly::term(rat(1), 0, 0);
    for _ in 0..e {
        acc = &acc * base;
    }
    acc
}

/// `h(u, t) = Σ_{j=1}^{n} C(n, j) w^j x^{n-j} - q^{2n} D` with
/// `x = q t^s + u`, `w = q^n t^r`.
pub fn super_build_cover(plan: &SuperCoverPlan) -> Result<BiPoly, CoverError> {
    plan.validate()?;
    let n = plan.n_lcm;
    let x = BiPoly::from_terms([(rat(plan.q as i64), 0, plan.s as usize), (rat(1), 1, 0)]);
    let w = BiPoly::term(qpow(plan.q, n), 0, plan.r as usize);
    let mut h = BiPoly::term(-plan.d_scaled.clone(), 0, 0);
    let mut binom = BigInt::from(1);
    for j in 1..=n {
        binom = binom * BigInt::from(n - j + 1) / BigInt::from(j);
        let term = &(&bi_pow(&w, j) * &bi_pow(&x, n - j))
            * &BiPoly::term(Rat::from_integer(binom.clone()), 0, 0);
        h = &h + &term;
    }
    Ok(h)
}

/// Lifts `α` through `X = q α^s + u0`, `Y = X + q^n α^r`, then
/// `(x, y) = (X^{n/k} / q^{c1}, Y^{n/d} / q^{c2})`.
pub fn super_lift_point(
    plan: &SuperCoverPlan,
    u0: &Rat,
    defining_poly: &UniPoly,
    verdict: &Verdict,
) -> Result<LPoint, CoverError> {
    if !verdict.is_irreducible() || defining_poly.degree() != Some(plan.p as usize) {
        return Err(CoverError::NotIrreducible);
    }
    let alpha = QuotElem::generator(Arc::new(defining_poly.clone()))?;
    let n = plan.n_lcm;
    let big_x = alpha
        .pow(plan.s as i64)?
        .scale(&rat(plan.q as i64))
        .add_rat(u0);
    let big_y = big_x.add(&alpha.pow(plan.r as i64)?.scale(&qpow(plan.q, n)))?;
    let x = big_x
        .pow((n / plan.k) as i64)?
        .scale(&qpow(plan.q, plan.c1).recip());
    let y = big_y
        .pow((n / plan.d) as i64)?
        .scale(&qpow(plan.q, plan.c2).recip());
    Ok(LPoint { x, y })
}

/// A complete superelliptic construction for one `(spec, q, p)`.
#[derive(Clone, Debug)]
pub struct SuperCover {
    pub spec: SuperellipticSpec,
    pub plan: SuperCoverPlan,
    pub h: BiPoly,
}

impl SuperCover {
    pub fn new(spec: &SuperellipticSpec, q: u64, p: u64) -> Result<Self, CoverError> {
        let plan = super_plan(spec, q, p)?;
        let h = super_build_cover(&plan)?;
        Ok(SuperCover {
            spec: spec.clone(),
            plan,
            h,
        })
    }

    /// `h(0, t) / q^{2n-1}`.
    pub fn origin_polynomial(&self) -> UniPoly {
        self.h
            .specialize(&Rat::zero())
            .scale(&qpow(self.plan.q, 2 * self.plan.n_lcm - 1).recip())
    }

    pub fn record(&self, u0: &Rat, cfg: &FactorConfig) -> Result<ExtensionRecord, CoverError> {
        let defining_poly = self.h.specialize(u0);
        let verdict = factor_over_rationals(&defining_poly, cfg)?;
        let point = if verdict.is_irreducible() {
            Some(super_lift_point(&self.plan, u0, &defining_poly, &verdict)?)
        } else {
            None
        };
        Ok(ExtensionRecord {
            construction: Construction::Superelliptic(self.plan.clone()),
            curve: CurveEquation::Superelliptic(self.spec.clone()),
            u0: u0.clone(),
            defining_poly,
            verdict,
            point,
            checks: None,
        })
    }
}
