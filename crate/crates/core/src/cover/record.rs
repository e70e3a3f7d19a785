use std::collections::BTreeSet;

use num_integer::Integer;

use crate::exact::{primes, QuotElem, Rat, UniPoly};
use crate::irreducible::Verdict;
use crate::witness::VerificationReport;

use super::curve::CurveEquation;
use super::plan::CoverPlan;
use super::superelliptic::SuperCoverPlan;

/// Which construction produced a record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Coprime(CoverPlan),
    Superelliptic(SuperCoverPlan),
    /// `p = 2` (`t^2 - f(u0)`) or `p = 3` (`f(t) - u0^2`).
    SmallPrime {
        p: u64,
    },
}

impl Construction {
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::Coprime(_) => "thm1",
            Construction::Superelliptic(_) => "thm4",
            Construction::SmallPrime { p: 2 } => "p2",
            Construction::SmallPrime { .. } => "p3",
        }
    }

    pub fn p(&self) -> u64 {
        match self {
            Construction::Coprime(plan) => plan.p,
            Construction::Superelliptic(plan) => plan.p,
            Construction::SmallPrime { p } => *p,
        }
    }

    pub fn q(&self) -> Option<u64> {
        match self {
            Construction::Coprime(plan) => Some(plan.q),
            Construction::Superelliptic(plan) => Some(plan.q),
            Construction::SmallPrime { .. } => None,
        }
    }
}

/// A point with coordinates in `Q[t]/(defining_poly)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPoint {
    pub x: QuotElem,
    pub y: QuotElem,
}

/// One specialization `u0` of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRecord {
    pub construction: Construction,
    /// The original (unnormalized, unswapped) curve.
    pub curve: CurveEquation,
    pub u0: Rat,
    pub defining_poly: UniPoly,
    pub verdict: Verdict,
    /// Present exactly when the verdict is irreducible.
    pub point: Option<LPoint>,
    pub checks: Option<VerificationReport>,
}

impl ExtensionRecord {
    /// Irreducible, lifted, and (once checked) passing every witness check.
    pub fn is_accepted(&self) -> bool {
        self.verdict.is_irreducible()
            && self.point.is_some()
            && self.checks.as_ref().is_none_or(|c| c.passed())
    }

    /// The primes allowed in coordinate denominators.
    ///
    /// Coprime-cover points are integral away from `q`. The superelliptic cover
    /// has leading coefficient `n q^{2n-1}`, so primes of `n` are admitted
    /// too. Small-prime points are integral away from the denominators of
    /// `u0` and the curve.
    pub fn s_primes(&self) -> Vec<u64> {
        let mut set = BTreeSet::new();
        match &self.construction {
            Construction::Coprime(plan) => {
                set.insert(plan.q);
            }
            Construction::Superelliptic(plan) => {
                set.insert(plan.q);
                set.extend(prime_divisors(plan.n_lcm));
            }
            Construction::SmallPrime { .. } => {
                let mut dens = vec![self.u0.denom().clone()];
                if let CurveEquation::Plane(c) = &self.curve {
                    dens.extend(c.f().coeffs().iter().map(|c| c.denom().clone()));
                }
                let lcm = dens
                    .iter()
                    .fold(num_bigint::BigInt::from(1), |acc, d| acc.lcm(d));
                for l in primes().take_while(|&l| num_bigint::BigInt::from(l) <= lcm) {
                    if (&lcm % l) == 0.into() {
                        set.insert(l);
                    }
                }
            }
        }
        set.into_iter().collect()
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut l = 2;
    while l * l <= n {
        if n.is_multiple_of(l) {
            out.push(l);
            while n.is_multiple_of(l) {
                n /= l;
            }
        }
        l += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
