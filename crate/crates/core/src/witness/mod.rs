//! Independent checks on constructed records: the point lies on the curve,
//! it is not defined over the rationals, its coordinates are S-integers,
//! and fingerprints that separate non-isomorphic fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cover::{CurveEquation, ExtensionRecord};
use crate::exact::{
    discriminant, primes, valuation, ExactError, QuotElem, Rat, UniPoly, Valuation,
};
use crate::irreducible::factor_mod_prime;

/// Number of primes in the default fingerprint list.
pub const DEFAULT_FINGERPRINT_PRIMES: usize = 12;

/// Outcome of all witness checks on one record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub on_curve: bool,
    pub strictly_l: bool,
    pub s_integral: bool,
    pub fingerprint: FieldFingerprint,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.on_curve && self.strictly_l && self.s_integral
    }

    /// Name of the first failing check.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.on_curve, "on_curve"),
            (self.strictly_l, "strictly_l"),
            (self.s_integral, "s_integral"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Invariants of `Q[t]/(f)` read off from reductions of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldFingerprint {
    /// Ascending factor-degree multiset mod each prime; `None` when the prime
    /// divides the leading coefficient or the discriminant.
    pub patterns: Vec<(u64, Option<Vec<usize>>)>,
    /// Valuation of the discriminant of the primitive integer model.
    pub disc_valuations: Vec<(u64, Valuation)>,
}

impl FieldFingerprint {
    /// Some prime used by both fingerprints sees different factor degrees.
    pub fn separates(&self, other: &FieldFingerprint) -> Option<u64> {
        self.patterns.iter().find_map(|(l, pat)| {
            let theirs = other.patterns.iter().find(|(m, _)| m == l)?;
            match (pat, &theirs.1) {
                (Some(a), Some(b)) if a != b => Some(*l),
                _ => None,
            }
        })
    }
}

/// The first twelve primes other than `q`.
pub fn default_fingerprint_primes(q: Option<u64>) -> Vec<u64> {
    primes()
        .filter(|&l| Some(l) != q)
        .take(DEFAULT_FINGERPRINT_PRIMES)
        .collect()
}

/// True iff `g(y) - f(x)` (or `y^d - x^k - D`) is zero in the quotient ring.
pub fn verify_on_curve(
    x: &QuotElem,
    y: &QuotElem,
    curve: &CurveEquation,
) -> Result<bool, ExactError> {
    Ok(curve.residual(x, y)?.is_zero())
}

/// True iff some coordinate is not rational.
///
/// Over an irreducible modulus of prime degree `p` a non-constant element
/// generates the whole field, so its minimal polynomial has degree `p`.
pub fn strictly_l_check(x: &QuotElem, y: &QuotElem) -> bool {
    !x.rep().is_constant() || !y.rep().is_constant()
}

fn only_s_primes(den: &BigInt, s_primes: &[u64]) -> bool {
    let mut rest = den.clone();
    for &l in s_primes {
        let l = BigInt::from(l);
        while rest.is_multiple_of(&l) && !rest.is_zero() {
            rest /= &l;
        }
    }
    rest.is_one()
}

/// True iff the monic minimal polynomial of `a` has coefficients whose
/// denominators involve only primes from `s_primes`.
pub fn s_integrality_check(a: &QuotElem, s_primes: &[u64]) -> Result<bool, ExactError> {
    let minpoly = a.minimal_poly()?;
    Ok(minpoly
        .coeffs()
        .iter()
        .all(|c| only_s_primes(c.denom(), s_primes)))
}

/// Factor-degree multisets of `f` modulo `fp_primes`, plus discriminant
/// valuations, computed on the primitive integer model of `f`.
pub fn fingerprint(f: &UniPoly, fp_primes: &[u64]) -> FieldFingerprint {
    let (_, ints) = f.primitive_part();
    let model = UniPoly::from_bigints(&ints);
    let disc = discriminant(&model).unwrap_or_else(|_| Rat::zero());
    let lc = model.leading_coeff();
    let mut patterns = Vec::with_capacity(fp_primes.len());
    let mut disc_valuations = Vec::with_capacity(fp_primes.len());
    for &l in fp_primes {
        let dv = valuation(&disc, l);
        disc_valuations.push((l, dv));
        let bad = dv != Valuation::Finite(0) || valuation(&lc, l) != Valuation::Finite(0);
        let pattern = if bad {
            None
        } else {
            factor_mod_prime(&model, l)
                .ok()
                .map(|m| m.degree_multiset())
        };
        patterns.push((l, pattern));
    }
    FieldFingerprint {
        patterns,
        disc_valuations,
    }
}

/// Greedy partition of fingerprints into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctnessReport {
    /// Indices into the input, grouped; each class's first member is its
    /// representative, and representatives are pairwise separated.
    pub classes: Vec<Vec<usize>>,
}

impl DistinctnessReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Classes holding more than one member, i.e. fields this prime list
    /// cannot tell apart.
    pub fn indistinguishable(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().filter(|c| c.len() > 1)
    }
}

/// A fingerprint joins the first class whose representative it is not
/// separated from, or founds a new class.
pub fn partition_fingerprints(fps: &[FieldFingerprint]) -> DistinctnessReport {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, fp) in fps.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| fps[c[0]].separates(fp).is_none())
        {
            Some(class) => class.push(i),
            None => classes.push(vec![i]),
        }
    }
    DistinctnessReport { classes }
}

/// Partitions records by the fingerprints of their defining polynomials.
pub fn distinctness_report(records: &[ExtensionRecord], fp_primes: &[u64]) -> DistinctnessReport {
    let fps: Vec<FieldFingerprint> = records
        .iter()
        .map(|r| match &r.checks {
            Some(c)
                if c.fingerprint
                    .patterns
                    .iter()
                    .map(|p| p.0)
                    .eq(fp_primes.iter().copied()) =>
            {
                c.fingerprint.clone()
            }
            _ => fingerprint(&r.defining_poly, fp_primes),
        })
        .collect();
    partition_fingerprints(&fps)
}

/// Runs every check on a lifted record. `None` when the record has no point.
pub fn verify_record(
    record: &ExtensionRecord,
    fp_primes: &[u64],
) -> Result<Option<VerificationReport>, ExactError> {
    let Some(pt) = &record.point else {
        return Ok(None);
    };
    let s_primes = record.s_primes();
    let on_curve = verify_on_curve(&pt.x, &pt.y, &record.curve)?;
    let strictly_l = strictly_l_check(&pt.x, &pt.y);
    let s_integral =
        s_integrality_check(&pt.x, &s_primes)? && s_integrality_check(&pt.y, &s_primes)?;
    Ok(Some(VerificationReport {
        on_curve,
        strictly_l,
        s_integral,
        fingerprint: fingerprint(&record.defining_poly, fp_primes),
    }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cover::{CoprimeCover, CurveSpec};
    use crate::exact::{rat, ratio};
    use crate::irreducible::FactorConfig;

    fn modulus(c: &[i64]) -> Arc<UniPoly> {
        Arc::new(UniPoly::from_ints(c))
    }

    #[test]
    fn elliptic_point_checks() {
        let curve = CurveSpec::weierstrass(rat(8), rat(8));
        let cover = CoprimeCover::new(&curve, 2, 5).unwrap();
        let rec = cover.record(&rat(1), &FactorConfig::default()).unwrap();
        let m = Arc::new(rec.defining_poly.clone());
        let alpha = QuotElem::generator(m).unwrap();
        let x = alpha.inv().unwrap().scale(&rat(2)).add_rat(&rat(1));
        let y = alpha.scale(&rat(2));
        assert!(verify_on_curve(&x, &y, &CurveEquation::Plane(curve)).unwrap());
        assert!(strictly_l_check(&x, &y));
        assert_eq!(x.minimal_poly().unwrap().degree(), Some(5));
        let report = verify_record(&rec, &default_fingerprint_primes(Some(2)))
            .unwrap()
            .unwrap();
        assert!(report.passed());
    }

    #[test]
    fn constant_points() {
        let m = modulus(&[-2, 0, 0, 0, 0, 1]);
        let curve = CurveEquation::Plane(
            CurveSpec::new(
                UniPoly::from_ints(&[1, 0, 0, 1]),
                UniPoly::from_ints(&[0, 0, 1]),
            )
            .unwrap(),
        );
        let c = |v| QuotElem::constant(m.clone(), rat(v)).unwrap();
        assert!(!verify_on_curve(&c(0), &c(0), &curve).unwrap());
        assert!(verify_on_curve(&c(0), &c(1), &curve).unwrap());
        assert!(!strictly_l_check(&c(3), &c(5)));
        let other = QuotElem::generator(modulus(&[1, 0, 1])).unwrap();
        assert_eq!(
            verify_on_curve(&c(0), &other, &curve),
            Err(ExactError::ModulusMismatch)
        );
    }

    #[test]
    fn s_integrality_examples() {
        let m = modulus(&[-2, 0, -4, -2, 0, 1]);
        let alpha = QuotElem::generator(m).unwrap();
        assert!(s_integrality_check(&alpha, &[2]).unwrap());
        assert!(!s_integrality_check(&alpha.scale(&ratio(1, 3)), &[2]).unwrap());
        assert!(s_integrality_check(&alpha.inv().unwrap(), &[2]).unwrap());
        assert!(!s_integrality_check(&alpha.inv().unwrap(), &[]).unwrap());
    }

    #[test]
    fn fingerprints_separate_fields() {
        let a = fingerprint(&UniPoly::from_ints(&[1, 0, 1]), &[5, 7]);
        let b = fingerprint(&UniPoly::from_ints(&[-2, 0, 1]), &[5, 7]);
        assert_eq!(a.separates(&b), Some(5));
        assert_eq!(a, fingerprint(&UniPoly::from_ints(&[1, 0, 1]), &[5, 7]));
        let c = fingerprint(&UniPoly::from_ints(&[-8, 0, 1]), &[3, 5, 7, 11]);
        let d = fingerprint(&UniPoly::from_ints(&[-2, 0, 1]), &[3, 5, 7, 11]);
        assert_eq!(c.separates(&d), None);
        assert_eq!(partition_fingerprints(&[a.clone(), b]).class_count(), 2);
        assert_eq!(
            partition_fingerprints(std::slice::from_ref(&a)).class_count(),
            1
        );
        let dup = partition_fingerprints(&[a.clone(), a]);
        assert_eq!(dup.class_count(), 1);
        assert_eq!(dup.indistinguishable().count(), 1);
    }

    #[test]
    fn skipped_primes() {
        // disc(t^2 - 5) = 20
        let fp = fingerprint(&UniPoly::from_ints(&[-5, 0, 1]), &[3, 5, 7]);
        assert_eq!(fp.patterns[1], (5, None));
        assert!(fp.patterns[0].1.is_some());
        assert_eq!(
            default_fingerprint_primes(Some(2)),
            vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]
        );
        assert_eq!(default_fingerprint_primes(None)[0], 2);
    }
}
