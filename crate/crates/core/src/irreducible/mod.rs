//! Irreducibility certificates for polynomials over the rationals.
//!
//! Three kinds of proof are produced, cheapest first:
//!
//! * an Eisenstein certificate at a small prime;
//! * a modular degree sieve: the factor-degree multisets of `f mod l` for a
//!   few good primes `l` leave no room for a proper rational factor;
//! * Hensel lifting of one modular factorization followed by exhaustive
//!   recombination, which either finds rational factors or proves there are
//!   none.
//!
//! A `Reducible` verdict always carries factors whose product is the input.

mod eisenstein;
mod modp;
mod zassenhaus;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exact::{is_prime, primes, Rat, UniPoly};

pub use eisenstein::{eisenstein_check, EisensteinCertificate, EisensteinFailure};
pub use modp::{factor_fp, factor_mod_prime, FpPoly, ModFactorization};

use zassenhaus::{content, factor_with_prime, ZPoly};

/// Environment variable holding a comma-separated sieve prime list.
pub const SIEVE_PRIMES_ENV: &str = "RANKFORGE_SIEVE_PRIMES";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrreducibleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("leading coefficient or a denominator vanishes modulo {0}")]
    BadReduction(u64),
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("invalid sieve prime list {0:?}")]
    BadPrimeList(String),
}

/// Knobs for [`factor_over_rationals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Explicit sieve primes. Unsuitable entries (dividing the leading
    /// coefficient or the discriminant) are skipped. `None` picks the first
    /// `sieve_prime_count` suitable primes.
    pub sieve_primes: Option<Vec<u64>>,
    pub sieve_prime_count: usize,
    /// Eisenstein is attempted at every prime up to this bound dividing all
    /// non-leading coefficients.
    pub eisenstein_limit: u64,
    /// Stop after the sieve, answering `Inconclusive` instead of lifting.
    pub sieve_only: bool,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            sieve_primes: None,
            sieve_prime_count: 8,
            eisenstein_limit: 1000,
            sieve_only: false,
        }
    }
}

impl FactorConfig {
    /// Default configuration, with the sieve primes taken from
    /// `RANKFORGE_SIEVE_PRIMES` when it is set.
    pub fn from_env() -> Result<Self, IrreducibleError> {
        let mut cfg = FactorConfig::default();
        if let Ok(list) = std::env::var(SIEVE_PRIMES_ENV) {
            cfg.sieve_primes = Some(parse_prime_list(&list)?);
        }
        Ok(cfg)
    }
}

/// Parses `"3,5,7"` into primes.
pub fn parse_prime_list(list: &str) -> Result<Vec<u64>, IrreducibleError> {
    let bad = || IrreducibleError::BadPrimeList(list.to_string());
    let out = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() || out.iter().any(|&p| !is_prime(p)) {
        return Err(bad());
    }
    Ok(out)
}

/// Factor-degree multisets modulo a list of primes that leave no room for a
/// proper rational factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCertificate {
    /// `(prime, ascending degree multiset)` per sieve prime.
    pub patterns: Vec<(u64, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCertificate {
    pub prime: u64,
    /// Factors were lifted modulo `prime^exponent`.
    pub exponent: u32,
    pub modular_factors: usize,
}

/// `unit * Π factor^multiplicity`, factors primitive integral with positive
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    /// True when the factorization exhibits a genuine split.
    pub fn is_proper(&self) -> bool {
        self.factors.len() > 1 || self.factors.iter().any(|(_, m)| *m > 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    IrreducibleEisenstein(EisensteinCertificate),
    IrreducibleModular(ModularCertificate),
    IrreducibleLifted(LiftCertificate),
    Reducible(Factorization),
    /// Sieve-only mode could not decide; the evidence gathered is attached.
    Inconclusive(ModularCertificate),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    IrreducibleEisenstein,
    IrreducibleModular,
    IrreducibleLifted,
    Reducible,
    Inconclusive,
}

impl VerdictKind {
    pub const ALL: [VerdictKind; 5] = [
        VerdictKind::IrreducibleEisenstein,
        VerdictKind::IrreducibleModular,
        VerdictKind::IrreducibleLifted,
        VerdictKind::Reducible,
        VerdictKind::Inconclusive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::IrreducibleEisenstein => "IrreducibleEisenstein",
            VerdictKind::IrreducibleModular => "IrreducibleModular",
            VerdictKind::IrreducibleLifted => "IrreducibleLifted",
            VerdictKind::Reducible => "Reducible",
            VerdictKind::Inconclusive => "Inconclusive",
        }
    }

    pub fn is_irreducible(self) -> bool {
        matches!(
            self,
            VerdictKind::IrreducibleEisenstein
                | VerdictKind::IrreducibleModular
                | VerdictKind::IrreducibleLifted
        )
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VerdictKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        VerdictKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown verdict kind {s:?}"))
    }
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::IrreducibleEisenstein(_) => VerdictKind::IrreducibleEisenstein,
            Verdict::IrreducibleModular(_) => VerdictKind::IrreducibleModular,
            Verdict::IrreducibleLifted(_) => VerdictKind::IrreducibleLifted,
            Verdict::Reducible(_) => VerdictKind::Reducible,
            Verdict::Inconclusive(_) => VerdictKind::Inconclusive,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.kind().is_irreducible()
    }
}

/// All subset sums of a multiset, including 0 and the total.
fn subset_sums(degrees: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in degrees {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

fn intersect_proper_degrees(patterns: &[(u64, Vec<usize>)], n: usize) -> BTreeSet<usize> {
    let mut possible: BTreeSet<usize> = (1..n).collect();
    for (_, degs) in patterns {
        let sums = subset_sums(degs);
        possible.retain(|d| sums.contains(d));
    }
    possible
}

/// Degrees a proper rational factor of `f` could still have, given its
/// factorizations modulo each prime. An empty set proves irreducibility.
pub fn degree_sieve(f: &UniPoly, sieve: &[u64]) -> Result<BTreeSet<usize>, IrreducibleError> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or(IrreducibleError::DegreeTooSmall)?;
    let patterns = sieve
        .iter()
        .map(|&l| Ok((l, factor_mod_prime(f, l)?.degree_multiset())))
        .collect::<Result<Vec<_>, IrreducibleError>>()?;
    Ok(intersect_proper_degrees(&patterns, n))
}

fn is_good_prime(f: &[BigInt], l: u64) -> bool {
    let fp = FpPoly::from_ints(f, l);
    fp.degree() == Some(f.len() - 1) && fp.is_squarefree()
}

/// Good primes for a squarefree integer polynomial: either the configured
/// list filtered for suitability, or the first `count` suitable primes.
fn sieve_primes(f: &[BigInt], cfg: &FactorConfig) -> Vec<u64> {
    match &cfg.sieve_primes {
        Some(list) => list
            .iter()
            .copied()
            .filter(|&l| is_good_prime(f, l))
            .collect(),
        // only primes dividing lc * disc are rejected, so this terminates
        None => primes()
            .filter(|&l| is_good_prime(f, l))
            .take(cfg.sieve_prime_count)
            .collect(),
    }
}

fn zpoly_to_uni(f: &[BigInt]) -> UniPoly {
    UniPoly::from_bigints(f)
}

fn small_prime_divisors(n: &BigInt, limit: u64) -> Vec<u64> {
    if n.is_zero() {
        return primes().take_while(|&p| p <= limit.min(50)).collect();
    }
    primes()
        .take_while(|&p| p <= limit)
        .filter(|&p| (n % BigInt::from(p)).is_zero())
        .collect()
}

enum SquarefreeOutcome {
    Irreducible(Verdict),
    Split(Vec<ZPoly>),
    Undecided(ModularCertificate),
}

/// Decides a primitive squarefree integer polynomial of degree >= 1.
fn decide_squarefree(f: &[BigInt], cfg: &FactorConfig) -> SquarefreeOutcome {
    let n = f.len() - 1;
    let fu = zpoly_to_uni(f);

    if n >= 1 {
        let g = content(&f[..n]);
        for q in small_prime_divisors(&g, cfg.eisenstein_limit) {
            if let Ok(cert) = eisenstein_check(&fu, q) {
                return SquarefreeOutcome::Irreducible(Verdict::IrreducibleEisenstein(cert));
            }
        }
    }

    let primes = sieve_primes(f, cfg);
    let mut patterns = Vec::with_capacity(primes.len());
    let mut best: Option<ModFactorization> = None;
    for &l in &primes {
        let fac = factor_fp(&FpPoly::from_ints(f, l));
        if fac.is_irreducible() {
            return SquarefreeOutcome::Irreducible(Verdict::IrreducibleModular(
                ModularCertificate {
                    patterns: vec![(l, vec![n])],
                },
            ));
        }
        patterns.push((l, fac.degree_multiset()));
        if best
            .as_ref()
            .is_none_or(|b| fac.factors.len() < b.factors.len())
        {
            best = Some(fac);
        }
    }
    let possible = intersect_proper_degrees(&patterns, n);
    if !patterns.is_empty() && possible.is_empty() {
        return SquarefreeOutcome::Irreducible(Verdict::IrreducibleModular(ModularCertificate {
            patterns,
        }));
    }
    if cfg.sieve_only {
        return SquarefreeOutcome::Undecided(ModularCertificate { patterns });
    }

    let best = match best {
        Some(b) => b,
        None => {
            // configured list had no usable prime; fall back to the first good one
            let l = crate::exact::primes()
                .find(|&l| is_good_prime(f, l))
                .unwrap();
            factor_fp(&FpPoly::from_ints(f, l))
        }
    };
    let l = best.prime;
    let mod_factors: Vec<FpPoly> = best.factors.iter().map(|(g, _)| g.clone()).collect();
    let out = factor_with_prime(
        f,
        l,
        &mod_factors,
        Some(&possible).filter(|p| !p.is_empty()),
    );
    if out.factors.len() == 1 {
        SquarefreeOutcome::Irreducible(Verdict::IrreducibleLifted(LiftCertificate {
            prime: l,
            exponent: out.exponent,
            modular_factors: mod_factors.len(),
        }))
    } else {
        SquarefreeOutcome::Split(out.factors)
    }
}

/// Fully factors a primitive squarefree polynomial, ignoring certificates.
fn full_factors(f: &[BigInt], cfg: &FactorConfig) -> Vec<ZPoly> {
    let cfg = FactorConfig {
        sieve_only: false,
        ..cfg.clone()
    };
    match decide_squarefree(f, &cfg) {
        SquarefreeOutcome::Split(fs) => fs,
        _ => vec![f.to_vec()],
    }
}

/// Yun's squarefree decomposition over the rationals: `f = c * Π a_i^i`.
fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let mut c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn to_primitive_ints(f: &UniPoly) -> ZPoly {
    f.primitive_part().1
}

/// Definitive factorization verdict over the rationals.
///
/// Pipeline: squarefree reduction, Eisenstein at small primes, degree sieve,
/// then Hensel lifting and recombination. Non-squarefree inputs are factored
/// completely and reported as `Reducible` with multiplicities.
pub fn factor_over_rationals(f: &UniPoly, cfg: &FactorConfig) -> Result<Verdict, IrreducibleError> {
    if f.degree().unwrap_or(0) < 1 {
        return Err(IrreducibleError::DegreeTooSmall);
    }
    let (_, prim) = f.primitive_part();
    let prim_u = zpoly_to_uni(&prim);
    let parts = squarefree_decomposition(&prim_u);
    let squarefree = parts.len() == 1 && parts[0].1 == 1;

    if squarefree {
        return Ok(match decide_squarefree(&prim, cfg) {
            SquarefreeOutcome::Irreducible(v) => v,
            SquarefreeOutcome::Undecided(ev) => Verdict::Inconclusive(ev),
            SquarefreeOutcome::Split(fs) => {
                Verdict::Reducible(assemble(f, fs.into_iter().map(|g| (g, 1))))
            }
        });
    }
    let mut factors = Vec::new();
    for (part, mult) in parts {
        for g in full_factors(&to_primitive_ints(&part), cfg) {
            factors.push((g, mult));
        }
    }
    Ok(Verdict::Reducible(assemble(f, factors.into_iter())))
}

fn assemble(f: &UniPoly, factors: impl Iterator<Item = (ZPoly, usize)>) -> Factorization {
    let mut factors: Vec<(UniPoly, usize)> = factors.map(|(g, m)| (zpoly_to_uni(&g), m)).collect();
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs().to_vec()).cmp(&(b.0.degree(), b.0.coeffs().to_vec()))
    });
    let mut prod = UniPoly::one();
    for (g, m) in &factors {
        prod = &prod * &g.pow(*m as u32);
    }
    let unit = f.leading_coeff() / prod.leading_coeff();
    Factorization { unit, factors }
}

/// Re-validates a stored verdict against its polynomial from scratch.
///
/// Certificates are re-checked directly where they carry enough data
/// (Eisenstein, modular patterns, explicit factors); lifted verdicts are
/// recomputed. `Inconclusive` never validates.
pub fn recheck_verdict(f: &UniPoly, verdict: &Verdict) -> bool {
    let Some(n) = f.degree().filter(|&n| n >= 1) else {
        return false;
    };
    match verdict {
        Verdict::IrreducibleEisenstein(cert) => {
            let prim = zpoly_to_uni(&f.primitive_part().1);
            eisenstein_check(&prim, cert.prime).is_ok()
        }
        Verdict::IrreducibleModular(cert) => {
            if cert.patterns.is_empty() {
                return false;
            }
            for (l, degs) in &cert.patterns {
                match factor_mod_prime(f, *l) {
                    Ok(fac) if &fac.degree_multiset() == degs => {}
                    _ => return false,
                }
            }
            intersect_proper_degrees(&cert.patterns, n).is_empty()
        }
        Verdict::IrreducibleLifted(_) => {
            factor_over_rationals(f, &FactorConfig::default()).is_ok_and(|v| v.is_irreducible())
        }
        Verdict::Reducible(fac) => {
            fac.is_proper()
                && fac
                    .factors
                    .iter()
                    .all(|(g, m)| *m >= 1 && g.degree().unwrap_or(0) >= 1)
                && fac.product() == *f
        }
        Verdict::Inconclusive(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn verdict(c: &[i64]) -> Verdict {
        factor_over_rationals(&p(c), &FactorConfig::default()).unwrap()
    }

    #[test]
    fn difference_of_squares_is_reducible() {
        let Verdict::Reducible(fac) = verdict(&[-1, 0, 1]) else {
            panic!()
        };
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        assert_eq!(fac.product(), p(&[-1, 0, 1]));
    }

    #[test]
    fn origin_specialization_is_eisenstein() {
        let v = verdict(&[-2, 0, -4, -2, 0, 1]);
        assert_eq!(v.kind(), VerdictKind::IrreducibleEisenstein);
        let Verdict::IrreducibleEisenstein(cert) = v else {
            unreachable!()
        };
        assert_eq!(cert.prime, 2);
    }

    #[test]
    fn first_specialization_is_irreducible() {
        // h(1, t) of the y^2 = x^3 + 8x + 8, p = 5 cover; pinned irreducible by
        // an independent CAS factorization
        let v = verdict(&[-8, -12, -22, -17, 0, 4]);
        assert!(v.is_irreducible(), "{v:?}");
    }

    #[test]
    fn sieve_examples() {
        // t^4 + 1 splits into two quadratics modulo every odd prime
        assert_eq!(
            degree_sieve(&p(&[1, 0, 0, 0, 1]), &[3, 5, 7]).unwrap(),
            BTreeSet::from([2])
        );
        // (t^2 + 1)(t^3 + t + 1) modulo 5
        let f = &p(&[1, 0, 1]) * &p(&[1, 1, 0, 1]);
        assert_eq!(
            degree_sieve(&f, &[5]).unwrap(),
            BTreeSet::from([1, 2, 3, 4])
        );
        // t^5 - t - 1 is irreducible modulo 5 (Artin–Schreier)
        assert!(degree_sieve(&p(&[-1, -1, 0, 0, 0, 1]), &[5])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn swinnerton_dyer_style_quartic_needs_lifting() {
        let v = verdict(&[1, 0, 0, 0, 1]);
        assert_eq!(v.kind(), VerdictKind::IrreducibleLifted);
        let sieve_only = FactorConfig {
            sieve_only: true,
            ..FactorConfig::default()
        };
        let v = factor_over_rationals(&p(&[1, 0, 0, 0, 1]), &sieve_only).unwrap();
        assert_eq!(v.kind(), VerdictKind::Inconclusive);
    }

    #[test]
    fn non_squarefree_reports_multiplicities() {
        // 3 (t - 1)^2 (t^2 + 1)
        let f = (&p(&[-1, 1]).pow(2) * &p(&[1, 0, 1])).scale(&rat(3));
        let Verdict::Reducible(fac) = factor_over_rationals(&f, &FactorConfig::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 0, 1]), 1)]);
        assert_eq!(fac.unit, rat(3));
        assert_eq!(fac.product(), f);
        assert!(recheck_verdict(&f, &Verdict::Reducible(fac)));
    }

    #[test]
    fn recheck_rejects_flipped_verdicts() {
        let f = p(&[-1, 0, 1]);
        let fake = Verdict::IrreducibleModular(ModularCertificate {
            patterns: vec![(3, vec![2])],
        });
        assert!(!recheck_verdict(&f, &fake));
        let fake = Verdict::IrreducibleLifted(LiftCertificate {
            prime: 3,
            exponent: 2,
            modular_factors: 2,
        });
        assert!(!recheck_verdict(&f, &fake));
        let fake = Verdict::IrreducibleEisenstein(EisensteinCertificate {
            prime: 2,
            content_valuation: 0,
            leading_valuation: 0,
            verified: true,
        });
        assert!(!recheck_verdict(&f, &fake));
    }

    #[test]
    fn degree_zero_is_an_error() {
        assert_eq!(
            factor_over_rationals(&p(&[4]), &FactorConfig::default()),
            Err(IrreducibleError::DegreeTooSmall)
        );
    }

    #[test]
    fn prime_lists() {
        assert_eq!(parse_prime_list("3, 5,7").unwrap(), vec![3, 5, 7]);
        assert!(parse_prime_list("3,4").is_err());
        assert!(parse_prime_list("").is_err());
        let cfg = FactorConfig {
            sieve_primes: Some(vec![3]),
            ..FactorConfig::default()
        };
        assert!(factor_over_rationals(&p(&[1, 0, 1]), &cfg)
            .unwrap()
            .is_irreducible());
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        let f = UniPoly::new(vec![crate::exact::ratio(-1, 4), rat(0), rat(1)]);
        let Verdict::Reducible(fac) = factor_over_rationals(&f, &FactorConfig::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(fac.factors, vec![(p(&[-1, 2]), 1), (p(&[1, 2]), 1)]);
        assert_eq!(fac.product(), f);
    }
}
