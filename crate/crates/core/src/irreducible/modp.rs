//! Polynomials over a prime field `F_l` and their complete factorization.
//!
//! Squarefree decomposition, then distinct-degree splitting, then
//! equal-degree splitting (Cantor–Zassenhaus; the trace map for `l = 2`).
//! Splitting candidates come from a fixed enumeration so results never depend
//! on a random source.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{Rat, UniPoly};

use super::IrreducibleError;

/// Dense polynomial over `F_l`, little-endian, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    prime: u64,
    coeffs: Vec<u64>,
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

/// Reduces an integer into `[0, p)`.
pub(crate) fn reduce_int(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

impl FpPoly {
    pub fn new(prime: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= prime;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { prime, coeffs }
    }

    fn raw(&self, coeffs: Vec<u64>) -> Self {
        Self::new(self.prime, coeffs)
    }

    pub fn zero(prime: u64) -> Self {
        FpPoly {
            prime,
            coeffs: Vec::new(),
        }
    }

    pub fn one(prime: u64) -> Self {
        Self::new(prime, vec![1])
    }

    pub fn var(prime: u64) -> Self {
        Self::new(prime, vec![0, 1])
    }

    /// Reduction of a rational polynomial; denominators must be units mod `prime`.
    pub fn from_rational(f: &UniPoly, prime: u64) -> Option<Self> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| reduce_rat(c, prime))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(prime, coeffs))
    }

    pub fn from_ints(ints: &[BigInt], prime: u64) -> Self {
        Self::new(prime, ints.iter().map(|c| reduce_int(c, prime)).collect())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(invmod(lc, self.prime)),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        self.raw(
            self.coeffs
                .iter()
                .map(|&a| mulmod(a, c, self.prime))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.prime;
        self.raw(
            (0..n)
                .map(|i| (self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.prime;
        self.raw(
            (0..n)
                .map(|i| {
                    (self.coeffs.get(i).unwrap_or(&0) + p - other.coeffs.get(i).unwrap_or(&0)) % p
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prime);
        }
        let p = self.prime;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        self.raw(out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.prime;
        let Some(nd) = self.degree() else {
            return (Self::zero(p), Self::zero(p));
        };
        if nd < dd {
            return (Self::zero(p), self.clone());
        }
        let inv = invmod(d.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = mulmod(rem[i + dd], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mulmod(c, dc, p)) % p;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (self.raw(quot), self.raw(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.prime;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = invmod(r0.leading_coeff().max(1), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.prime;
        self.raw(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: BigInt, m: &Self) -> Self {
        let mut acc = Self::one(self.prime).rem(m);
        let mut base = self.rem(m);
        let two = BigInt::from(2);
        while !e.is_zero() {
            if e.is_odd() {
                acc = acc.mul(&base).rem(m);
            }
            e /= &two;
            if !e.is_zero() {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Inverse of the Frobenius on coefficients: given `self = g(t^p)`, returns `g`.
    fn pth_root(&self) -> Self {
        let p = self.prime as usize;
        self.raw(self.coeffs.iter().step_by(p).copied().collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.prime;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            _ => self.gcd(&self.derivative()).is_one(),
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints: Vec<BigInt> = self.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        write!(f, "{} (mod {})", UniPoly::from_bigints(&ints), self.prime)
    }
}

pub(crate) fn reduce_rat(c: &Rat, p: u64) -> Option<u64> {
    let den = reduce_int(c.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mulmod(reduce_int(c.numer(), p), invmod(den, p), p))
}

/// Complete factorization modulo a prime: `unit * Π factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    pub prime: u64,
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, sorted.
    pub factors: Vec<(FpPoly, usize)>,
}

impl ModFactorization {
    /// Degrees of the irreducible factors, repeated by multiplicity, ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap(), *m))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn product(&self) -> FpPoly {
        let mut acc = FpPoly::new(self.prime, vec![self.unit]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factors `f` modulo the prime `l` into monic irreducibles.
///
/// The leading coefficient must survive the reduction.
pub fn factor_mod_prime(f: &UniPoly, l: u64) -> Result<ModFactorization, IrreducibleError> {
    if !crate::exact::is_prime(l) {
        return Err(IrreducibleError::NotPrime(l));
    }
    let fp = FpPoly::from_rational(f, l).ok_or(IrreducibleError::BadReduction(l))?;
    if fp.degree() != f.degree() {
        return Err(IrreducibleError::BadReduction(l));
    }
    Ok(factor_fp(&fp))
}

pub fn factor_fp(f: &FpPoly) -> ModFactorization {
    let prime = f.prime;
    let unit = f.leading_coeff();
    let mut factors = Vec::new();
    if f.degree().unwrap_or(0) > 0 {
        for (sqf, mult) in squarefree_decomposition(&f.monic()) {
            for (g, d) in distinct_degree(&sqf) {
                for h in equal_degree(&g, d) {
                    factors.push((h, mult));
                }
            }
        }
    }
    factors.sort();
    ModFactorization {
        prime,
        unit,
        factors,
    }
}

/// Squarefree decomposition of a monic polynomial in characteristic `p`.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.prime;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        for (g, m) in squarefree_decomposition(&c.monic().pth_root()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.prime;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::var(p);
    let mut h = x.rem(&rest);
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = h.pow_mod(BigInt::from(p), &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest.monic(), deg));
    }
    out
}

/// The `k`-th splitting candidate: base-`p` digits of `k + p` as coefficients,
/// so every candidate is non-constant and all polynomials are eventually tried.
fn candidate(p: u64, k: u64) -> FpPoly {
    let mut n = k + p;
    let mut coeffs = Vec::new();
    while n > 0 {
        coeffs.push(n % p);
        n /= p;
    }
    FpPoly::new(p, coeffs)
}

/// Splits a monic squarefree product of degree-`d` irreducibles.
fn equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return vec![f.clone()];
    }
    let p = f.prime;
    let mut k = 0u64;
    loop {
        let a = candidate(p, k).rem(f);
        k += 1;
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let split = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut acc = a.clone();
            let mut sq = a;
            for _ in 1..d {
                sq = sq.mul(&sq).rem(f);
                acc = acc.add(&sq);
            }
            acc
        } else {
            let e = (num_traits::pow(BigInt::from(p), d) - 1u32) / 2u32;
            a.pow_mod(e, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&split);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                let mut out = equal_degree(&g, d);
                out.extend(equal_degree(&f.div_rem(&g).0.monic(), d));
                return out;
            }
        }
    }
}
