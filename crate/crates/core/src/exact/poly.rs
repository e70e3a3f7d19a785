//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{format_rat, rat, Rat};

/// Dense polynomial with little-endian coefficients: `coeffs[i]` multiplies `t^i`.
///
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// `f^(i) / i!`, the polynomial whose value at `u` is the `i`-th Taylor
    /// coefficient of `f` about `u`: `f(u + z) = Σ_i taylor_div_coeff(f, i)(u) z^i`.
    pub fn taylor_div_coeff(&self, i: usize) -> Self {
        let mut binom = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(i));
        // coefficient of u^j in f^(i)/i! is C(j + i, i) * f_{j+i}
        for (j, c) in self.coeffs.iter().skip(i).enumerate() {
            if j > 0 {
                binom = binom * BigInt::from(j + i) / BigInt::from(j);
            }
            out.push(c * Rat::from_integer(binom.clone()));
        }
        Self::new(out)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let inv_lc = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading_coeff().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Splits `self = content * primitive` where `primitive` has coprime integer
    /// coefficients and positive leading coefficient.
    ///
    /// Panics on the zero polynomial.
    pub fn primitive_part(&self) -> (Rat, Vec<BigInt>) {
        assert!(!self.is_zero(), "primitive part of zero");
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rat::new(g, den), prim)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.denom().is_one().then(|| c.numer().clone()))
            .collect()
    }

    /// `t^deg * self(1/t)`.
    pub fn reversed(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rat(&abs))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}
