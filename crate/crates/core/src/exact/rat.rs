//! Rationals and p-adic valuations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds `num/den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// `q^e` as a rational, for any integer exponent.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    num_traits::Pow::pow(base, exp as i32)
}

pub fn int_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Parses `"n"` or `"n/d"` in base 10.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|_| bad()),
    }
}

/// Formats as `"n"` for integers and `"n/d"` otherwise.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A q-adic valuation; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn at_least(self, bound: i64) -> bool {
        self >= Valuation::Finite(bound)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Exponent of the prime `q` in a nonzero integer.
pub fn int_valuation(n: &BigInt, q: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let q = BigInt::from(q);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (quot, rem) = n.div_rem(&q);
        if !rem.is_zero() {
            return v;
        }
        n = quot;
        v += 1;
    }
}

/// `v_q(x)`: exponent of `q` in the numerator minus exponent in the denominator.
pub fn valuation(x: &Rat, q: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let num = int_valuation(x.numer(), q) as i64;
    let den = int_valuation(x.denom(), q) as i64;
    Valuation::Finite(num - den)
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when every prime dividing the denominator of `x` is `q`.
pub fn is_q_integral(x: &Rat, q: u64) -> bool {
    let mut d = x.denom().clone();
    let q = BigInt::from(q);
    while d.is_multiple_of(&q) {
        d /= &q;
    }
    d.is_one()
}

/// Exact square root of a rational square, if it is one.
pub fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rat::new(n, d))
}

/// Trial-division primality, adequate for the small primes used throughout.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut i = 3;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

/// Primes in increasing order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}
