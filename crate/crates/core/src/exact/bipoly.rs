//! Sparse polynomials in two variables `u` and `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::rat::{format_rat, Rat};

/// Sparse map from `(degree in u, degree in t)` to a nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// `c * u^i * t^j`.
    pub fn term(c: Rat, i: usize, j: usize) -> Self {
        let mut out = BiPoly::zero();
        out.add_term(c, i, j);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rat, usize, usize)>) -> Self {
        let mut out = BiPoly::zero();
        for (c, i, j) in terms {
            out.add_term(c, i, j);
        }
        out
    }

    /// Embeds a polynomial in `u`.
    pub fn from_u(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i, 0)),
        )
    }

    /// Embeds a polynomial in `t`.
    pub fn from_t(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| (c.clone(), 0, j)),
        )
    }

    pub fn add_term(&mut self, c: Rat, i: usize, j: usize) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn degree_u(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Coefficient of `t^j`, as a polynomial in `u`.
    pub fn coeff_in_t(&self, j: usize) -> UniPoly {
        let deg = self.degree_u().unwrap_or(0);
        let mut c = vec![Rat::zero(); deg + 1];
        for (&(i, jj), v) in &self.terms {
            if jj == j {
                c[i] = v.clone();
            }
        }
        UniPoly::new(c)
    }

    /// Leading coefficient in `t`, as a polynomial in `u`.
    pub fn leading_t_coeff(&self) -> UniPoly {
        self.degree_t()
            .map_or_else(UniPoly::zero, |j| self.coeff_in_t(j))
    }

    /// Exact value `h(u0, t0)`.
    pub fn eval(&self, u0: &Rat, t0: &Rat) -> Rat {
        let du = self.degree_u().unwrap_or(0);
        let dt = self.degree_t().unwrap_or(0);
        let upow = powers(u0, du);
        let tpow = powers(t0, dt);
        self.terms.iter().fold(Rat::zero(), |acc, (&(i, j), c)| {
            acc + c * &upow[i] * &tpow[j]
        })
    }

    /// Substitutes `u := u0`, leaving a polynomial in `t`.
    pub fn specialize(&self, u0: &Rat) -> UniPoly {
        let dt = self.degree_t().unwrap_or(0);
        let upow = powers(u0, self.degree_u().unwrap_or(0));
        let mut c = vec![Rat::zero(); dt + 1];
        for (&(i, j), v) in &self.terms {
            c[j] += v * &upow[i];
        }
        UniPoly::new(c)
    }
}

fn powers(x: &Rat, n: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rat::one());
    for i in 0..n {
        out.push(&out[i] * x);
    }
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // highest t-degree first, then highest u-degree
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|&(&(i, j), _)| std::cmp::Reverse((j, i)));
        for (n, (&(i, j), c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                parts.push(format_rat(&abs));
            }
            match i {
                0 => {}
                1 => parts.push("u".into()),
                _ => parts.push(format!("u^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(format!("t^{j}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(a * b, i1 + i2, j1 + j2);
            }
        }
        out
    }
}
