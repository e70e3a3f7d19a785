//! Arithmetic in `Q[t]/(h)` and minimal polynomials of its elements.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::poly::UniPoly;
use super::rat::{rat, Rat};
use super::resultant::{interpolate, resultant};
use super::ExactError;

/// An element of `Q[t]/(modulus)`, stored as its reduced representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotElem {
    modulus: Arc<UniPoly>,
    rep: UniPoly,
}

impl QuotElem {
    /// Reduces `rep` modulo `modulus`. Fails if the modulus is constant.
    pub fn new(modulus: Arc<UniPoly>, rep: UniPoly) -> Result<Self, ExactError> {
        if modulus.degree().unwrap_or(0) < 1 {
            return Err(ExactError::DegreeTooSmall);
        }
        let rep = rep.rem(&modulus);
        Ok(QuotElem { modulus, rep })
    }

    /// The residue class of `t`.
    pub fn generator(modulus: Arc<UniPoly>) -> Result<Self, ExactError> {
        Self::new(modulus, UniPoly::var())
    }

    pub fn constant(modulus: Arc<UniPoly>, c: Rat) -> Result<Self, ExactError> {
        Self::new(modulus, UniPoly::constant(c))
    }

    pub fn modulus(&self) -> &Arc<UniPoly> {
        &self.modulus
    }

    pub fn rep(&self) -> &UniPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep == UniPoly::one()
    }

    fn same_ring(&self, other: &QuotElem) -> Result<(), ExactError> {
        if Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus {
            Ok(())
        } else {
            Err(ExactError::ModulusMismatch)
        }
    }

    fn with_rep(&self, rep: UniPoly) -> QuotElem {
        QuotElem {
            modulus: self.modulus.clone(),
            rep,
        }
    }

    pub fn add(&self, other: &QuotElem) -> Result<QuotElem, ExactError> {
        self.same_ring(other)?;
        Ok(self.with_rep(&self.rep + &other.rep))
    }

    pub fn sub(&self, other: &QuotElem) -> Result<QuotElem, ExactError> {
        self.same_ring(other)?;
        Ok(self.with_rep(&self.rep - &other.rep))
    }

    pub fn mul(&self, other: &QuotElem) -> Result<QuotElem, ExactError> {
        self.same_ring(other)?;
        Ok(self.with_rep((&self.rep * &other.rep).rem(&self.modulus)))
    }

    pub fn neg(&self) -> QuotElem {
        self.with_rep(-&self.rep)
    }

    pub fn add_rat(&self, c: &Rat) -> QuotElem {
        self.with_rep(&self.rep + &UniPoly::constant(c.clone()))
    }

    pub fn scale(&self, c: &Rat) -> QuotElem {
        self.with_rep(self.rep.scale(c))
    }

    /// Multiplicative inverse from the extended Euclidean relation
    /// `s * rep + r * modulus = 1`.
    ///
    /// A nontrivial common factor means the modulus is reducible, which is
    /// reported rather than hidden.
    pub fn inv(&self) -> Result<QuotElem, ExactError> {
        if self.rep.is_zero() {
            return Err(ExactError::NotInvertible);
        }
        let (g, s, _) = self.rep.ext_gcd(&self.modulus);
        if g != UniPoly::one() {
            return Err(ExactError::NotInvertible);
        }
        Ok(self.with_rep(s.rem(&self.modulus)))
    }

    pub fn div(&self, other: &QuotElem) -> Result<QuotElem, ExactError> {
        self.mul(&other.inv()?)
    }

    /// Integer power; negative exponents go through [`QuotElem::inv`].
    pub fn pow(&self, exp: i64) -> Result<QuotElem, ExactError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.with_rep(UniPoly::one());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, f: &UniPoly) -> QuotElem {
        let mut acc = UniPoly::zero();
        for c in f.coeffs().iter().rev() {
            acc = (&(&acc * &self.rep) + &UniPoly::constant(c.clone())).rem(&self.modulus);
        }
        self.with_rep(acc)
    }

    /// Monic minimal polynomial over the rationals.
    ///
    /// Rational elements give `z - c`. Otherwise the characteristic polynomial
    /// `Res_t(h(t), z - rep(t))` is recovered by interpolating at `deg h + 1`
    /// integer nodes and reduced to its squarefree part; over an irreducible
    /// modulus the characteristic polynomial is a power of the minimal one.
    pub fn minimal_poly(&self) -> Result<UniPoly, ExactError> {
        if self.rep.is_constant() {
            return Ok(UniPoly::new(vec![-self.rep.coeff(0), Rat::one()]));
        }
        Ok(self.char_poly()?.squarefree_part())
    }

    /// Characteristic polynomial of multiplication by this element, monic.
    pub fn char_poly(&self) -> Result<UniPoly, ExactError> {
        let n = self.modulus.degree().unwrap();
        let mut points = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let z = rat(i as i64);
            let shifted = &UniPoly::constant(z.clone()) - &self.rep;
            let r = if self.rep.is_constant() {
                num_traits::pow(shifted.coeff(0), n)
            } else {
                resultant(&self.modulus, &shifted)?
            };
            points.push((z, r));
        }
        Ok(interpolate(&points).monic())
    }
}

/// Tags for [`quot_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Binary ring operation on two elements of the same quotient ring.
pub fn quot_arith(op: QuotOp, a: &QuotElem, b: &QuotElem) -> Result<QuotElem, ExactError> {
    match op {
        QuotOp::Add => a.add(b),
        QuotOp::Sub => a.sub(b),
        QuotOp::Mul => a.mul(b),
        QuotOp::Div => a.div(b),
    }
}

impl fmt::Display for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} mod ({})",
            self.rep.display_in("a"),
            self.modulus.display_in("t")
        )
    }
}
