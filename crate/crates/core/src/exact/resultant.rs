//! Resultants and discriminants.
//!
//! Sign convention: `resultant(a, b)` is the determinant of the Sylvester
//! matrix whose first `deg b` rows are shifts of `a` and whose last `deg a`
//! rows are shifts of `b`. Equivalently `lc(a)^deg(b) * Π b(θ)` over the
//! roots `θ` of `a`.

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rat::{rat, Rat};
use super::ExactError;

/// Resultant by the Euclidean remainder sequence.
///
/// A zero operand gives zero unless both are zero, which is an error.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rat, ExactError> {
    if a.is_zero() && b.is_zero() {
        return Err(ExactError::ZeroResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Rat::zero());
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rat::one();
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(acc * num_traits::pow(b.leading_coeff(), m));
        }
        if m == 0 {
            return Ok(acc * num_traits::pow(a.leading_coeff(), n));
        }
        // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r),  r = a mod b
        let r = a.rem(&b);
        let Some(k) = r.degree() else {
            return Ok(Rat::zero());
        };
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.leading_coeff(), m - k);
        a = b;
        b = r;
    }
}

/// The Sylvester matrix of `a` and `b` (rows of `a` first).
pub fn sylvester_matrix(a: &UniPoly, b: &UniPoly) -> Vec<Vec<Rat>> {
    let m = a.degree().unwrap_or(0);
    let n = b.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = vec![vec![Rat::zero(); size]; size];
    // coefficients are written highest degree first
    for i in 0..n {
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    rows
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &p;
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

/// Resultant straight from the Sylvester determinant. Slower than
/// [`resultant`]; kept as a second route for cross-checking.
pub fn sylvester_resultant(a: &UniPoly, b: &UniPoly) -> Result<Rat, ExactError> {
    if a.is_zero() && b.is_zero() {
        return Err(ExactError::ZeroResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Rat::zero());
    }
    Ok(determinant(sylvester_matrix(a, b)))
}

/// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant(f: &UniPoly) -> Result<Rat, ExactError> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or(ExactError::DegreeTooSmall)?;
    if n == 1 {
        return Ok(Rat::one());
    }
    let r = resultant(f, &f.derivative())? / f.leading_coeff();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Lagrange interpolation through `(x_i, y_i)` with distinct nodes, by
/// Newton divided differences.
pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
    let n = points.len();
    let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    let mut out = UniPoly::zero();
    for i in (0..n).rev() {
        let lin = UniPoly::new(vec![-points[i].0.clone(), rat(1)]);
        out = &(&out * &lin) + &UniPoly::constant(dd[i].clone());
    }
    out
}
