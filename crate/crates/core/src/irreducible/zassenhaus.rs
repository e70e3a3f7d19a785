//! Hensel lifting of a modular factorization and Zassenhaus recombination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::FpPoly;

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn reduce(f: &[BigInt], m: &BigInt) -> ZPoly {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

/// Representatives in `(-m/2, m/2]`.
fn symmetric(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_ints(f: &FpPoly) -> ZPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

pub(crate) fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(f: &[BigInt]) -> ZPoly {
    let mut g = content(f);
    if f.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    f.iter().map(|c| c / &g).collect()
}

/// Exact division over the integers, or `None` if `d` does not divide `f`.
pub(crate) fn div_exact(f: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let dd = d.len().checked_sub(1)?;
    if f.len() < d.len() {
        return f.iter().all(Zero::is_zero).then(Vec::new);
    }
    let lc = d.last().unwrap();
    let mut rem = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - dd];
    for i in (0..quot.len()).rev() {
        let (c, r) = rem[i + dd].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        quot[i] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &r * &r == *n {
        r
    } else {
        r + 1
    }
}

/// Height bound for lifting: every coefficient of `lc(f) * g` for a factor `g`
/// of `f` is at most `|lc(f)| * 2^deg(f) * ⌈‖f‖₂⌉` in absolute value
/// (Mignotte). Lifting stops at the first power of `l` exceeding twice this.
pub(crate) fn lifting_exponent(f: &[BigInt], l: u64) -> u32 {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = f.last().unwrap().abs() * (BigInt::one() << n) * isqrt_ceil(&norm2);
    let target = bound * 2;
    let lb = BigInt::from(l);
    let mut k = 1;
    let mut m = lb.clone();
    while m <= target {
        m *= &lb;
        k += 1;
    }
    k
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `target ≡ g * h (mod l)` with monic coprime `g, h` to mod `l^k`.
/// `target` must be monic modulo `l^k`.
fn lift_pair(target: &[BigInt], g: &FpPoly, h: &FpPoly, l: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = g.ext_gcd(h);
    debug_assert!(one.is_one());
    let lb = BigInt::from(l);
    let mut big_g = to_ints(g);
    let mut big_h = to_ints(h);
    let mut lj = lb.clone();
    for _ in 1..k {
        let next = &lj * &lb;
        let prod = mul(&big_g, &big_h);
        let n = target.len().max(prod.len());
        let err: ZPoly = (0..n)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next) / &lj
            })
            .collect();
        let e = FpPoly::from_ints(&err, l);
        if !e.is_zero() {
            let a = t.mul(&e).rem(g);
            let b = s.mul(&e).rem(h);
            big_g = add_scaled(&big_g, &to_ints(&a), &lj, &next);
            big_h = add_scaled(&big_h, &to_ints(&b), &lj, &next);
        }
        lj = next;
    }
    (big_g, big_h)
}

fn add_scaled(f: &[BigInt], delta: &[BigInt], scale: &BigInt, m: &BigInt) -> ZPoly {
    let n = f.len().max(delta.len());
    let out: ZPoly = (0..n)
        .map(|i| {
            let a = f.get(i).cloned().unwrap_or_default();
            let b = delta.get(i).cloned().unwrap_or_default();
            a + b * scale
        })
        .collect();
    reduce(&out, m)
}

fn product_mod_l(fs: &[FpPoly]) -> FpPoly {
    fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.mul(f))
}

/// Lifts the monic factorization `target ≡ Π factors (mod l)` to mod `l^k`.
pub(crate) fn hensel_lift(target: &[BigInt], factors: &[FpPoly], l: u64, k: u32) -> Vec<ZPoly> {
    let m = num_traits::pow(BigInt::from(l), k as usize);
    if factors.len() == 1 {
        return vec![reduce(target, &m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let (g, h) = lift_pair(target, &product_mod_l(left), &product_mod_l(right), l, k);
    let mut out = hensel_lift(&g, left, l, k);
    out.extend(hensel_lift(&h, right, l, k));
    out
}

/// Outcome of lifting plus recombination.
pub(crate) struct Recombined {
    pub factors: Vec<ZPoly>,
    pub exponent: u32,
}

/// Factors a primitive squarefree integer polynomial given its monic
/// irreducible factors modulo a good prime `l` (one not dividing the leading
/// coefficient, with `f mod l` squarefree).
///
/// `allowed` optionally restricts candidate factor degrees (from a degree
/// sieve); it only prunes the search, never changes the result.
pub(crate) fn factor_with_prime(
    f: &[BigInt],
    l: u64,
    mod_factors: &[FpPoly],
    allowed: Option<&BTreeSet<usize>>,
) -> Recombined {
    let k = lifting_exponent(f, l);
    if mod_factors.len() <= 1 {
        return Recombined {
            factors: vec![f.to_vec()],
            exponent: k,
        };
    }
    let m = num_traits::pow(BigInt::from(l), k as usize);
    let lc_inv = inverse_mod(f.last().unwrap(), &m);
    let target: ZPoly = f.iter().map(|c| (c * &lc_inv).mod_floor(&m)).collect();
    let mut lifted = hensel_lift(&target, mod_factors, l, k);

    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in Subsets::new(lifted.len(), size) {
            let deg: usize = subset.iter().map(|&i| lifted[i].len() - 1).sum();
            let rest_deg = rest.len() - 1;
            if let Some(allowed) = allowed {
                if !allowed.contains(&deg) && rest_deg == f.len() - 1 {
                    continue;
                }
            }
            let lc = rest.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &subset {
                cand = reduce(&mul(&cand, &lifted[i]), &m);
            }
            let cand = primitive(&symmetric(&cand, &m));
            if let Some(q) = div_exact(&rest, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(primitive(&rest));
    Recombined {
        factors: found,
        exponent: k,
    }
}

/// Lexicographic `size`-subsets of `0..n`.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, size: usize) -> Self {
        Subsets {
            n,
            idx: (0..size).collect(),
            done: size > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
