//! Number fields of prime degree carrying points of plane curves.
//!
//! [`cover`] builds the covers and lifts points, [`irreducible`] certifies
//! the defining polynomials, [`witness`] checks the points and fingerprints
//! the fields, and [`exact`] does the arithmetic underneath.
//!
//! ```
//! use rankforge::cover::{CurveSpec, CoprimeCover};
//! use rankforge::exact::rat;
//! use rankforge::irreducible::FactorConfig;
//!
//! let cover = CoprimeCover::new(&CurveSpec::weierstrass(rat(8), rat(8)), 2, 7).unwrap();
//! let rec = cover.record(&rat(2), &FactorConfig::default()).unwrap();
//! assert_eq!(rec.defining_poly.degree(), Some(7));
//! assert!(rec.verdict.is_irreducible());
//! ```

pub mod cover;
pub mod exact;
pub mod irreducible;
pub mod witness;
