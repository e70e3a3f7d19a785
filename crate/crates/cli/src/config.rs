use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use rankforge::cover::{CurveEquation, CurveSpec, SuperellipticSpec};
use rankforge::exact::{format_rat, is_prime, parse_rat, rat, Rat, UniPoly};
use rankforge::irreducible::{parse_prime_list, FactorConfig};

use crate::CliError;

/// Curve description as written in curve files and catalog lines.
///
/// Coefficients are little-endian decimal strings, rationals as `"n/d"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurveFile {
    /// `g(y) = f(x)`.
    Plane { f: Vec<String>, g: Vec<String> },
    /// `y^d = x^k + D`.
    Superelliptic {
        d: String,
        k: String,
        #[serde(rename = "D")]
        constant: String,
    },
}

fn parse_coeffs(cs: &[String]) -> Result<UniPoly, CliError> {
    let coeffs = cs
        .iter()
        .map(|c| parse_rat(c).map_err(|e| CliError::Input(e.to_string())))
        .collect::<Result<Vec<Rat>, _>>()?;
    Ok(UniPoly::new(coeffs))
}

fn format_coeffs(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

pub(crate) fn parse_u64(s: &str, what: &str) -> Result<u64, CliError> {
    s.trim().parse().map_err(|_| {
        CliError::Input(format!(
            "{what}: expected a non-negative integer, got {s:?}"
        ))
    })
}

impl CurveFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn to_equation(&self) -> Result<CurveEquation, CliError> {
        let bad = |e: rankforge::cover::CoverError| CliError::Input(e.to_string());
        match self {
            CurveFile::Plane { f, g } => Ok(CurveSpec::new(parse_coeffs(f)?, parse_coeffs(g)?)
                .map_err(bad)?
                .into()),
            CurveFile::Superelliptic { d, k, constant } => {
                let constant = parse_rat(constant).map_err(|e| CliError::Input(e.to_string()))?;
                Ok(
                    SuperellipticSpec::new(parse_u64(d, "d")?, parse_u64(k, "k")?, constant)
                        .map_err(bad)?
                        .into(),
                )
            }
        }
    }

    pub fn from_equation(curve: &CurveEquation) -> Self {
        match curve {
            CurveEquation::Plane(c) => CurveFile::Plane {
                f: format_coeffs(c.f()),
                g: format_coeffs(c.g()),
            },
            CurveEquation::Superelliptic(s) => CurveFile::Superelliptic {
                d: s.d().to_string(),
                k: s.k().to_string(),
                constant: format_rat(s.constant()),
            },
        }
    }
}

/// Which construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathChoice {
    Thm1,
    Thm4,
    P2,
    P3,
    /// Superelliptic curves use thm4; `y^2 = cubic` uses p2/p3 for
    /// `p = 2, 3`; everything else uses thm1.
    Auto,
}

impl PathChoice {
    /// The concrete path for prime `p` on `curve`.
    pub fn resolve(self, curve: &CurveEquation, p: u64) -> PathChoice {
        match (self, curve) {
            (PathChoice::Auto, CurveEquation::Superelliptic(_)) => PathChoice::Thm4,
            (PathChoice::Auto, CurveEquation::Plane(c)) if c.is_elliptic_shape() && p == 2 => {
                PathChoice::P2
            }
            (PathChoice::Auto, CurveEquation::Plane(c)) if c.is_elliptic_shape() && p == 3 => {
                PathChoice::P3
            }
            (PathChoice::Auto, _) => PathChoice::Thm1,
            (other, _) => other,
        }
    }
}

/// Inclusive integer range `A..B`; `B < A` is empty.
pub fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Input(format!("expected a range A..B, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

/// Everything one `construct` run depends on.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub curve_file: CurveFile,
    pub curve: CurveEquation,
    pub q: Option<u64>,
    /// Ascending primes to construct for.
    pub primes: Vec<u64>,
    /// Inclusive `u0` bounds.
    pub u0_range: (i64, i64),
    /// At most this many `u0` values per prime.
    pub budget: Option<usize>,
    pub fingerprint_primes: Option<Vec<u64>>,
    pub path: PathChoice,
    pub factor: FactorConfig,
    pub out: Option<PathBuf>,
}

/// Raw, unvalidated construct options.
#[derive(Clone, Debug, Default)]
pub struct ConstructArgs {
    pub curve: PathBuf,
    pub q: Option<u64>,
    pub p: Option<u64>,
    pub p_range: Option<String>,
    pub u0_range: Option<String>,
    pub budget: Option<usize>,
    pub fingerprint_primes: Option<String>,
    pub path: Option<PathChoice>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &ConstructArgs) -> Result<Self, CliError> {
        let curve_file = CurveFile::load(&args.curve)?;
        let curve = curve_file.to_equation()?;
        if let Some(q) = args.q {
            if !is_prime(q) {
                return Err(CliError::Input(format!("q = {q} is not prime")));
            }
        }
        let primes = match (&args.p, &args.p_range) {
            (Some(p), None) => {
                if !is_prime(*p) {
                    return Err(CliError::Input(format!("p = {p} is not prime")));
                }
                vec![*p]
            }
            (None, Some(r)) => {
                let (a, b) = parse_range(r)?;
                (a.max(0)..=b)
                    .map(|p| p as u64)
                    .filter(|&p| is_prime(p))
                    .collect()
            }
            _ => {
                return Err(CliError::Input(
                    "exactly one of --p and --p-range is required".into(),
                ))
            }
        };
        let u0_range = match &args.u0_range {
            Some(r) => parse_range(r)?,
            None => (1, 20),
        };
        let fingerprint_primes = match &args.fingerprint_primes {
            Some(list) => Some(parse_prime_list(list).map_err(|e| CliError::Input(e.to_string()))?),
            None => None,
        };
        let factor = FactorConfig::from_env().map_err(|e| CliError::Input(e.to_string()))?;
        Ok(RunConfig {
            curve_file,
            curve,
            q: args.q,
            primes,
            u0_range,
            budget: args.budget,
            fingerprint_primes,
            path: args.path.unwrap_or(PathChoice::Auto),
            factor,
            out: args.out.clone(),
        })
    }

    pub fn u0_values(&self) -> Vec<Rat> {
        let (a, b) = self.u0_range;
        let all = (a..=b).map(rat);
        match self.budget {
            Some(n) => all.take(n).collect(),
            None => all.collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_file_round_trip() {
        let text =
            "kind = \"plane\"\nf = [\"8\", \"8\", \"0\", \"1\"]\ng = [\"0\", \"0\", \"1\"]\n";
        let cf: CurveFile = toml::from_str(text).unwrap();
        let eq = cf.to_equation().unwrap();
        assert_eq!(
            eq,
            CurveEquation::Plane(CurveSpec::weierstrass(rat(8), rat(8)))
        );
        assert_eq!(CurveFile::from_equation(&eq), cf);
        let text = "kind = \"superelliptic\"\nd = \"2\"\nk = \"4\"\nD = \"1\"\n";
        let cf: CurveFile = toml::from_str(text).unwrap();
        assert_eq!(CurveFile::from_equation(&cf.to_equation().unwrap()), cf);
    }

    #[test]
    fn bad_curves_are_input_errors() {
        let cf = CurveFile::Plane {
            f: vec!["1".into(), "2".into()],
            g: vec!["0".into(), "x".into()],
        };
        assert!(matches!(cf.to_equation(), Err(CliError::Input(_))));
        let cf = CurveFile::Plane {
            f: vec!["1".into(), "2".into()],
            g: vec!["0".into(), "3".into()],
        };
        assert!(matches!(cf.to_equation(), Err(CliError::Input(_))));
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..20").unwrap(), (1, 20));
        assert_eq!(parse_range("-3..4").unwrap(), (-3, 4));
        assert!(parse_range("1-20").is_err());
    }

    #[test]
    fn auto_paths() {
        let e = CurveEquation::Plane(CurveSpec::weierstrass(rat(8), rat(8)));
        assert_eq!(PathChoice::Auto.resolve(&e, 2), PathChoice::P2);
        assert_eq!(PathChoice::Auto.resolve(&e, 3), PathChoice::P3);
        assert_eq!(PathChoice::Auto.resolve(&e, 5), PathChoice::Thm1);
        assert_eq!(PathChoice::Thm1.resolve(&e, 3), PathChoice::Thm1);
        let s = CurveEquation::Superelliptic(SuperellipticSpec::new(2, 4, rat(1)).unwrap());
        assert_eq!(PathChoice::Auto.resolve(&s, 7), PathChoice::Thm4);
    }
}
