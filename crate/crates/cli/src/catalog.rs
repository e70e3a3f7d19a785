//! One JSON object per line; every number is a decimal string.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use rankforge::cover::{Construction, CoverPlan, ExtensionRecord, LPoint, SuperCoverPlan};
use rankforge::exact::{format_rat, parse_rat, QuotElem, Rat, UniPoly, Valuation};
use rankforge::irreducible::{
    EisensteinCertificate, Factorization, LiftCertificate, ModularCertificate, Verdict, VerdictKind,
};
use rankforge::witness::{FieldFingerprint, VerificationReport};

use crate::config::{parse_u64, CurveFile};
use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Accepted,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictWire {
    pub kind: String,
    pub payload: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointWire {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportWire {
    pub on_curve: bool,
    pub strictly_l: bool,
    pub s_integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintWire {
    /// `[prime, degrees]`, degrees `null` for skipped primes.
    pub patterns: Vec<(String, Option<Vec<String>>)>,
    /// `[prime, valuation]`, valuation `"inf"` for a zero discriminant.
    pub disc_valuations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogLine {
    pub schema_version: String,
    pub status: Status,
    pub construction: String,
    pub curve: CurveFile,
    pub q: Option<String>,
    pub p: String,
    pub plan: BTreeMap<String, String>,
    pub u0: String,
    pub defining_poly: Vec<String>,
    pub verdict: VerdictWire,
    pub point: Option<PointWire>,
    pub report: Option<ReportWire>,
    pub fingerprint: Option<FingerprintWire>,
}

#[derive(Serialize, Deserialize)]
struct EisensteinWire {
    prime: String,
    content_valuation: String,
    leading_valuation: String,
    verified: bool,
}

#[derive(Serialize, Deserialize)]
struct ModularWire {
    patterns: Vec<(String, Vec<String>)>,
}

#[derive(Serialize, Deserialize)]
struct LiftWire {
    prime: String,
    exponent: String,
    modular_factors: String,
}

#[derive(Serialize, Deserialize)]
struct FactorWire {
    poly: Vec<String>,
    multiplicity: String,
}

#[derive(Serialize, Deserialize)]
struct ReducibleWire {
    unit: String,
    factors: Vec<FactorWire>,
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn poly_strs(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

fn json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("wire types serialize")
}

fn verdict_to_wire(v: &Verdict) -> VerdictWire {
    let modular = |c: &ModularCertificate| {
        json(&ModularWire {
            patterns: c
                .patterns
                .iter()
                .map(|(l, d)| (l.to_string(), strs(d)))
                .collect(),
        })
    };
    let payload = match v {
        Verdict::IrreducibleEisenstein(c) => json(&EisensteinWire {
            prime: c.prime.to_string(),
            content_valuation: c.content_valuation.to_string(),
            leading_valuation: c.leading_valuation.to_string(),
            verified: c.verified,
        }),
        Verdict::IrreducibleModular(c) | Verdict::Inconclusive(c) => modular(c),
        Verdict::IrreducibleLifted(c) => json(&LiftWire {
            prime: c.prime.to_string(),
            exponent: c.exponent.to_string(),
            modular_factors: c.modular_factors.to_string(),
        }),
        Verdict::Reducible(f) => json(&ReducibleWire {
            unit: format_rat(&f.unit),
            factors: f
                .factors
                .iter()
                .map(|(g, m)| FactorWire {
                    poly: poly_strs(g),
                    multiplicity: m.to_string(),
                })
                .collect(),
        }),
    };
    VerdictWire {
        kind: v.kind().to_string(),
        payload,
    }
}

fn fingerprint_to_wire(fp: &FieldFingerprint) -> FingerprintWire {
    FingerprintWire {
        patterns: fp
            .patterns
            .iter()
            .map(|(l, d)| (l.to_string(), d.as_ref().map(|d| strs(d))))
            .collect(),
        disc_valuations: fp
            .disc_valuations
            .iter()
            .map(|(l, v)| {
                let v = match v {
                    Valuation::Finite(v) => v.to_string(),
                    Valuation::Infinite => "inf".to_string(),
                };
                (l.to_string(), v)
            })
            .collect(),
    }
}

fn plan_map(c: &Construction) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        m.insert(k.to_string(), v);
    };
    match c {
        Construction::Coprime(p) => {
            put("a", p.a.to_string());
            put("b", p.b.to_string());
            put("mu", p.mu.to_string());
            put("nu", p.nu.to_string());
            put("bound_n", p.bound_n.to_string());
            put("swapped", p.swapped.to_string());
            put("scale_e", p.scale_e.to_string());
            put("d", p.d.to_string());
            put("k", p.k.to_string());
        }
        Construction::Superelliptic(p) => {
            put("n_lcm", p.n_lcm.to_string());
            put("s", p.s.to_string());
            put("r", p.r.to_string());
            put("d_scaled", format_rat(&p.d_scaled));
            put("c1", p.c1.to_string());
            put("c2", p.c2.to_string());
            put("d", p.d.to_string());
            put("k", p.k.to_string());
        }
        Construction::SmallPrime { .. } => {}
    }
    m
}

impl CatalogLine {
    pub fn from_record(rec: &ExtensionRecord) -> Self {
        let status = if rec.is_accepted() {
            Status::Accepted
        } else {
            Status::Skipped
        };
        CatalogLine {
            schema_version: SCHEMA_VERSION.to_string(),
            status,
            construction: rec.construction.tag().to_string(),
            curve: CurveFile::from_equation(&rec.curve),
            q: rec.construction.q().map(|q| q.to_string()),
            p: rec.construction.p().to_string(),
            plan: plan_map(&rec.construction),
            u0: format_rat(&rec.u0),
            defining_poly: poly_strs(&rec.defining_poly),
            verdict: verdict_to_wire(&rec.verdict),
            point: rec.point.as_ref().map(|pt| PointWire {
                x: poly_strs(pt.x.rep()),
                y: poly_strs(pt.y.rep()),
            }),
            report: rec.checks.as_ref().map(|c| ReportWire {
                on_curve: c.on_curve,
                strictly_l: c.strictly_l,
                s_integral: c.s_integral,
            }),
            fingerprint: rec
                .checks
                .as_ref()
                .map(|c| fingerprint_to_wire(&c.fingerprint)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("catalog lines serialize")
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    /// Rebuilds the record exactly as it was serialized.
    pub fn to_record(&self) -> Result<ExtensionRecord, CliError> {
        let curve = self.curve.to_equation()?;
        let p = parse_u64(&self.p, "p")?;
        let q = self.q.as_deref().map(|q| parse_u64(q, "q")).transpose()?;
        let construction = self.construction(p, q)?;
        let defining_poly = parse_poly(&self.defining_poly)?;
        let verdict = self.verdict()?;
        let point = match &self.point {
            Some(pw) => {
                let m = Arc::new(defining_poly.clone());
                let elem = |cs: &[String]| {
                    QuotElem::new(m.clone(), parse_poly(cs)?)
                        .map_err(|e| CliError::Input(e.to_string()))
                };
                Some(LPoint {
                    x: elem(&pw.x)?,
                    y: elem(&pw.y)?,
                })
            }
            None => None,
        };
        let checks = match (&self.report, &self.fingerprint) {
            (Some(r), Some(fp)) => Some(VerificationReport {
                on_curve: r.on_curve,
                strictly_l: r.strictly_l,
                s_integral: r.s_integral,
                fingerprint: parse_fingerprint(fp)?,
            }),
            (None, None) => None,
            _ => {
                return Err(CliError::Input(
                    "report and fingerprint must appear together".into(),
                ))
            }
        };
        Ok(ExtensionRecord {
            construction,
            curve,
            u0: parse_rat_field(&self.u0)?,
            defining_poly,
            verdict,
            point,
            checks,
        })
    }

    fn plan_u64(&self, key: &str) -> Result<u64, CliError> {
        let v = self
            .plan
            .get(key)
            .ok_or_else(|| CliError::Input(format!("plan field {key} missing")))?;
        parse_u64(v, key)
    }

    fn construction(&self, p: u64, q: Option<u64>) -> Result<Construction, CliError> {
        let need_q = || q.ok_or_else(|| CliError::Input("q missing".into()));
        Ok(match self.construction.as_str() {
            "thm1" => Construction::Coprime(CoverPlan {
                q: need_q()?,
                a: self.plan_u64("a")?,
                b: self.plan_u64("b")?,
                mu: self.plan_u64("mu")?,
                nu: self.plan_u64("nu")?,
                p,
                bound_n: self.plan_u64("bound_n")?,
                swapped: match self.plan.get("swapped").map(String::as_str) {
                    Some("true") => true,
                    Some("false") => false,
                    _ => return Err(CliError::Input("plan field swapped invalid".into())),
                },
                scale_e: self.plan_u64("scale_e")? as u32,
                d: self.plan_u64("d")?,
                k: self.plan_u64("k")?,
            }),
            "thm4" => Construction::Superelliptic(SuperCoverPlan {
                q: need_q()?,
                n_lcm: self.plan_u64("n_lcm")?,
                s: self.plan_u64("s")?,
                r: self.plan_u64("r")?,
                p,
                d_scaled: parse_rat_field(self.plan.get("d_scaled").map_or("", String::as_str))?,
                c1: self.plan_u64("c1")?,
                c2: self.plan_u64("c2")?,
                d: self.plan_u64("d")?,
                k: self.plan_u64("k")?,
            }),
            "p2" | "p3" if p == 2 || p == 3 => Construction::SmallPrime { p },
            other => {
                return Err(CliError::Input(format!(
                    "unknown construction {other:?} for p = {p}"
                )))
            }
        })
    }

    fn verdict(&self) -> Result<Verdict, CliError> {
        let kind: VerdictKind = self.verdict.kind.parse().map_err(CliError::Input)?;
        let payload = self.verdict.payload.clone();
        let bad = |e: serde_json::Error| CliError::Input(format!("verdict payload: {e}"));
        let modular = |v: Value| -> Result<ModularCertificate, CliError> {
            let w: ModularWire = serde_json::from_value(v).map_err(bad)?;
            let patterns = w
                .patterns
                .iter()
                .map(|(l, ds)| {
                    let degs = ds
                        .iter()
                        .map(|d| parse_u64(d, "degree").map(|d| d as usize))
                        .collect::<Result<_, _>>()?;
                    Ok((parse_u64(l, "prime")?, degs))
                })
                .collect::<Result<_, CliError>>()?;
            Ok(ModularCertificate { patterns })
        };
        Ok(match kind {
            VerdictKind::IrreducibleEisenstein => {
                let w: EisensteinWire = serde_json::from_value(payload).map_err(bad)?;
                Verdict::IrreducibleEisenstein(EisensteinCertificate {
                    prime: parse_u64(&w.prime, "prime")?,
                    content_valuation: parse_u64(&w.content_valuation, "content_valuation")?,
                    leading_valuation: parse_u64(&w.leading_valuation, "leading_valuation")?,
                    verified: w.verified,
                })
            }
            VerdictKind::IrreducibleModular => Verdict::IrreducibleModular(modular(payload)?),
            VerdictKind::Inconclusive => Verdict::Inconclusive(modular(payload)?),
            VerdictKind::IrreducibleLifted => {
                let w: LiftWire = serde_json::from_value(payload).map_err(bad)?;
                Verdict::IrreducibleLifted(LiftCertificate {
                    prime: parse_u64(&w.prime, "prime")?,
                    exponent: parse_u64(&w.exponent, "exponent")? as u32,
                    modular_factors: parse_u64(&w.modular_factors, "modular_factors")? as usize,
                })
            }
            VerdictKind::Reducible => {
                let w: ReducibleWire = serde_json::from_value(payload).map_err(bad)?;
                let factors = w
                    .factors
                    .iter()
                    .map(|f| {
                        Ok((
                            parse_poly(&f.poly)?,
                            parse_u64(&f.multiplicity, "multiplicity")? as usize,
                        ))
                    })
                    .collect::<Result<_, CliError>>()?;
                Verdict::Reducible(Factorization {
                    unit: parse_rat_field(&w.unit)?,
                    factors,
                })
            }
        })
    }
}

fn parse_rat_field(s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_poly(cs: &[String]) -> Result<UniPoly, CliError> {
    Ok(UniPoly::new(
        cs.iter()
            .map(|c| parse_rat_field(c))
            .collect::<Result<_, _>>()?,
    ))
}

fn parse_fingerprint(fp: &FingerprintWire) -> Result<FieldFingerprint, CliError> {
    let patterns = fp
        .patterns
        .iter()
        .map(|(l, ds)| {
            let degs = match ds {
                Some(ds) => Some(
                    ds.iter()
                        .map(|d| parse_u64(d, "degree").map(|d| d as usize))
                        .collect::<Result<_, _>>()?,
                ),
                None => None,
            };
            Ok((parse_u64(l, "prime")?, degs))
        })
        .collect::<Result<_, CliError>>()?;
    let disc_valuations = fp
        .disc_valuations
        .iter()
        .map(|(l, v)| {
            let v = match v.as_str() {
                "inf" => Valuation::Infinite,
                v => Valuation::Finite(
                    v.parse()
                        .map_err(|_| CliError::Input(format!("bad valuation {v:?}")))?,
                ),
            };
            Ok((parse_u64(l, "prime")?, v))
        })
        .collect::<Result<_, CliError>>()?;
    Ok(FieldFingerprint {
        patterns,
        disc_valuations,
    })
}

/// The fingerprint primes a line was checked with.
pub fn fingerprint_primes(line: &CatalogLine) -> Result<Vec<u64>, CliError> {
    match &line.fingerprint {
        Some(fp) => fp
            .patterns
            .iter()
            .map(|(l, _)| parse_u64(l, "prime"))
            .collect(),
        None => Ok(Vec::new()),
    }
}
