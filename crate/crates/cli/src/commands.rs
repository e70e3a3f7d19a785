use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::Serialize;

use rankforge::cover::{
    small_prime_paths, CoprimeCover, CoverError, CurveEquation, ExtensionRecord, SuperCover,
};
use rankforge::exact::Rat;
use rankforge::irreducible::{recheck_verdict, FactorConfig};
use rankforge::witness::{
    default_fingerprint_primes, fingerprint, partition_fingerprints, verify_record,
    FieldFingerprint,
};

use crate::catalog::{fingerprint_primes, CatalogLine, Status, SCHEMA_VERSION};
use crate::config::{PathChoice, RunConfig};
use crate::CliError;

enum Builder {
    Thm1(CoprimeCover),
    Thm4(SuperCover),
    Small(rankforge::cover::CurveSpec, u64),
}

impl Builder {
    fn new(cfg: &RunConfig, p: u64) -> Result<Self, CliError> {
        let path = cfg.path.resolve(&cfg.curve, p);
        let need_q = || {
            cfg.q
                .ok_or_else(|| CliError::Input(format!("--q is required for the {path:?} path")))
        };
        let cover_err = |e: CoverError| {
            if e.is_representation_failure() {
                CliError::Representation(e.to_string())
            } else {
                CliError::Input(e.to_string())
            }
        };
        match (path, &cfg.curve) {
            (PathChoice::Thm1, CurveEquation::Plane(c)) => Ok(Builder::Thm1(
                CoprimeCover::new(c, need_q()?, p).map_err(cover_err)?,
            )),
            (PathChoice::Thm4, CurveEquation::Superelliptic(s)) => Ok(Builder::Thm4(
                SuperCover::new(s, need_q()?, p).map_err(cover_err)?,
            )),
            (PathChoice::P2 | PathChoice::P3, CurveEquation::Plane(c)) => {
                let want = if path == PathChoice::P2 { 2 } else { 3 };
                if p != want {
                    return Err(CliError::Input(format!(
                        "the {path:?} path needs p = {want}, got {p}"
                    )));
                }
                if !c.is_elliptic_shape() {
                    return Err(CliError::Input(CoverError::NotEllipticShape.to_string()));
                }
                Ok(Builder::Small(c.clone(), p))
            }
            (path, curve) => Err(CliError::Input(format!(
                "path {path:?} does not apply to {curve}"
            ))),
        }
    }

    fn record(&self, u0: &Rat, cfg: &FactorConfig) -> Result<ExtensionRecord, CoverError> {
        match self {
            Builder::Thm1(c) => c.record(u0, cfg),
            Builder::Thm4(c) => c.record(u0, cfg),
            Builder::Small(c, p) => small_prime_paths(c, *p, u0, cfg),
        }
    }

    fn q(&self) -> Option<u64> {
        match self {
            Builder::Thm1(c) => Some(c.plan.q),
            Builder::Thm4(c) => Some(c.plan.q),
            Builder::Small(..) => None,
        }
    }
}

/// Per-prime counts of one construct run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSummary {
    pub p: u64,
    pub construction: String,
    pub attempted: usize,
    pub skipped: usize,
    pub accepted: usize,
    pub distinct_classes: usize,
}

/// Builds, certifies and verifies records for every configured prime, writing
/// one catalog line per attempt.
pub fn construct(cfg: &RunConfig, out: &mut dyn Write) -> Result<Vec<PrimeSummary>, CliError> {
    let u0s = cfg.u0_values();
    let mut summaries = Vec::new();
    for &p in &cfg.primes {
        let builder = Builder::new(cfg, p)?;
        let fp_primes = cfg
            .fingerprint_primes
            .clone()
            .unwrap_or_else(|| default_fingerprint_primes(builder.q()));
        let records: Vec<ExtensionRecord> = u0s
            .par_iter()
            .map(|u0| {
                let mut rec = builder
                    .record(u0, &cfg.factor)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                rec.checks = verify_record(&rec, &fp_primes)
                    .map_err(|e| CliError::Verification(e.to_string()))?;
                Ok(rec)
            })
            .collect::<Result<_, CliError>>()?;
        let mut summary = PrimeSummary {
            p,
            construction: String::new(),
            attempted: records.len(),
            skipped: 0,
            accepted: 0,
            distinct_classes: 0,
        };
        let mut fps = Vec::new();
        for rec in &records {
            summary.construction = rec.construction.tag().to_string();
            if rec.verdict.is_irreducible() {
                let checks = rec.checks.as_ref().expect("irreducible records are lifted");
                if let Some(fail) = checks.first_failure() {
                    return Err(CliError::Verification(format!(
                        "p = {p}, u0 = {}: accepted record fails {fail}",
                        rec.u0
                    )));
                }
                summary.accepted += 1;
                fps.push(checks.fingerprint.clone());
            } else {
                summary.skipped += 1;
            }
            writeln!(out, "{}", CatalogLine::from_record(rec).to_json())?;
        }
        summary.distinct_classes = partition_fingerprints(&fps).class_count();
        summaries.push(summary);
    }
    Ok(summaries)
}

/// Parsed catalog lines with their 1-based line numbers; blank lines ignored.
pub fn read_catalog(reader: impl BufRead) -> Result<Vec<(usize, CatalogLine)>, CliError> {
    let mut lines = Vec::new();
    for (i, text) in reader.lines().enumerate() {
        let text = text?;
        if text.trim().is_empty() {
            continue;
        }
        let line = CatalogLine::parse(&text).map_err(|msg| CliError::Parse { line: i + 1, msg })?;
        lines.push((i + 1, line));
    }
    Ok(lines)
}

/// First failing check of one catalog line, re-derived from the line alone.
pub fn check_line(line: &CatalogLine) -> Result<Option<&'static str>, CliError> {
    if line.schema_version != SCHEMA_VERSION {
        return Ok(Some("schema_version"));
    }
    let rec = line.to_record()?;
    // the defining polynomial must be what the stated construction produces
    let Some(rebuilt) = rebuild(&rec) else {
        return Ok(Some("plan"));
    };
    if rebuilt.construction != rec.construction {
        return Ok(Some("plan"));
    }
    if rebuilt.defining_poly != rec.defining_poly {
        return Ok(Some("defining_poly"));
    }
    if !recheck_verdict(&rec.defining_poly, &rec.verdict) {
        return Ok(Some("verdict"));
    }
    match line.status {
        Status::Skipped => {
            if rec.verdict.is_irreducible() || rec.point.is_some() || rec.checks.is_some() {
                return Ok(Some("status"));
            }
        }
        Status::Accepted => {
            if !rec.verdict.is_irreducible() {
                return Ok(Some("status"));
            }
            let Some(stored) = &rec.checks else {
                return Ok(Some("report"));
            };
            let primes = fingerprint_primes(line)?;
            let Some(fresh) =
                verify_record(&rec, &primes).map_err(|e| CliError::Input(e.to_string()))?
            else {
                return Ok(Some("point"));
            };
            if let Some(fail) = fresh.first_failure() {
                return Ok(Some(fail));
            }
            if &fresh != stored {
                return Ok(Some(if fresh.fingerprint != stored.fingerprint {
                    "fingerprint"
                } else {
                    "report"
                }));
            }
        }
    }
    Ok(None)
}

fn rebuild(rec: &ExtensionRecord) -> Option<ExtensionRecord> {
    use rankforge::cover::Construction;
    let cfg = FactorConfig {
        sieve_only: true,
        ..FactorConfig::default()
    };
    let built = match (&rec.construction, &rec.curve) {
        (Construction::Coprime(plan), CurveEquation::Plane(c)) => {
            CoprimeCover::new(c, plan.q, plan.p)
                .map(|cover| (cover.plan.clone(), cover.h.specialize(&rec.u0)))
                .map(|(plan, poly)| (Construction::Coprime(plan), poly))
        }
        (Construction::Superelliptic(plan), CurveEquation::Superelliptic(s)) => {
            SuperCover::new(s, plan.q, plan.p).map(|cover| {
                (
                    Construction::Superelliptic(cover.plan.clone()),
                    cover.h.specialize(&rec.u0),
                )
            })
        }
        (Construction::SmallPrime { p }, CurveEquation::Plane(c)) => {
            small_prime_paths(c, *p, &rec.u0, &cfg).map(|r| (r.construction, r.defining_poly))
        }
        _ => return None,
    };
    built
        .ok()
        .map(|(construction, defining_poly)| ExtensionRecord {
            construction,
            defining_poly,
            ..rec.clone()
        })
}

/// Outcome of `verify`: failing `(line, check)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub checked: usize,
    pub failures: Vec<(usize, String)>,
}

pub fn verify(reader: impl BufRead, out: &mut dyn Write) -> Result<VerifyOutcome, CliError> {
    let lines = read_catalog(reader)?;
    let results: Vec<Result<Option<&'static str>, CliError>> =
        lines.par_iter().map(|(_, line)| check_line(line)).collect();
    let mut outcome = VerifyOutcome {
        checked: lines.len(),
        failures: Vec::new(),
    };
    for ((n, _), res) in lines.iter().zip(results) {
        match res.map_err(|e| CliError::Parse {
            line: *n,
            msg: e.to_string(),
        })? {
            None => writeln!(out, "line {n}: ok")?,
            Some(check) => {
                writeln!(out, "line {n}: FAIL {check}")?;
                outcome.failures.push((*n, check.to_string()));
            }
        }
    }
    Ok(outcome)
}

/// Coverage of one `(curve, construction, p)` group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub curve: String,
    pub construction: String,
    pub p: String,
    pub attempted: String,
    pub accepted: String,
    pub skipped: String,
    /// `skipped/attempted`, unreduced.
    pub skip_ratio: String,
    pub distinct_classes: String,
    pub indistinguishable_records: String,
    pub verdicts: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub groups: Vec<GroupReport>,
}

pub fn report(reader: impl BufRead) -> Result<CatalogReport, CliError> {
    #[derive(Default)]
    struct Acc {
        attempted: usize,
        accepted: usize,
        fps: Vec<FieldFingerprint>,
        verdicts: BTreeMap<String, usize>,
    }
    let mut groups: BTreeMap<(String, String, u64), Acc> = BTreeMap::new();
    for (n, line) in read_catalog(reader)? {
        let rec = line.to_record().map_err(|e| CliError::Parse {
            line: n,
            msg: e.to_string(),
        })?;
        let key = (
            rec.curve.to_string(),
            line.construction.clone(),
            rec.construction.p(),
        );
        let acc = groups.entry(key).or_default();
        acc.attempted += 1;
        *acc.verdicts.entry(line.verdict.kind.clone()).or_default() += 1;
        if line.status == Status::Accepted {
            acc.accepted += 1;
            let fp = match rec.checks {
                Some(c) => c.fingerprint,
                None => fingerprint(
                    &rec.defining_poly,
                    &default_fingerprint_primes(rec.construction.q()),
                ),
            };
            acc.fps.push(fp);
        }
    }
    let groups = groups
        .into_iter()
        .map(|((curve, construction, p), acc)| {
            let part = partition_fingerprints(&acc.fps);
            let skipped = acc.attempted - acc.accepted;
            GroupReport {
                curve,
                construction,
                p: p.to_string(),
                attempted: acc.attempted.to_string(),
                accepted: acc.accepted.to_string(),
                skipped: skipped.to_string(),
                skip_ratio: format!("{skipped}/{}", acc.attempted),
                distinct_classes: part.class_count().to_string(),
                indistinguishable_records: part
                    .indistinguishable()
                    .map(|c| c.len())
                    .sum::<usize>()
                    .to_string(),
                verdicts: acc
                    .verdicts
                    .into_iter()
                    .map(|(k, v)| (k, v.to_string()))
                    .collect(),
            }
        })
        .collect();
    Ok(CatalogReport { groups })
}
