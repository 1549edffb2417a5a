use std::collections::BTreeMap;
use std::path::Path;

use at4_core::feasibility::{check_mu_candidate, feasibility_report, lem1_numerator, Registry};
use at4_core::oracle::{integral_spectrum, read_edge_list, run_oracle, OracleName};
use at4_core::table::table1;
use at4_core::{AT4Params, ExactScalar};
use rayon::prelude::*;

use crate::document::{CandidateReport, EnumerationRequest, ReportDocument, Request, ScanEntry};

/// Failure modes that map to exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Exit code 2.
    InvalidInput(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::InvalidInput(m) => write!(f, "invalid input: {m}"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::InvalidInput(msg.into())
}

/// Registry named by the environment (or the bundled one), or none.
pub fn load_registry(enabled: bool) -> Result<Option<Registry>, CliError> {
    if !enabled {
        return Ok(None);
    }
    Registry::from_env()
        .map(Some)
        .map_err(|e| invalid(format!("registry: {e}")))
}

fn params(p: i64, q: i64, r: i64) -> Result<AT4Params, CliError> {
    AT4Params::new(p, q, r).map_err(|e| invalid(e.to_string()))
}

pub fn cmd_check(
    p: i64,
    q: i64,
    r: i64,
    registry: bool,
    mu_candidate: Option<&Path>,
) -> Result<ReportDocument, CliError> {
    let params = params(p, q, r)?;
    let reg = load_registry(registry)?;
    let mut report: CandidateReport = feasibility_report(&params, reg.as_ref()).into();
    if let Some(path) = mu_candidate {
        let g = read_edge_list(path).map_err(|e| invalid(format!("mu-candidate: {e}")))?;
        let spec = integral_spectrum(&g)
            .map_err(|e| invalid(format!("mu-candidate {}: {e}", path.display())))?;
        report.mu_candidate = Some(check_mu_candidate(&params, &spec));
    }
    let mut doc = ReportDocument::new(Request::Check {
        p,
        q,
        r,
        registry,
        mu_candidate: mu_candidate.map(|p| p.display().to_string()),
    });
    doc.count(&report.status);
    doc.reports.push(report);
    Ok(doc)
}

pub fn cmd_enumerate(req: &EnumerationRequest) -> Result<ReportDocument, CliError> {
    req.validate().map_err(invalid)?;
    let reg = load_registry(req.registry)?;
    let candidates = req.candidates();
    let mut reports: Vec<CandidateReport> = candidates
        .par_iter()
        .map(|c| feasibility_report(c, reg.as_ref()).into())
        .collect();
    reports.sort_by_key(|r| r.key());
    let mut doc = ReportDocument::new(Request::Enumerate(req.clone()));
    for r in &reports {
        doc.count(&r.status);
    }
    doc.reports = reports
        .into_iter()
        .filter(|r| req.all || r.status.survives())
        .collect();
    Ok(doc)
}

pub fn cmd_table1() -> Result<ReportDocument, CliError> {
    let reg = Registry::from_env().map_err(|e| invalid(format!("registry: {e}")))?;
    let rows = table1(&reg);
    let mut doc = ReportDocument::new(Request::Table1);
    let mut reports: Vec<CandidateReport> = rows
        .iter()
        .map(|row| feasibility_report(&row.params, Some(&reg)).into())
        .collect();
    reports.sort_by_key(|r| r.key());
    for r in &reports {
        doc.count(&r.status);
    }
    doc.reports = reports;
    doc.table = Some(rows);
    Ok(doc)
}

fn factorize(mut n: u128, into: &mut BTreeMap<u128, u32>) {
    let mut d = 2u128;
    while d * d <= n {
        while n % d == 0 {
            *into.entry(d).or_default() += 1;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        *into.entry(n).or_default() += 1;
    }
}

/// Divisors of `r(r-2)(r-1)^2(r^2-r-1)` via factoring each factor.
fn lem1_divisors(r: i64) -> Vec<i128> {
    let mut f = BTreeMap::new();
    for part in [r, r - 2, r - 1, r - 1, r * r - r - 1] {
        factorize(part as u128, &mut f);
    }
    let n = ExactScalar::from(lem1_numerator(r));
    let mut out = vec![1i128];
    for (prime, exp) in f {
        let mut next = Vec::new();
        for &d in &out {
            let mut x = d;
            for _ in 0..=exp {
                next.push(x);
                x *= prime as i128;
            }
        }
        out = next;
    }
    out.sort_unstable();
    debug_assert!(out.iter().all(|&d| (&n / ExactScalar::from(d)).is_integer()));
    out
}

pub const LEM1_MAX_R: i64 = 1000;

/// All `q >= 2` with `(q + r) | r(r-2)(r-1)^2(r^2-r-1)` and the
/// corresponding `p = (q^3 - rq)/(r - 1)`, each fully gated when integral.
pub fn cmd_lem1_scan(r: i64) -> Result<ReportDocument, CliError> {
    if r <= 2 {
        return Err(invalid(format!("lem1-scan needs r > 2, got {r}")));
    }
    if r > LEM1_MAX_R {
        return Err(invalid(format!("lem1-scan supports r <= {LEM1_MAX_R}, got {r}")));
    }
    let reg = Registry::from_env().map_err(|e| invalid(format!("registry: {e}")))?;
    let mut doc = ReportDocument::new(Request::Lem1Scan { r });
    let mut scan = Vec::new();
    for d in lem1_divisors(r) {
        let q = d - r as i128;
        if q < 2 {
            continue;
        }
        let qs = ExactScalar::from(q);
        let p = (qs.pow(3) - &qs * ExactScalar::from_int(r)) / ExactScalar::from_int(r - 1);
        let checked = p
            .to_i64()
            .zip(i64::try_from(q).ok())
            .and_then(|(p, q)| AT4Params::new(p, q, r).ok());
        let (status, note) = match checked {
            Some(params) => {
                let report: CandidateReport = feasibility_report(&params, Some(&reg)).into();
                let status = report.status.clone();
                doc.count(&status);
                doc.reports.push(report);
                (Some(status), String::new())
            }
            None if !p.is_integer() => (None, "p is not an integer".to_string()),
            None if !p.is_positive() => (None, "p < 1".to_string()),
            None => (None, "parameters exceed the supported range".to_string()),
        };
        scan.push(ScanEntry {
            q,
            p: p.to_string(),
            status,
            note,
        });
    }
    doc.reports.sort_by_key(|r| r.key());
    doc.scan = Some(scan);
    Ok(doc)
}

pub fn cmd_oracle(name: OracleName) -> ReportDocument {
    let mut doc = ReportDocument::new(Request::Oracle { name });
    doc.oracle = Some(run_oracle(name));
    doc
}
