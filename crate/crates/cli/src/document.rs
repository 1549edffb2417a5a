//! Report documents shared by every subcommand and output format.

use std::collections::BTreeMap;

use at4_core::feasibility::{
    Case, ConditionResult, FeasibilityReport, MuGraphEqualityData, RegistryHit, ReportSpectra,
    Status,
};
use at4_core::oracle::{OracleName, OracleReport};
use at4_core::table::TableRow;
use at4_core::AT4Params;
use serde::{Deserialize, Serialize};

/// Pinned so that output is byte-identical across runs.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Grid for `enumerate`. `p_max` defaults to `q^3 - 2q` per `q`; `r` runs
/// over the divisors of `p + q` that are at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRequest {
    pub q_min: i64,
    pub q_max: i64,
    pub p_min: i64,
    pub p_max: Option<i64>,
    pub registry: bool,
    /// Emit every visited candidate, not only the survivors.
    pub all: bool,
}

impl EnumerationRequest {
    pub fn new(q_min: i64, q_max: i64) -> Self {
        EnumerationRequest {
            q_min,
            q_max,
            p_min: 1,
            p_max: None,
            registry: true,
            all: false,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.q_min < 2 {
            return Err(format!("--qmin must be at least 2, got {}", self.q_min));
        }
        if self.q_min > self.q_max {
            return Err(format!("--qmin {} exceeds --qmax {}", self.q_min, self.q_max));
        }
        if self.q_max > 1000 {
            return Err(format!("--qmax {} is too large (limit 1000)", self.q_max));
        }
        if self.p_min < 1 {
            return Err(format!("--pmin must be at least 1, got {}", self.p_min));
        }
        if let Some(pmax) = self.p_max {
            if pmax < self.p_min {
                return Err(format!("--pmax {pmax} is below --pmin {}", self.p_min));
            }
        }
        Ok(())
    }

    pub fn p_bound(&self, q: i64) -> i64 {
        self.p_max.unwrap_or(q * q * q - 2 * q)
    }

    /// Every grid point, in canonical `(q, p, r)` order.
    pub fn candidates(&self) -> Vec<AT4Params> {
        let mut out = Vec::new();
        for q in self.q_min..=self.q_max {
            for p in self.p_min..=self.p_bound(q) {
                for r in 2..=p + q {
                    if (p + q) % r == 0 {
                        out.push(AT4Params::new(p, q, r).expect("grid points are in range"));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Request {
    Check {
        p: i64,
        q: i64,
        r: i64,
        registry: bool,
        mu_candidate: Option<String>,
    },
    Enumerate(EnumerationRequest),
    Table1,
    Lem1Scan {
        r: i64,
    },
    Oracle {
        name: OracleName,
    },
}

/// One candidate's verdict with every gate and the spectra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub status: Status,
    pub array: String,
    pub case: Case,
    pub conditions: Vec<ConditionResult>,
    pub registry: Option<RegistryHit>,
    pub mu_graph_info: Option<MuGraphEqualityData>,
    pub spectra: ReportSpectra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_candidate: Option<ConditionResult>,
}

impl CandidateReport {
    pub fn key(&self) -> (i64, i64, i64) {
        (self.q, self.p, self.r)
    }

    pub fn params(&self) -> AT4Params {
        AT4Params::new(self.p, self.q, self.r).expect("reports carry valid parameters")
    }
}

impl From<FeasibilityReport> for CandidateReport {
    fn from(f: FeasibilityReport) -> Self {
        CandidateReport {
            p: f.params.p(),
            q: f.params.q(),
            r: f.params.r(),
            status: f.status,
            array: f.array,
            case: f.case,
            conditions: f.conditions,
            registry: f.registry,
            mu_graph_info: f.mu_graph_info,
            spectra: f.spectra,
            mu_candidate: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Grid points examined.
    pub visited: usize,
    /// Counts by status label over every visited candidate.
    pub by_status: BTreeMap<String, usize>,
}

/// Result of the divisibility scan at fixed `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub q: i128,
    /// `(q^3 - rq)/(r - 1)`, possibly non-integral.
    pub p: String,
    pub status: Option<Status>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub request: Request,
    pub reports: Vec<CandidateReport>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<Vec<ScanEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl ReportDocument {
    pub fn new(request: Request) -> Self {
        ReportDocument {
            version: TOOL_VERSION.to_string(),
            request,
            reports: Vec::new(),
            summary: Summary::default(),
            table: None,
            scan: None,
            oracle: None,
        }
    }

    /// Candidates that are not ruled out, as `(p, q, r)`.
    pub fn survivors(&self) -> Vec<(i64, i64, i64)> {
        self.reports
            .iter()
            .filter(|r| r.status.survives())
            .map(|r| (r.p, r.q, r.r))
            .collect()
    }

    pub fn report(&self, p: i64, q: i64, r: i64) -> Option<&CandidateReport> {
        self.reports.iter().find(|c| (c.p, c.q, c.r) == (p, q, r))
    }

    pub(crate) fn count(&mut self, status: &Status) {
        self.summary.visited += 1;
        *self.summary.by_status.entry(status.label().to_string()).or_default() += 1;
    }
}
