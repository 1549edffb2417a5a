//! The table of known and open AT4 parameter sets, regenerated from the
//! formulas and compared entry by entry with the published values.

use serde::{Deserialize, Serialize};

use crate::at4::{alpha, intersection_array};
use crate::feasibility::{
    check_mu_candidate, complete_multipartite_s, feasibility_report, mu_srg_at_equality,
    ConditionResult, Registry, Status,
};
use crate::params::AT4Params;
use crate::spectrum::Spectrum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PublishedStatus {
    Exists,
    DoesNotExist,
    Open,
}

impl PublishedStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PublishedStatus::Exists => "exists",
            PublishedStatus::DoesNotExist => "does not exist",
            PublishedStatus::Open => "open",
        }
    }
}

/// One printed row: `(k, p, q, r, alpha, c2)` plus the mu-graph text.
#[derive(Clone, Copy, Debug)]
pub struct PublishedRow {
    pub label: &'static str,
    pub name: &'static str,
    pub status: PublishedStatus,
    pub k: i64,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub alpha: i64,
    pub c2: i64,
    pub mu: &'static str,
}

const fn row(
    label: &'static str,
    name: &'static str,
    status: PublishedStatus,
    [k, p, q, r, alpha, c2]: [i64; 6],
    mu: &'static str,
) -> PublishedRow {
    PublishedRow { label, name, status, k, p, q, r, alpha, c2, mu }
}

use PublishedStatus::{DoesNotExist as Dne, Exists as Ex, Open as Op};

pub const PUBLISHED: [PublishedRow; 23] = [
    row("A1", "Conway-Smith", Ex, [10, 1, 2, 3, 1, 2], "K_2"),
    row("A2", "J(8,4)", Ex, [16, 2, 2, 2, 2, 4], "K_{2,2}"),
    row("A3", "halved 8-cube", Ex, [28, 4, 2, 2, 3, 6], "K_{3x2}"),
    row("A4", "3.O6-(3)", Ex, [45, 3, 3, 3, 2, 6], "K_{3,3}"),
    row("A5", "Soicher1", Ex, [56, 2, 4, 3, 2, 8], "2·K_{2,2}"),
    row("A6", "3.O7(3)", Ex, [117, 9, 3, 3, 4, 12], "K_{4x3}"),
    row("A7", "Meixner1", Ex, [176, 8, 4, 2, 6, 24], "2·K_{3x4}"),
    row("A8", "Meixner2", Ex, [176, 8, 4, 4, 3, 12], "K_{3x4}"),
    row("A9", "Soicher2", Ex, [416, 20, 4, 3, 8, 32], "complement-of-K2 extension of halved 5-cube"),
    row("A10", "3.Fi24-", Ex, [31671, 351, 9, 3, 120, 1080], "SRG(1080,351,126,108)"),
    row("B1", "", Op, [96, 4, 4, 2, 4, 16], "2·K_{4,4}"),
    row("B2", "", Dne, [115, 3, 5, 2, 4, 20], "2·Petersen"),
    row("B3", "", Op, [115, 3, 5, 4, 2, 10], "Petersen"),
    row("B4", "", Op, [117, 9, 3, 2, 6, 18], "unknown; not K_{9,9}"),
    row("B5", "", Op, [176, 8, 4, 3, 4, 16], "unknown; not 2·K_{8,8}"),
    row("B6", "", Dne, [204, 4, 6, 2, 5, 30], "5·K_{3x2}"),
    row("B7", "", Op, [204, 4, 6, 5, 2, 12], "2·K_{3x2}"),
    row("B8", "", Dne, [261, 21, 3, 2, 12, 36], "SRG(36,21,12,12)"),
    row("B9", "", Op, [288, 6, 6, 2, 6, 36], "3·K_{6,6}"),
    row("B10", "", Op, [288, 6, 6, 3, 4, 24], "2·K_{6,6}"),
    row("B11", "", Dne, [329, 5, 7, 2, 6, 42], "7·K_6"),
    row("B12", "", Op, [336, 16, 4, 2, 10, 40], "2·K_{5x4}"),
    row("B13", "", Op, [416, 20, 4, 2, 12, 48], "2·K_{6x4}"),
];

/// Spectra of mu-graphs that the printed table explicitly excludes.
fn excluded_candidates(label: &str) -> Vec<(&'static str, Spectrum)> {
    let spec = |e: &[(i64, i64)]| Spectrum::from_ints(e).expect("valid spectrum");
    match label {
        "B4" => vec![("K_{9,9}", spec(&[(9, 1), (0, 16), (-9, 1)]))],
        "B5" => vec![("2·K_{8,8}", spec(&[(8, 2), (0, 28), (-8, 2)]))],
        _ => vec![],
    }
}

/// Result of an excluded-candidate screen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateScreen {
    pub candidate: String,
    pub result: ConditionResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub name: String,
    pub published_status: PublishedStatus,
    pub params: AT4Params,
    /// Computed from `(p, q, r)`.
    pub k: i64,
    pub alpha: i64,
    pub c2: i64,
    /// Published `(k, p, q, r, alpha, c2)`.
    pub published: [i64; 6],
    pub matches: bool,
    pub status: Status,
    /// Printed mu-graph text, carried verbatim.
    pub mu_published: String,
    /// What the formulas say about the mu-graph, where anything is derivable.
    pub mu_computed: Vec<String>,
    pub screens: Vec<CandidateScreen>,
}

fn int(x: &crate::scalar::ExactScalar) -> i64 {
    x.to_i64().expect("table rows have integral parameters")
}

pub fn table_row(row: &PublishedRow, registry: &Registry) -> TableRow {
    let params = AT4Params::new(row.p, row.q, row.r).expect("table rows are in range");
    let array = intersection_array(&params);
    let (k, c2, a) = (int(array.valency()), int(&array.c_at(2)), int(&alpha(&params)));
    let published = [row.k, row.p, row.q, row.r, row.alpha, row.c2];
    let report = feasibility_report(&params, Some(registry));

    let mut mu_computed = Vec::new();
    if let Some(eq) = mu_srg_at_equality(&params) {
        let spec = eq.spectrum().map(|s| s.to_string()).unwrap_or_default();
        mu_computed.push(format!("equality case: {} {spec}", eq.srg));
    }
    if row.p > 1 {
        if let Some(s) = complete_multipartite_s(&params) {
            mu_computed.push(format!("complete multipartite K_{{{}x{}}}", s + 1, row.q));
        }
    }
    let screens: Vec<CandidateScreen> = excluded_candidates(row.label)
        .into_iter()
        .map(|(name, spec)| {
            let result = check_mu_candidate(&params, &spec);
            mu_computed.push(format!(
                "{name} {}",
                if result.passed { "not excluded" } else { "excluded" }
            ));
            CandidateScreen {
                candidate: name.to_string(),
                result,
            }
        })
        .collect();

    TableRow {
        label: row.label.to_string(),
        name: row.name.to_string(),
        published_status: row.status,
        params,
        k,
        alpha: a,
        c2,
        published,
        matches: [k, row.p, row.q, row.r, a, c2] == published,
        status: report.status,
        mu_published: row.mu.to_string(),
        mu_computed,
        screens,
    }
}

/// All rows, in printed order.
pub fn table1(registry: &Registry) -> Vec<TableRow> {
    PUBLISHED.iter().map(|r| table_row(r, registry)).collect()
}
