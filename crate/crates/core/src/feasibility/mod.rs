//! Feasibility gates for AT4(p,q,r) and their aggregation into a verdict.

mod gates;
mod mu;
mod registry;

use serde::{Deserialize, Serialize};

use crate::array::global_multiplicities;
use crate::at4::{eigenvalues, intersection_array, local_graph_data};
use crate::params::AT4Params;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;
use crate::subconstituent::{delta2_spectrum, delta2_tightness};

pub use gates::{
    check_basic, check_bound_positivity, check_case, check_delta2, check_equality_divisibility,
    check_integrality, check_local_srg, check_mu_equality_srg, check_p_bound, check_parity,
    check_tight_bound, classify_case, lem1_numerator, tight_bound_equality, Case,
};
pub use mu::{
    check_mu_candidate, check_mu_complete_multipartite, complete_multipartite_s,
    mu_srg_at_equality, MuGraphEqualityData,
};
pub use registry::{
    check_nonexistence_registry, RecordStatus, Registry, RegistryError, RegistryHit,
    RegistryRecord, REGISTRY_ENV, REGISTRY_VERSION, SOURCE_QMINUS2, SOURCE_Q3MOD4, SOURCE_QSQQ,
};

/// Outcome of one named condition. `witness` carries the exact values used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub id: String,
    pub passed: bool,
    pub witness: String,
    pub anchor: String,
}

impl ConditionResult {
    pub fn new(
        id: impl Into<String>,
        passed: bool,
        witness: impl Into<String>,
        anchor: impl Into<String>,
    ) -> Self {
        ConditionResult {
            id: id.into(),
            passed,
            witness: witness.into(),
            anchor: anchor.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail")]
pub enum Status {
    KnownExists(String),
    Open,
    /// Ids of the failing computed gates.
    Infeasible(Vec<String>),
    KnownNonexistent(String),
}

impl Status {
    /// Not ruled out, computationally or by citation.
    pub fn survives(&self) -> bool {
        matches!(self, Status::KnownExists(_) | Status::Open)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::KnownExists(_) => "known-exists",
            Status::Open => "open",
            Status::Infeasible(_) => "infeasible",
            Status::KnownNonexistent(_) => "known-nonexistent",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::KnownExists(name) => write!(f, "known to exist ({name})"),
            Status::Open => write!(f, "open"),
            Status::Infeasible(ids) => write!(f, "infeasible [{}]", ids.join(", ")),
            Status::KnownNonexistent(src) => write!(f, "known not to exist ({src})"),
        }
    }
}

/// Spectra carried in a report for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSpectra {
    pub eigenvalues: Vec<ExactScalar>,
    pub global: Option<Spectrum>,
    pub local: Option<Spectrum>,
    pub delta2: Option<Spectrum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub params: AT4Params,
    pub array: String,
    pub case: Case,
    pub conditions: Vec<ConditionResult>,
    pub status: Status,
    pub registry: Option<RegistryHit>,
    pub mu_graph_info: Option<MuGraphEqualityData>,
    pub spectra: ReportSpectra,
}

impl FeasibilityReport {
    pub fn failed(&self) -> Vec<&ConditionResult> {
        self.conditions.iter().filter(|c| !c.passed).collect()
    }

    pub fn condition(&self, id: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.id == id)
    }
}

/// Every computed gate, in a fixed order. Registry lookups are not included.
pub fn computed_conditions(params: &AT4Params) -> Vec<ConditionResult> {
    let mut out = check_basic(params);
    out.push(check_tight_bound(params));
    out.push(check_p_bound(params));
    out.push(check_parity(params));
    out.push(check_mu_equality_srg(params));
    out.push(check_equality_divisibility(params));
    out.push(check_case(params));
    if params.r() == 2 {
        out.push(check_delta2_chain(params));
    }
    out.push(check_mu_complete_multipartite(params));
    out.push(check_bound_positivity(params));
    out
}

/// When `p = q^3 - 2q` and `r = 2` the second subconstituent is
/// AT4(q^3-q^2-q, q, 2), so that parameter set must pass every computed gate
/// as well.
pub fn check_delta2_chain(params: &AT4Params) -> ConditionResult {
    let anchor = "p = q^3-2q, r = 2: second subconstituent is AT4(q^3-q^2-q,q,2), which must be feasible";
    match delta2_tightness(params) {
        Ok(Some(cover)) => {
            let failed: Vec<String> = computed_conditions(&cover.params)
                .into_iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{} ({})", c.id, c.witness))
                .collect();
            let witness = if failed.is_empty() {
                format!("induced {} {} passes all computed gates", cover.params, cover.array)
            } else {
                format!("induced {} {} fails: {}", cover.params, cover.array, failed.join("; "))
            };
            ConditionResult::new("delta2.chain", failed.is_empty(), witness, anchor)
        }
        _ => ConditionResult::new("delta2.chain", true, "not applicable", anchor),
    }
}

/// Runs every gate and assigns a status. Precedence: registry existence,
/// then computed failures, then registry nonexistence, otherwise open.
pub fn feasibility_report(params: &AT4Params, registry: Option<&Registry>) -> FeasibilityReport {
    let conditions = computed_conditions(params);
    let failed: Vec<String> = conditions
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.id.clone())
        .collect();

    let exists = registry.and_then(|r| r.known_exists(params));
    let nonexistent = registry.and_then(|r| r.check_nonexistence(params));
    let status = if let Some(hit) = &exists {
        Status::KnownExists(hit.name.clone())
    } else if !failed.is_empty() {
        Status::Infeasible(failed)
    } else if let Some(hit) = &nonexistent {
        Status::KnownNonexistent(hit.source.clone())
    } else {
        Status::Open
    };

    let array = intersection_array(params);
    let global = if array.is_integral() {
        global_multiplicities(&array).ok()
    } else {
        None
    };
    let spectra = ReportSpectra {
        eigenvalues: eigenvalues(params).to_vec(),
        global,
        local: local_graph_data(params).spectrum().ok(),
        delta2: delta2_spectrum(params).ok().and_then(|d| d.spectrum().ok()),
    };

    FeasibilityReport {
        params: *params,
        array: array.to_string(),
        case: classify_case(params),
        conditions,
        status,
        registry: exists.or(nonexistent),
        mu_graph_info: mu_srg_at_equality(params),
        spectra,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    #[test]
    fn report_examples() {
        let reg = Registry::bundled();
        let r = feasibility_report(&make_params(1, 2, 3).unwrap(), Some(&reg));
        assert_eq!(r.status, Status::KnownExists("Conway-Smith".into()));
        assert!(r.failed().is_empty());

        let r = feasibility_report(&make_params(21, 3, 2).unwrap(), Some(&reg));
        assert_eq!(r.status, Status::Infeasible(vec!["delta2.chain".into()]));
        assert!(r.registry.is_some());
        assert!(r.condition("delta2.chain").unwrap().witness.contains("405"));

        let r = feasibility_report(&make_params(16, 4, 2).unwrap(), Some(&reg));
        assert_eq!(r.status, Status::Open);
        assert!(r.failed().is_empty());
    }

    #[test]
    fn registry_only_elimination() {
        let reg = Registry::bundled();
        let p = make_params(6, 3, 3).unwrap();
        assert_eq!(feasibility_report(&p, None).status, Status::Open);
        assert!(matches!(
            feasibility_report(&p, Some(&reg)).status,
            Status::KnownNonexistent(_)
        ));
    }

    #[test]
    fn equality_info_populated() {
        let r = feasibility_report(&make_params(351, 9, 3).unwrap(), None);
        assert!(r.mu_graph_info.is_some());
        assert!(r.condition("mu.tight_bound").unwrap().witness.contains("equality"));
    }
}
