//! Existence and nonexistence results that are cited rather than computed.
//!
//! Explicit rows come from a line-oriented file (`status|p|q|r|name|source`,
//! preceded by a `@version 1` header). A few parametric rules that cannot be
//! written as single rows are built in.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::AT4Params;

/// Environment variable naming a registry file that replaces the bundled one.
pub const REGISTRY_ENV: &str = "AT4_REGISTRY";

pub const REGISTRY_VERSION: u32 = 1;

const BUNDLED: &str = include_str!("../../data/registry.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Exists,
    Nonexistent,
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryRecord {
    pub status: RecordStatus,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub name: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryHit {
    pub status: RecordStatus,
    pub name: String,
    pub source: String,
}

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported registry version {0}")]
    Version(u32),
    #[error("missing `@version` header")]
    MissingVersion,
    #[error("reading registry file: {0}")]
    Io(#[from] std::io::Error),
}

/// Source strings of the built-in parametric rules.
pub const SOURCE_Q3MOD4: &str =
    "second subconstituent parity chain: c2*c' of AT4(q^3-q^2-q,q,2) is odd for q = 3 (mod 4)";
pub const SOURCE_QMINUS2: &str = "external: no AT4(q-2,q,2)";
pub const SOURCE_QSQQ: &str =
    "external: classification of AT4(qs,q,q) (only J(8,4), halved 8-cube, 3.O6-(3), 3.O7(3), Meixner2)";

/// `(s, q)` pairs for which AT4(qs,q,q) exists.
const QSQQ_EXISTING: [(i128, i128); 5] = [(1, 2), (2, 2), (1, 3), (3, 3), (2, 4)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    version: u32,
    records: Vec<RegistryRecord>,
    rules_enabled: bool,
}

impl Registry {
    pub fn parse(text: &str) -> Result<Self, RegistryError> {
        let mut version = None;
        let mut records = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(v) = line.strip_prefix("@version") {
                let v: u32 = v.trim().parse().map_err(|_| RegistryError::Parse {
                    line: line_no,
                    msg: format!("bad version `{}`", v.trim()),
                })?;
                if v != REGISTRY_VERSION {
                    return Err(RegistryError::Version(v));
                }
                version = Some(v);
                continue;
            }
            if version.is_none() {
                return Err(RegistryError::MissingVersion);
            }
            records.push(parse_record(line, line_no)?);
        }
        Ok(Registry {
            version: version.ok_or(RegistryError::MissingVersion)?,
            records,
            rules_enabled: true,
        })
    }

    /// The registry bundled with the crate.
    pub fn bundled() -> Self {
        Registry::parse(BUNDLED).expect("bundled registry parses")
    }

    pub fn from_file(path: &Path) -> Result<Self, RegistryError> {
        Registry::parse(&fs::read_to_string(path)?)
    }

    /// The file named by `AT4_REGISTRY` if set, otherwise the bundled one.
    pub fn from_env() -> Result<Self, RegistryError> {
        match std::env::var_os(REGISTRY_ENV) {
            Some(path) => Registry::from_file(Path::new(&path)),
            None => Ok(Registry::bundled()),
        }
    }

    /// Registry with explicit rows only (parametric rules disabled).
    pub fn without_rules(mut self) -> Self {
        self.rules_enabled = false;
        self
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn records(&self) -> &[RegistryRecord] {
        &self.records
    }

    fn record(&self, params: &AT4Params) -> Option<&RegistryRecord> {
        self.records
            .iter()
            .find(|r| (r.p, r.q, r.r) == (params.p(), params.q(), params.r()))
    }

    pub fn known_exists(&self, params: &AT4Params) -> Option<RegistryHit> {
        self.record(params)
            .filter(|r| r.status == RecordStatus::Exists)
            .map(|r| RegistryHit {
                status: r.status,
                name: r.name.clone(),
                source: r.source.clone(),
            })
    }

    /// A cited nonexistence result covering `params`, if any.
    pub fn check_nonexistence(&self, params: &AT4Params) -> Option<RegistryHit> {
        if let Some(r) = self.record(params) {
            match r.status {
                RecordStatus::Nonexistent => {
                    return Some(RegistryHit {
                        status: r.status,
                        name: r.name.clone(),
                        source: r.source.clone(),
                    })
                }
                // an explicit row overrides the parametric rules
                RecordStatus::Exists | RecordStatus::Open => return None,
            }
        }
        if !self.rules_enabled {
            return None;
        }
        let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
        let hit = |source: &str| {
            Some(RegistryHit {
                status: RecordStatus::Nonexistent,
                name: String::new(),
                source: source.to_string(),
            })
        };
        if r == 2 && q % 4 == 3 && (p == q.pow(3) - 2 * q || p == q.pow(3) - q * q - q) {
            return hit(SOURCE_Q3MOD4);
        }
        if r == 2 && p == q - 2 {
            return hit(SOURCE_QMINUS2);
        }
        if r == q && p % q == 0 && !QSQQ_EXISTING.contains(&(p / q, q)) {
            return hit(SOURCE_QSQQ);
        }
        None
    }
}

/// Same as [`Registry::check_nonexistence`] on the bundled registry.
pub fn check_nonexistence_registry(params: &AT4Params) -> Option<RegistryHit> {
    Registry::bundled().check_nonexistence(params)
}

fn parse_record(line: &str, line_no: usize) -> Result<RegistryRecord, RegistryError> {
    let err = |msg: String| RegistryError::Parse { line: line_no, msg };
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if fields.len() != 6 {
        return Err(err(format!("expected 6 fields, got {}", fields.len())));
    }
    let status = match fields[0] {
        "exists" => RecordStatus::Exists,
        "nonexistent" => RecordStatus::Nonexistent,
        "open" => RecordStatus::Open,
        other => return Err(err(format!("unknown status `{other}`"))),
    };
    let num = |s: &str| s.parse::<i64>().map_err(|_| err(format!("bad integer `{s}`")));
    let (p, q, r) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
    AT4Params::new(p, q, r).map_err(|e| err(e.to_string()))?;
    Ok(RegistryRecord {
        status,
        p,
        q,
        r,
        name: fields[4].to_string(),
        source: fields[5].to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    #[test]
    fn bundled_parses() {
        let reg = Registry::bundled();
        assert_eq!(reg.version(), 1);
        assert_eq!(reg.records().len(), 14);
        let hit = reg.known_exists(&make_params(1, 2, 3).unwrap()).unwrap();
        assert_eq!(hit.name, "Conway-Smith");
    }

    #[test]
    fn nonexistence_examples() {
        let hit = check_nonexistence_registry(&make_params(21, 3, 2).unwrap()).unwrap();
        assert_eq!(hit.status, RecordStatus::Nonexistent);
        assert!(check_nonexistence_registry(&make_params(5, 7, 2).unwrap()).is_some());
        assert!(check_nonexistence_registry(&make_params(9, 3, 2).unwrap()).is_none());
        // parametric rules
        let hit = check_nonexistence_registry(&make_params(15, 3, 2).unwrap()).unwrap();
        assert_eq!(hit.source, SOURCE_Q3MOD4);
        let hit = check_nonexistence_registry(&make_params(329, 7, 2).unwrap()).unwrap();
        assert_eq!(hit.source, SOURCE_Q3MOD4);
        let hit = check_nonexistence_registry(&make_params(1, 3, 2).unwrap()).unwrap();
        assert_eq!(hit.source, SOURCE_QMINUS2);
        let hit = check_nonexistence_registry(&make_params(6, 3, 3).unwrap()).unwrap();
        assert_eq!(hit.source, SOURCE_QSQQ);
        // existing members of the (qs,q,q) family are not hit
        assert!(check_nonexistence_registry(&make_params(8, 4, 4).unwrap()).is_none());
        // q = 1 mod 4 is not covered
        assert!(check_nonexistence_registry(&make_params(115, 5, 2).unwrap()).is_none());
    }

    #[test]
    fn rules_can_be_disabled() {
        let reg = Registry::bundled().without_rules();
        assert!(reg.check_nonexistence(&make_params(6, 3, 3).unwrap()).is_none());
        assert!(reg.check_nonexistence(&make_params(21, 3, 2).unwrap()).is_some());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Registry::parse("exists|1|2|3|x|y"), Err(RegistryError::MissingVersion)));
        assert!(matches!(Registry::parse("@version 2"), Err(RegistryError::Version(2))));
        assert!(matches!(
            Registry::parse("@version 1\nexists|1|2|3|x"),
            Err(RegistryError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Registry::parse("@version 1\nmaybe|1|2|3|x|y"),
            Err(RegistryError::Parse { .. })
        ));
        assert!(matches!(
            Registry::parse("@version 1\nexists|0|2|3|x|y"),
            Err(RegistryError::Parse { .. })
        ));
    }
}
