use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub eigenvalue: ExactScalar,
    pub multiplicity: ExactScalar,
}

/// Distinct eigenvalues in strictly decreasing order with positive
/// multiplicities.
///
/// Multiplicities are exact rationals so that formula-side spectra can be
/// carried before their integrality has been checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<SpectrumEntry>", into = "Vec<SpectrumEntry>")]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Sorts, merges equal eigenvalues and drops zero multiplicities.
    /// Negative multiplicities are rejected.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExactScalar, ExactScalar)>,
    {
        let mut raw: Vec<(ExactScalar, ExactScalar)> = entries.into_iter().collect();
        if let Some((ev, m)) = raw.iter().find(|(_, m)| m.is_negative()) {
            return Err(Error::InvalidSpectrum(format!(
                "eigenvalue {ev} has negative multiplicity {m}"
            )));
        }
        raw.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<SpectrumEntry> = Vec::with_capacity(raw.len());
        for (eigenvalue, multiplicity) in raw {
            match merged.last_mut() {
                Some(last) if last.eigenvalue == eigenvalue => {
                    last.multiplicity = &last.multiplicity + &multiplicity;
                }
                _ => merged.push(SpectrumEntry {
                    eigenvalue,
                    multiplicity,
                }),
            }
        }
        merged.retain(|e| !e.multiplicity.is_zero());
        Ok(Spectrum { entries: merged })
    }

    pub fn from_ints(entries: &[(i64, i64)]) -> Result<Self> {
        Spectrum::new(
            entries
                .iter()
                .map(|&(e, m)| (ExactScalar::from_int(e), ExactScalar::from_int(m))),
        )
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn eigenvalues(&self) -> Vec<ExactScalar> {
        self.entries.iter().map(|e| e.eigenvalue.clone()).collect()
    }

    /// Total multiplicity.
    pub fn order(&self) -> ExactScalar {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, eigenvalue: &ExactScalar) -> ExactScalar {
        self.entries
            .iter()
            .find(|e| &e.eigenvalue == eigenvalue)
            .map(|e| e.multiplicity.clone())
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn largest(&self) -> Option<&SpectrumEntry> {
        self.entries.first()
    }

    pub fn smallest(&self) -> Option<&SpectrumEntry> {
        self.entries.last()
    }

    pub fn has_integral_multiplicities(&self) -> bool {
        self.entries.iter().all(|e| e.multiplicity.is_integer())
    }

    /// `sum m * lambda^j`, i.e. the trace of the j-th power of any matrix
    /// with this spectrum.
    pub fn power_sum(&self, j: u32) -> ExactScalar {
        self.entries
            .iter()
            .map(|e| &e.multiplicity * e.eigenvalue.pow(j))
            .sum()
    }
}

impl TryFrom<Vec<SpectrumEntry>> for Spectrum {
    type Error = Error;
    fn try_from(v: Vec<SpectrumEntry>) -> Result<Self> {
        Spectrum::new(v.into_iter().map(|e| (e.eigenvalue, e.multiplicity)))
    }
}

impl From<Spectrum> for Vec<SpectrumEntry> {
    fn from(s: Spectrum) -> Self {
        s.entries
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{}^{}", e.eigenvalue, e.multiplicity))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn sorted_merged_and_trimmed() {
        let s = Spectrum::new(vec![
            (int(-2), int(3)),
            (int(5), int(1)),
            (int(-2), int(1)),
            (int(0), int(0)),
        ])
        .unwrap();
        assert_eq!(s.to_string(), "{5^1, -2^4}");
        assert_eq!(s.order(), 5);
        assert_eq!(s.power_sum(1), int(5 - 8));
    }

    #[test]
    fn negative_multiplicity_rejected() {
        assert!(Spectrum::from_ints(&[(1, -1)]).is_err());
    }
}
