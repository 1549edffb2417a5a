//! mu-graph constraints: the equality case of the cover-size bound and
//! screening of candidate mu-graph spectra.

use serde::{Deserialize, Serialize};

use crate::at4::SrgParams;
use crate::error::Result;
use crate::params::AT4Params;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;

use super::ConditionResult;

/// The strongly regular mu-graph forced when `r(p+q) = p + q^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuGraphEqualityData {
    /// `(q(p+q)/r, p, (q-1)(q-2) + 2(p-1)/(q+1), (p+q^3)/(q+1))`
    pub srg: SrgParams,
    /// Middle eigenvalue `(p - q^2)/(1 + q)`.
    pub lambda: ExactScalar,
    /// `p(q-1)(q+1)^2/(p+q^3)`
    pub m_plus: ExactScalar,
    /// `pq(1+p+q-q^2)/(p+q^3)`
    pub m_minus: ExactScalar,
    /// `-q`
    pub smallest: ExactScalar,
}

impl MuGraphEqualityData {
    pub fn spectrum_entries(&self) -> [(ExactScalar, ExactScalar); 3] {
        [
            (self.srg.k.clone(), ExactScalar::one()),
            (self.lambda.clone(), self.m_plus.clone()),
            (self.smallest.clone(), self.m_minus.clone()),
        ]
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        Spectrum::new(self.spectrum_entries())
    }

    pub fn is_integral(&self) -> bool {
        self.srg.is_integral() && self.m_plus.is_integer() && self.m_minus.is_integer()
    }
}

pub fn mu_srg_at_equality(params: &AT4Params) -> Option<MuGraphEqualityData> {
    if !super::tight_bound_equality(params) {
        return None;
    }
    let (ps, qs, rs) = (params.ps(), params.qs(), params.rs());
    let q3 = qs.pow(3);
    let srg = SrgParams {
        n: &qs * (&ps + &qs) / &rs,
        k: ps.clone(),
        a: (&qs - 1) * (&qs - 2) + (&ps - 1) * 2 / (&qs + 1),
        c: (&ps + &q3) / (&qs + 1),
    };
    let lambda = (&ps - &qs * &qs) / (&qs + 1);
    let m_plus = &ps * (&qs - 1) * (&qs + 1) * (&qs + 1) / (&ps + &q3);
    let m_minus = &ps * &qs * (&ps + &qs + 1 - &qs * &qs) / (&ps + &q3);
    Some(MuGraphEqualityData {
        srg,
        lambda,
        m_plus,
        m_minus,
        smallest: -qs,
    })
}

/// Screens a candidate mu-graph spectrum: order `q(p+q)/r`, largest
/// eigenvalue `p` (the mu-graph is `p`-regular), smallest eigenvalue at least
/// `-q` (interlacing inside the local graph).
pub fn check_mu_candidate(params: &AT4Params, candidate: &Spectrum) -> ConditionResult {
    let (ps, qs) = (params.ps(), params.qs());
    let order = &qs * (&ps + &qs) / params.rs();
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    let got_order = candidate.order();
    if got_order != order {
        problems.push(format!("order {got_order} != q(p+q)/r = {order}"));
    } else {
        notes.push(format!("order {order}"));
    }
    match candidate.largest() {
        Some(top) if top.eigenvalue == ps && top.multiplicity >= 1 => {
            notes.push(format!("largest eigenvalue {ps}"))
        }
        Some(top) => problems.push(format!(
            "largest eigenvalue {} != p = {ps}",
            top.eigenvalue
        )),
        None => problems.push("empty spectrum".into()),
    }
    if let Some(bottom) = candidate.smallest() {
        let floor = -&qs;
        if bottom.eigenvalue < floor {
            problems.push(format!(
                "smallest eigenvalue {} < -q = {floor}",
                bottom.eigenvalue
            ));
        } else {
            notes.push(format!("smallest eigenvalue {} >= {floor}", bottom.eigenvalue));
        }
    }
    let passed = problems.is_empty();
    let witness = if passed {
        notes.join("; ")
    } else {
        problems.join("; ")
    };
    ConditionResult::new(
        "mu.candidate",
        passed,
        format!("candidate {candidate}: {witness}"),
        "mu-graph is p-regular on c2 vertices with smallest eigenvalue >= -q",
    )
}

/// `Some(s)` when `(p,q,r) = (qs,q,q)`, the case in which (for `p > 1`) the
/// mu-graphs are complete multipartite `K_{(s+1) x q}`.
pub fn complete_multipartite_s(params: &AT4Params) -> Option<i64> {
    let (p, q, r) = (params.p(), params.q(), params.r());
    (r == q && p % q == 0).then_some(p / q)
}

/// Informational; never fails.
pub fn check_mu_complete_multipartite(params: &AT4Params) -> ConditionResult {
    let witness = if params.p() == 1 {
        "not applicable for p = 1".to_string()
    } else {
        match complete_multipartite_s(params) {
            Some(s) => format!(
                "yes: (p,q,r) = (qs,q,q) with s = {s}; mu-graph K_{{{}x{}}}",
                s + 1,
                params.q()
            ),
            None => "no: (p,q,r) is not of the form (qs,q,q)".to_string(),
        }
    };
    ConditionResult::new(
        "info.complete_multipartite",
        true,
        witness,
        "mu-graphs complete multipartite iff (p,q,r) = (qs,q,q)",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    #[test]
    fn equality_case_351_9_3() {
        let d = mu_srg_at_equality(&make_params(351, 9, 3).unwrap()).unwrap();
        assert_eq!(d.srg, SrgParams::from_ints(1080, 351, 126, 108));
        assert_eq!(
            d.spectrum().unwrap(),
            Spectrum::from_ints(&[(351, 1), (27, 260), (-9, 819)]).unwrap()
        );
        assert!(d.srg.identity_holds());
        assert!(d.is_integral());
    }

    #[test]
    fn no_equality_for_j84() {
        assert!(mu_srg_at_equality(&make_params(2, 2, 2).unwrap()).is_none());
    }

    #[test]
    fn candidate_screens() {
        let k99 = Spectrum::from_ints(&[(9, 1), (0, 16), (-9, 1)]).unwrap();
        let r = check_mu_candidate(&make_params(9, 3, 2).unwrap(), &k99);
        assert!(!r.passed);
        assert!(r.witness.contains("smallest eigenvalue -9 < -q = -3"), "{}", r.witness);

        let k22 = Spectrum::from_ints(&[(2, 1), (0, 2), (-2, 1)]).unwrap();
        assert!(check_mu_candidate(&make_params(2, 2, 2).unwrap(), &k22).passed);

        let two_k88 = Spectrum::from_ints(&[(8, 2), (0, 28), (-8, 2)]).unwrap();
        let r = check_mu_candidate(&make_params(8, 4, 3).unwrap(), &two_k88);
        assert!(!r.passed);
        assert!(r.witness.contains("smallest eigenvalue -8 < -q = -4"), "{}", r.witness);
    }

    #[test]
    fn complete_multipartite_examples() {
        assert_eq!(complete_multipartite_s(&make_params(9, 3, 3).unwrap()), Some(3));
        assert_eq!(complete_multipartite_s(&make_params(8, 4, 2).unwrap()), None);
        assert_eq!(complete_multipartite_s(&make_params(4, 2, 2).unwrap()), Some(2));
        let r = check_mu_complete_multipartite(&make_params(4, 2, 2).unwrap());
        assert!(r.passed);
        assert!(r.witness.contains("K_{3x2}"));
    }
}
