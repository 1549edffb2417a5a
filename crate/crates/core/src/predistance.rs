//! Predistance polynomials of a spectrum and the spectral excess value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;

/// Orthogonal polynomials `p_0..p_d` for
/// `<f, g> = (1/n) sum_i m_i f(lambda_i) g(lambda_i)`, normalized so that
/// `<p_i, p_i> = p_i(lambda_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredistanceBasis {
    eigenvalues: Vec<ExactScalar>,
    multiplicities: Vec<ExactScalar>,
    polys: Vec<Vec<ExactScalar>>,
    norms: Vec<ExactScalar>,
}

impl PredistanceBasis {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn poly(&self, i: usize) -> Polynomial {
        Polynomial::new(self.polys[i].clone())
    }

    /// `<p_i, p_i>`
    pub fn norm(&self, i: usize) -> &ExactScalar {
        &self.norms[i]
    }

    pub fn lambda0(&self) -> &ExactScalar {
        &self.eigenvalues[0]
    }

    pub fn inner(&self, f: &Polynomial, g: &Polynomial) -> ExactScalar {
        inner(&self.eigenvalues, &self.multiplicities, f, g)
    }

    /// `p_i(lambda_0)`
    pub fn value_at_lambda0(&self, i: usize) -> ExactScalar {
        self.poly(i).eval(self.lambda0())
    }
}

fn inner(
    eigenvalues: &[ExactScalar],
    multiplicities: &[ExactScalar],
    f: &Polynomial,
    g: &Polynomial,
) -> ExactScalar {
    let n: ExactScalar = multiplicities.iter().sum();
    let total: ExactScalar = eigenvalues
        .iter()
        .zip(multiplicities)
        .map(|(l, m)| m * f.eval(l) * g.eval(l))
        .sum();
    total / n
}

pub fn predistance_polynomials(spec: &Spectrum) -> Result<PredistanceBasis> {
    let entries: Vec<(ExactScalar, ExactScalar)> = spec
        .entries()
        .iter()
        .map(|e| (e.eigenvalue.clone(), e.multiplicity.clone()))
        .collect();
    predistance_from_entries(&entries)
}

/// Same as [`predistance_polynomials`] but from raw pairs, which may be in any
/// order. Repeated eigenvalues or nonpositive multiplicities are rejected.
pub fn predistance_from_entries(
    entries: &[(ExactScalar, ExactScalar)],
) -> Result<PredistanceBasis> {
    if entries.is_empty() {
        return Err(Error::DegenerateSpectrum("empty spectrum".into()));
    }
    let mut sorted = entries.to_vec();
    sorted.sort_by(|a, b| b.0.cmp(&a.0));
    if sorted.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::DegenerateSpectrum("eigenvalues are not distinct".into()));
    }
    if let Some((l, m)) = sorted.iter().find(|(_, m)| !m.is_positive()) {
        return Err(Error::DegenerateSpectrum(format!(
            "eigenvalue {l} has multiplicity {m}"
        )));
    }
    let (eigenvalues, multiplicities): (Vec<_>, Vec<_>) = sorted.into_iter().unzip();
    let lambda0 = eigenvalues[0].clone();

    // Gram-Schmidt on 1, x, x^2, ...
    let mut orth: Vec<Polynomial> = Vec::new();
    let mut orth_norms: Vec<ExactScalar> = Vec::new();
    for i in 0..eigenvalues.len() {
        let mut v = Polynomial::monomial(i);
        let xi = v.clone();
        for (u, nu) in orth.iter().zip(&orth_norms) {
            let coeff = inner(&eigenvalues, &multiplicities, &xi, u) / nu;
            v = &v - &u.scale(&coeff);
        }
        let nv = inner(&eigenvalues, &multiplicities, &v, &v);
        if nv.is_zero() {
            return Err(Error::DegenerateSpectrum(format!("degree {i} polynomial has zero norm")));
        }
        orth.push(v);
        orth_norms.push(nv);
    }

    // p_i = c q_i with c^2 <q_i,q_i> = c q_i(lambda_0)
    let mut polys = Vec::with_capacity(orth.len());
    let mut norms = Vec::with_capacity(orth.len());
    for (i, (u, nu)) in orth.iter().zip(&orth_norms).enumerate() {
        let at = u.eval(&lambda0);
        if at.is_zero() {
            return Err(Error::DegenerateSpectrum(format!(
                "orthogonal polynomial of degree {i} vanishes at the largest eigenvalue"
            )));
        }
        let c = &at / nu;
        norms.push(&c * &c * nu);
        polys.push(u.scale(&c).coeffs().to_vec());
    }
    Ok(PredistanceBasis {
        eigenvalues,
        multiplicities,
        polys,
        norms,
    })
}

/// `p_4(lambda_0)` for a spectrum with exactly five distinct eigenvalues.
pub fn spectral_excess_value(spec: &Spectrum) -> Result<ExactScalar> {
    if spec.len() != 5 {
        return Err(Error::DegenerateSpectrum(format!(
            "need exactly 5 distinct eigenvalues, got {}",
            spec.len()
        )));
    }
    let basis = predistance_polynomials(spec)?;
    Ok(basis.value_at_lambda0(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn j84() -> Spectrum {
        Spectrum::from_ints(&[(16, 1), (8, 7), (2, 20), (-2, 28), (-4, 14)]).unwrap()
    }

    #[test]
    fn low_degree_polynomials() {
        let b = predistance_polynomials(&j84()).unwrap();
        assert_eq!(b.poly(0), Polynomial::constant(int(1)));
        assert_eq!(b.poly(1), Polynomial::monomial(1));
    }

    #[test]
    fn j84_distance_polynomials_evaluate_to_k_i() {
        let b = predistance_polynomials(&j84()).unwrap();
        let ks: Vec<ExactScalar> = (0..5).map(|i| b.value_at_lambda0(i)).collect();
        assert_eq!(ks, vec![int(1), int(16), int(36), int(16), int(1)]);
        assert_eq!(spectral_excess_value(&j84()).unwrap(), 1);
    }

    #[test]
    fn orthogonality_and_normalization() {
        let b = predistance_polynomials(&j84()).unwrap();
        for i in 0..b.len() {
            for j in 0..b.len() {
                let ip = b.inner(&b.poly(i), &b.poly(j));
                if i == j {
                    assert_eq!(ip, b.value_at_lambda0(i));
                    assert_eq!(&ip, b.norm(i));
                } else {
                    assert!(ip.is_zero());
                }
            }
        }
    }

    #[test]
    fn degenerate_inputs() {
        let dup = [(int(3), int(1)), (int(3), int(2))];
        assert!(matches!(predistance_from_entries(&dup), Err(Error::DegenerateSpectrum(_))));
        let petersen = Spectrum::from_ints(&[(3, 1), (1, 5), (-2, 4)]).unwrap();
        assert!(matches!(spectral_excess_value(&petersen), Err(Error::DegenerateSpectrum(_))));
    }
}
