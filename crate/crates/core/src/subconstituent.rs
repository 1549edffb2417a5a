//! Second subconstituent of an antipodal double cover AT4(p,q,2): trace
//! counts, spectrum, and the criterion for it to be AT4 again.

use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::at4::{alpha, intersection_array, intersection_numbers_a, k2_double_cover};
use crate::error::{Error, Result};
use crate::params::AT4Params;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;

fn require_double_cover(params: &AT4Params) -> Result<()> {
    if params.r() != 2 {
        return Err(Error::Domain(format!(
            "second subconstituent formulas need r = 2, got {params}"
        )));
    }
    Ok(())
}

/// `tr(B^j)` for `j = 0..3`, `B` the adjacency matrix of the second
/// subconstituent, counted combinatorially: `k_2`, `0`, `a_2 k_2` closed
/// 2-walks, `a_2 k_2 h` directed triangles where `h = a_1 - alpha r` is the
/// number of triangles on an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceVector {
    pub t: [ExactScalar; 4],
    pub h: ExactScalar,
}

pub fn traces(params: &AT4Params) -> Result<TraceVector> {
    require_double_cover(params)?;
    let a = intersection_numbers_a(params);
    let k2 = k2_double_cover(params);
    let h = &a[1] - alpha(params) * params.rs();
    let t2 = &a[2] * &k2;
    let t3 = &t2 * &h;
    Ok(TraceVector {
        t: [k2, ExactScalar::zero(), t2, t3],
        h,
    })
}

/// Expanded closed forms of the same four traces:
/// `2pq^2(pq+p+q)(q^2-1)(p+1)/(p+q)` and `2pq^3(pq+p+q)(q^2-1)(p^2-1)/(p+q)`
/// for `j = 2, 3`.
pub fn trace_closed_forms(params: &AT4Params) -> Result<[ExactScalar; 4]> {
    require_double_cover(params)?;
    let (p, q) = (params.ps(), params.qs());
    let t1 = params.theta1();
    let q2m1 = &q * &q - 1;
    let pq = &p + &q;
    let t2 = &p * &q * &q * 2 * &t1 * &q2m1 * (&p + 1) / &pq;
    let t3 = &p * q.pow(3) * 2 * &t1 * &q2m1 * (&p * &p - 1) / &pq;
    Ok([k2_double_cover(params), ExactScalar::zero(), t2, t3])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta2Entry {
    pub label: String,
    pub eigenvalue: ExactScalar,
    pub multiplicity: ExactScalar,
}

/// The six candidate eigenvalues `pq^2, pq, p+q-q^2, p, -q, -q^2` with
/// multiplicities `1, l1, l2, m1, m2, m3`, kept raw (unsorted, zeros and
/// non-integral values retained).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta2Spectrum {
    pub entries: Vec<Delta2Entry>,
}

impl Delta2Spectrum {
    fn get(&self, label: &str) -> &ExactScalar {
        &self
            .entries
            .iter()
            .find(|e| e.label == label)
            .expect("fixed labels")
            .multiplicity
    }

    pub fn m1(&self) -> &ExactScalar {
        self.get("m1")
    }

    pub fn m2(&self) -> &ExactScalar {
        self.get("m2")
    }

    pub fn m3(&self) -> &ExactScalar {
        self.get("m3")
    }

    pub fn total(&self) -> ExactScalar {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    /// `sum m lambda^j` over all six raw entries.
    pub fn power_sum(&self, j: u32) -> ExactScalar {
        self.entries
            .iter()
            .map(|e| &e.multiplicity * e.eigenvalue.pow(j))
            .sum()
    }

    /// Multiplicities that are negative or not integers.
    pub fn bad_multiplicities(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| !e.multiplicity.is_integer() || e.multiplicity.is_negative())
            .map(|e| format!("{}={}", e.label, e.multiplicity))
            .collect()
    }

    /// Sorted spectrum with zero-multiplicity entries dropped.
    pub fn spectrum(&self) -> Result<Spectrum> {
        Spectrum::new(
            self.entries
                .iter()
                .map(|e| (e.eigenvalue.clone(), e.multiplicity.clone())),
        )
    }
}

pub fn delta2_spectrum(params: &AT4Params) -> Result<Delta2Spectrum> {
    require_double_cover(params)?;
    let (p, q) = (params.ps(), params.qs());
    let t1 = params.theta1();
    let q2 = &q * &q;
    let q2m1 = &q2 - 1;
    let pq = &p + &q;
    let pq2 = &p + &q2;

    let l1 = &q2m1 * &t1 / &pq;
    let l2 = &p * &q * (&p + 1) * (&q + 1) / &pq;
    let m1 = -(&q * (&p + 1) * (&p - q.pow(3) + &q * 2) * &t1) / (&pq * &pq2);
    let m2 = &p * &q2m1 * &t1 / &pq;
    let m3 = &p * (&p - &q + 2) * &q2m1 * &t1 / (&pq * &pq2);

    let entry = |label: &str, eigenvalue: ExactScalar, multiplicity: ExactScalar| Delta2Entry {
        label: label.to_string(),
        eigenvalue,
        multiplicity,
    };
    Ok(Delta2Spectrum {
        entries: vec![
            entry("kappa", &p * &q2, ExactScalar::one()),
            entry("l1", &p * &q, l1),
            entry("l2", &p + &q - &q2, l2),
            entry("m1", p.clone(), m1),
            entry("m2", -&q, m2),
            entry("m3", -&q2, m3),
        ],
    })
}

/// `m3` rewritten as
/// `(q^2-1)(pq+p-q^3-3q^2+q+2) - 2q^2(q^2-1)/(p+q) + q^2(q^2-1)(q^2+q-1)(q+2)/(p+q^2)`,
/// which is an integer whenever both divisibility conditions on `p+q` and
/// `p+q^2` hold.
pub fn m3_alternative_form(params: &AT4Params) -> Result<ExactScalar> {
    require_double_cover(params)?;
    let (p, q) = (params.ps(), params.qs());
    let q2 = &q * &q;
    let q2m1 = &q2 - 1;
    let poly_part = &q2m1 * (&p * &q + &p - q.pow(3) - &q2 * 3 + &q + 2);
    let first = &q2 * 2 * &q2m1 / (&p + &q);
    let second = &q2 * &q2m1 * (&q2 + &q - 1) * (&q + 2) / (&p + &q2);
    Ok(poly_part - first + second)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta2Cover {
    pub params: AT4Params,
    pub array: IntersectionArray,
}

/// The second subconstituent of AT4(p,q,2) is itself antipodal
/// distance-regular of diameter four exactly when `p = q^3 - 2q`; it is then
/// AT4(q^3-q^2-q, q, 2) with array
/// `{q^3(q^2-2), (q-1)^3(q+1)^2, q^3(q-1)/2, 1; 1, q^3(q-1)/2, (q-1)^3(q+1)^2, q^3(q^2-2)}`.
pub fn delta2_tightness(params: &AT4Params) -> Result<Option<Delta2Cover>> {
    require_double_cover(params)?;
    let q = params.q();
    if params.p() as i128 != (q as i128).pow(3) - 2 * q as i128 {
        return Ok(None);
    }
    let induced = AT4Params::new(q.pow(3) - q * q - q, q, 2)?;
    let k = q.pow(3) * (q * q - 2);
    let b1 = (q - 1).pow(3) * (q + 1).pow(2);
    // q^3(q-1) is always even
    let c2 = q.pow(3) * (q - 1) / 2;
    let array = IntersectionArray::from_ints(&[k, b1, c2, 1], &[1, c2, b1, k])?;
    debug_assert_eq!(array, intersection_array(&induced));
    Ok(Some(Delta2Cover {
        params: induced,
        array,
    }))
}
