//! Closed-form parameters of AT4(p,q,r): eigenvalues, intersection array,
//! local graph data, triple intersection number.

use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::Result;
use crate::params::AT4Params;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;

/// Strongly regular graph parameters `(n, k, a, c)`. Integrality is not
/// assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: ExactScalar,
    pub k: ExactScalar,
    pub a: ExactScalar,
    pub c: ExactScalar,
}

impl SrgParams {
    pub fn from_ints(n: i64, k: i64, a: i64, c: i64) -> Self {
        SrgParams {
            n: n.into(),
            k: k.into(),
            a: a.into(),
            c: c.into(),
        }
    }

    /// `k(k - a - 1) = (n - k - 1)c`
    pub fn identity_holds(&self) -> bool {
        &self.k * (&self.k - &self.a - 1) == (&self.n - &self.k - 1) * &self.c
    }

    pub fn is_integral(&self) -> bool {
        [&self.n, &self.k, &self.a, &self.c]
            .iter()
            .all(|v| v.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        [&self.n, &self.k, &self.a, &self.c]
            .iter()
            .all(|v| !v.is_negative())
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SRG({},{},{},{})", self.n, self.k, self.a, self.c)
    }
}

/// The local graph of AT4(p,q,r): `SRG(q(pq+p+q), p(q+1), 2p-q, p)` with
/// eigenvalues `p(q+1)`, `p`, `-q` of multiplicities `1`, `l1`, `l2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalGraphData {
    pub srg: SrgParams,
    /// `[p(q+1), p, -q]`
    pub eigenvalues: [ExactScalar; 3],
    pub l1: ExactScalar,
    pub l2: ExactScalar,
}

impl LocalGraphData {
    /// Raw `(eigenvalue, multiplicity)` triples; multiplicities may be
    /// non-integral.
    pub fn spectrum_entries(&self) -> [(ExactScalar, ExactScalar); 3] {
        let [e0, e1, e2] = self.eigenvalues.clone();
        [
            (e0, ExactScalar::one()),
            (e1, self.l1.clone()),
            (e2, self.l2.clone()),
        ]
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        Spectrum::new(self.spectrum_entries())
    }
}

/// `[q(pq+p+q), pq+p+q, p, -q, -q^2]`
pub fn eigenvalues(params: &AT4Params) -> [ExactScalar; 5] {
    let q = params.qs();
    let t1 = params.theta1();
    [
        &q * &t1,
        t1,
        params.ps(),
        -&q,
        -(&q * &q),
    ]
}

/// `{q(pq+p+q), (q^2-1)(p+1), (r-1)q(p+q)/r, 1; 1, q(p+q)/r, (q^2-1)(p+1), q(pq+p+q)}`
pub fn intersection_array(params: &AT4Params) -> IntersectionArray {
    let (p, q, r) = (params.ps(), params.qs(), params.rs());
    let k = &q * params.theta1();
    let b1 = (&q * &q - 1) * (&p + 1);
    let c2 = &q * (&p + &q) / &r;
    let b2 = (&r - 1) * &c2;
    IntersectionArray::new(
        vec![k.clone(), b1.clone(), b2, ExactScalar::one()],
        vec![ExactScalar::one(), c2, b1, k],
    )
    .expect("AT4 array has nonzero c_i")
}

/// `[0, p(q+1), pq^2, p(q+1), 0]`
pub fn intersection_numbers_a(params: &AT4Params) -> [ExactScalar; 5] {
    let (p, q) = (params.ps(), params.qs());
    let a1 = &p * (&q + 1);
    [
        ExactScalar::zero(),
        a1.clone(),
        &p * &q * &q,
        a1,
        ExactScalar::zero(),
    ]
}

/// `k_0..k_4` from the array, so `k_4 = r - 1` for general `r`.
pub fn subconstituent_sizes(params: &AT4Params) -> [ExactScalar; 5] {
    let array = intersection_array(params);
    let k = array.k();
    [
        k[0].clone(),
        k[1].clone(),
        k[2].clone(),
        k[3].clone(),
        k[4].clone(),
    ]
}

/// Closed form `2(pq+p+q)(q^2-1)(p+1)/(p+q)` for `k_2` of an antipodal
/// double cover.
pub fn k2_double_cover(params: &AT4Params) -> ExactScalar {
    let (p, q) = (params.ps(), params.qs());
    params.theta1() * 2 * (&q * &q - 1) * (&p + 1) / (&p + &q)
}

pub fn local_graph_data(params: &AT4Params) -> LocalGraphData {
    let (p, q) = (params.ps(), params.qs());
    let t1 = params.theta1();
    let srg = SrgParams {
        n: &q * &t1,
        k: &p * (&q + 1),
        a: &p * 2 - &q,
        c: p.clone(),
    };
    let eigenvalues = [srg.k.clone(), p.clone(), -&q];
    let l1 = (&q * &q - 1) * &t1 / (&p + &q);
    let l2 = &p * &q * (&p + 1) * (&q + 1) / (&p + &q);
    LocalGraphData {
        srg,
        eigenvalues,
        l1,
        l2,
    }
}

/// Triple intersection number `(p+q)/r`.
pub fn alpha(params: &AT4Params) -> ExactScalar {
    (params.ps() + params.qs()) / params.rs()
}

/// `a_1 = theta_1 + theta_3`, `c_2 = (theta_0 + theta_2 theta_4) / r`.
pub fn recover_a1_c2(eigs: &[ExactScalar; 5], r: i64) -> (ExactScalar, ExactScalar) {
    let a1 = &eigs[1] + &eigs[3];
    let c2 = (&eigs[0] + &eigs[2] * &eigs[4]) / ExactScalar::from_int(r);
    (a1, c2)
}

/// Equality case of the tightness inequality
/// `(theta_1 + k/(a_1+1)) (theta_d + k/(a_1+1)) >= -k a_1 b_1 / (a_1+1)^2`.
pub fn tight_identity(
    k: &ExactScalar,
    a1: &ExactScalar,
    b1: &ExactScalar,
    theta1: &ExactScalar,
    theta_d: &ExactScalar,
) -> bool {
    let shift = k / (a1 + 1);
    let lhs = (theta1 + &shift) * (theta_d + &shift);
    let denom = (a1 + 1) * (a1 + 1);
    let rhs = -(k * a1 * b1) / denom;
    lhs == rhs
}

pub fn verify_tight_identity(params: &AT4Params) -> bool {
    let eigs = eigenvalues(params);
    let array = intersection_array(params);
    tight_identity(
        &eigs[0],
        &array.a()[1],
        &array.b()[1],
        &eigs[1],
        &eigs[4],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;
    use crate::scalar::{frac, int};

    fn ints(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn arrays_of_known_examples() {
        let a = intersection_array(&make_params(1, 2, 3).unwrap());
        assert_eq!(a.to_string(), "{10,6,4,1;1,2,6,10}");
        // Conway-Smith graph: 63 vertices
        assert_eq!(a.n(), &int(63));
        let a = intersection_array(&make_params(2, 2, 2).unwrap());
        assert_eq!(a.to_string(), "{16,9,4,1;1,4,9,16}");
        assert_eq!(a.n(), &int(70));
        let a = intersection_array(&make_params(4, 2, 2).unwrap());
        assert_eq!(a.to_string(), "{28,15,6,1;1,6,15,28}");
    }

    #[test]
    fn non_integral_entries_are_flagged() {
        // r does not divide p + q
        let a = intersection_array(&make_params(2, 2, 3).unwrap());
        assert!(!a.is_integral());
        assert_eq!(a.c()[1], frac(8, 3));
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalues(&make_params(2, 2, 2).unwrap()).to_vec(), ints(&[16, 8, 2, -2, -4]));
        assert_eq!(
            eigenvalues(&make_params(351, 9, 3).unwrap()).to_vec(),
            ints(&[31671, 3519, 351, -9, -81])
        );
    }

    #[test]
    fn local_graph_examples() {
        let l = local_graph_data(&make_params(2, 2, 2).unwrap());
        assert_eq!(l.srg, SrgParams::from_ints(16, 6, 2, 2));
        assert_eq!(l.spectrum().unwrap(), Spectrum::from_ints(&[(6, 1), (2, 6), (-2, 9)]).unwrap());
        let l = local_graph_data(&make_params(1, 2, 3).unwrap());
        assert_eq!(l.srg.a, 0);
        let l = local_graph_data(&make_params(351, 9, 3).unwrap());
        assert_eq!(l.l1, 782);
        assert_eq!(int(1) + &l.l1 + &l.l2, l.srg.n);
        assert!(l.srg.identity_holds());
    }

    #[test]
    fn a_and_k_examples() {
        let p = make_params(2, 2, 2).unwrap();
        assert_eq!(intersection_numbers_a(&p).to_vec(), ints(&[0, 6, 8, 6, 0]));
        assert_eq!(subconstituent_sizes(&p).to_vec(), ints(&[1, 16, 36, 16, 1]));
        assert_eq!(k2_double_cover(&p), 36);
        let p = make_params(4, 2, 2).unwrap();
        assert_eq!(subconstituent_sizes(&p).to_vec(), ints(&[1, 28, 70, 28, 1]));
        assert_eq!(intersection_numbers_a(&make_params(21, 3, 2).unwrap())[2], 189);
        // k_4 = r - 1
        assert_eq!(subconstituent_sizes(&make_params(1, 2, 3).unwrap())[4], 2);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&make_params(20, 4, 3).unwrap()), 8);
        assert_eq!(alpha(&make_params(351, 9, 3).unwrap()), 120);
        assert_eq!(alpha(&make_params(9, 3, 2).unwrap()), 6);
    }

    #[test]
    fn recover_examples() {
        let eigs = [int(16), int(8), int(2), int(-2), int(-4)];
        assert_eq!(recover_a1_c2(&eigs, 2), (int(6), int(4)));
        // total on out-of-family input
        let eigs = [int(48), int(12), int(1), int(-2), int(-6)];
        assert_eq!(recover_a1_c2(&eigs, 2), (int(10), int(21)));
    }

    #[test]
    fn tight_identity_examples() {
        assert!(verify_tight_identity(&make_params(2, 2, 2).unwrap()));
        assert!(verify_tight_identity(&make_params(9, 3, 2).unwrap()));
        // negative control: a1 + 1 in place of a1
        let p = make_params(2, 2, 2).unwrap();
        let eigs = eigenvalues(&p);
        let arr = intersection_array(&p);
        assert!(!tight_identity(&eigs[0], &(&arr.a()[1] + 1), &arr.b()[1], &eigs[1], &eigs[4]));
    }
}
