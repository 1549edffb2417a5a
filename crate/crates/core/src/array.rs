//! Intersection arrays of distance-regular graphs and their quotient-matrix
//! spectra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;

/// `{b_0, ..., b_{d-1}; c_1, ..., c_d}` together with the derived `a_i`,
/// subconstituent sizes `k_i` and vertex count.
///
/// Entries are exact rationals: a formula may produce a non-integral entry,
/// which is reported by [`IntersectionArray::non_integral`] instead of being
/// rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArray {
    b: Vec<ExactScalar>,
    c: Vec<ExactScalar>,
    a: Vec<ExactScalar>,
    k: Vec<ExactScalar>,
    n: ExactScalar,
}

impl IntersectionArray {
    /// Builds the array from `b_0..b_{d-1}` and `c_1..c_d`.
    ///
    /// Fails if the lengths differ or some `c_i` is zero (the `k_i` would be
    /// undefined).
    pub fn new(b: Vec<ExactScalar>, c: Vec<ExactScalar>) -> Result<Self> {
        if b.len() != c.len() || b.is_empty() {
            return Err(Error::Domain(format!(
                "need d >= 1 entries in both halves, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        if let Some(i) = c.iter().position(|x| x.is_zero()) {
            return Err(Error::Domain(format!("c_{} is zero", i + 1)));
        }
        let d = b.len();
        let valency = b[0].clone();
        let mut a = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let bi = b.get(i).cloned().unwrap_or_else(ExactScalar::zero);
            let ci = if i == 0 {
                ExactScalar::zero()
            } else {
                c[i - 1].clone()
            };
            a.push(&valency - &bi - ci);
        }
        let mut k = vec![ExactScalar::one()];
        for i in 0..d {
            let next = &k[i] * &b[i] / &c[i];
            k.push(next);
        }
        let n = k.iter().sum();
        Ok(IntersectionArray { b, c, a, k, n })
    }

    pub fn from_ints(b: &[i64], c: &[i64]) -> Result<Self> {
        IntersectionArray::new(
            b.iter().map(|&x| ExactScalar::from_int(x)).collect(),
            c.iter().map(|&x| ExactScalar::from_int(x)).collect(),
        )
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> &ExactScalar {
        &self.b[0]
    }

    /// `b_0..b_{d-1}`
    pub fn b(&self) -> &[ExactScalar] {
        &self.b
    }

    /// `c_1..c_d`
    pub fn c(&self) -> &[ExactScalar] {
        &self.c
    }

    /// `a_0..a_d`
    pub fn a(&self) -> &[ExactScalar] {
        &self.a
    }

    /// `k_0..k_d`
    pub fn k(&self) -> &[ExactScalar] {
        &self.k
    }

    pub fn n(&self) -> &ExactScalar {
        &self.n
    }

    /// `b_i` with the convention `b_d = 0`.
    pub fn b_at(&self, i: usize) -> ExactScalar {
        self.b.get(i).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// `c_i` with the convention `c_0 = 0`.
    pub fn c_at(&self, i: usize) -> ExactScalar {
        if i == 0 {
            ExactScalar::zero()
        } else {
            self.c[i - 1].clone()
        }
    }

    /// Names of all entries (array, `a_i`, `k_i`, `n`) that are not integers.
    pub fn non_integral(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |name: String, v: &ExactScalar| {
            if !v.is_integer() {
                out.push(format!("{name}={v}"));
            }
        };
        for (i, v) in self.b.iter().enumerate() {
            check(format!("b{i}"), v);
        }
        for (i, v) in self.c.iter().enumerate() {
            check(format!("c{}", i + 1), v);
        }
        for (i, v) in self.k.iter().enumerate() {
            check(format!("k{i}"), v);
        }
        check("n".into(), &self.n);
        out
    }

    pub fn is_integral(&self) -> bool {
        self.non_integral().is_empty()
    }

    /// Sign conditions: `b_0..b_{d-1} > 0`, `c_1..c_d > 0`, `a_i >= 0`.
    pub fn sign_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, v) in self.b.iter().enumerate() {
            if !v.is_positive() {
                out.push(format!("b{i}={v} <= 0"));
            }
        }
        for (i, v) in self.c.iter().enumerate() {
            if !v.is_positive() {
                out.push(format!("c{}={v} <= 0", i + 1));
            }
        }
        for (i, v) in self.a.iter().enumerate() {
            if v.is_negative() {
                out.push(format!("a{i}={v} < 0"));
            }
        }
        out
    }

    /// Characteristic polynomial `det(xI - L)` of the tridiagonal quotient
    /// matrix `L` with rows `(c_i, a_i, b_i)`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let x = Polynomial::monomial(1);
        let mut prev = Polynomial::constant(ExactScalar::one());
        let mut cur = &x - &Polynomial::constant(self.a[0].clone());
        for i in 1..=self.diameter() {
            let shift = &x - &Polynomial::constant(self.a[i].clone());
            let coupling = &self.b[i - 1] * &self.c[i - 1];
            let next = &(&shift * &cur) - &prev.scale(&coupling);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Standard sequence `u_0..u_d` for eigenvalue `theta`:
    /// `u_0 = 1`, `u_1 = theta / b_0`,
    /// `c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i`.
    pub fn standard_sequence(&self, theta: &ExactScalar) -> Vec<ExactScalar> {
        let d = self.diameter();
        let mut u = vec![ExactScalar::one(), theta / &self.b[0]];
        for i in 1..d {
            let next = ((theta - &self.a[i]) * &u[i] - &self.c[i - 1] * &u[i - 1]) / &self.b[i];
            u.push(next);
        }
        u
    }

    /// Multiplicity formula `n / sum_i u_i(theta)^2 k_i`.
    pub fn multiplicity(&self, theta: &ExactScalar) -> ExactScalar {
        let u = self.standard_sequence(theta);
        let norm: ExactScalar = u.iter().zip(&self.k).map(|(ui, ki)| ui * ui * ki).sum();
        &self.n / norm
    }
}

/// Eigenvalues of the quotient matrix (exactly, via integer root extraction of
/// the characteristic polynomial) with their multiplicities.
///
/// Multiplicities are returned as exact rationals; checking their
/// integrality is the caller's job.
pub fn global_multiplicities(array: &IntersectionArray) -> Result<Spectrum> {
    let bad = array.non_integral();
    if !bad.is_empty() {
        return Err(Error::NonIntegralArray(bad.join(", ")));
    }
    if let Some(v) = array.sign_violations().first() {
        return Err(Error::Domain(v.clone()));
    }
    let charpoly = array.characteristic_polynomial();
    let (roots, rest) = charpoly
        .integer_roots()
        .ok_or(Error::IrrationalSpectrum)?;
    if rest.degree() != Some(0) {
        return Err(Error::IrrationalSpectrum);
    }
    let mut eigenvalues: Vec<ExactScalar> = roots.into_iter().map(ExactScalar::from_int).collect();
    let len = eigenvalues.len();
    eigenvalues.dedup();
    if eigenvalues.len() != len {
        return Err(Error::DegenerateSpectrum(
            "quotient matrix has a repeated eigenvalue".into(),
        ));
    }
    Spectrum::new(eigenvalues.into_iter().map(|theta| {
        let m = array.multiplicity(&theta);
        (theta, m)
    }))
}

/// Array of an antipodal distance-regular graph of diameter four from
/// `(k, a_1, c_2, r)`: `{k, k-a_1-1, (r-1)c_2, 1; 1, c_2, k-a_1-1, k}`.
pub fn antipodal_array_from(k: i64, a1: i64, c2: i64, r: i64) -> Result<IntersectionArray> {
    if k <= 0 || a1 < 0 || c2 <= 0 || r < 2 {
        return Err(Error::Domain(format!(
            "need k > 0, a1 >= 0, c2 > 0, r >= 2; got ({k}, {a1}, {c2}, {r})"
        )));
    }
    let b1 = k - a1 - 1;
    let array = IntersectionArray::from_ints(&[k, b1, (r - 1) * c2, 1], &[1, c2, b1, k])?;
    let violations = array.sign_violations();
    if !violations.is_empty() {
        return Err(Error::Domain(violations.join(", ")));
    }
    Ok(array)
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[ExactScalar]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}
