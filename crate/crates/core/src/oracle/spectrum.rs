use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;

use super::{Graph, OracleError};

/// Dense square integer matrix with overflow-checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let mut m = IntMatrix::zero(n);
        for u in 0..n {
            for v in g.neighbors(u) {
                m.data[u * n + v] = 1;
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn trace(&self) -> Result<i128, OracleError> {
        (0..self.n).try_fold(0i128, |acc, i| {
            acc.checked_add(self.data[i * self.n + i]).ok_or(OracleError::Overflow)
        })
    }

    /// `self - lambda * I`
    pub fn shift(&self, lambda: i128) -> Result<Self, OracleError> {
        let mut m = self.clone();
        for i in 0..self.n {
            let d = &mut m.data[i * self.n + i];
            *d = d.checked_sub(lambda).ok_or(OracleError::Overflow)?;
        }
        Ok(m)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<Self, OracleError> {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b == 0 {
                        continue;
                    }
                    let t = a.checked_mul(b).ok_or(OracleError::Overflow)?;
                    let cell = &mut out.data[i * n + j];
                    *cell = cell.checked_add(t).ok_or(OracleError::Overflow)?;
                }
            }
        }
        Ok(out)
    }
}

/// `tr(A^j)` for `j = 0..=jmax`.
pub fn trace_powers(g: &Graph, jmax: usize) -> Result<Vec<i128>, OracleError> {
    let a = IntMatrix::adjacency(g);
    let mut p = IntMatrix::identity(g.order());
    let mut out = vec![p.trace()?];
    for _ in 0..jmax {
        p = p.mul(&a)?;
        out.push(p.trace()?);
    }
    Ok(out)
}

fn claimed_integers(claimed: &Spectrum) -> Result<Vec<(i128, i128)>, OracleError> {
    claimed
        .entries()
        .iter()
        .map(|e| match (e.eigenvalue.to_i128(), e.multiplicity.to_i128()) {
            (Some(l), Some(m)) if m > 0 => Ok((l, m)),
            _ => Err(OracleError::InvalidClaim(format!(
                "eigenvalue {} with multiplicity {} is not an integer pair",
                e.eigenvalue, e.multiplicity
            ))),
        })
        .collect()
}

/// Solves `sum_i m_i lambda_i^j = t_j`, `j = 0..s-1`, exactly.
fn solve_vandermonde(lambdas: &[i128], traces: &[i128]) -> Option<Vec<ExactScalar>> {
    let s = lambdas.len();
    let mut rows: Vec<Vec<ExactScalar>> = (0..s)
        .map(|j| {
            let mut row: Vec<ExactScalar> = lambdas
                .iter()
                .map(|&l| ExactScalar::from(l).pow(j as u32))
                .collect();
            row.push(ExactScalar::from(traces[j]));
            row
        })
        .collect();
    for col in 0..s {
        let pivot = (col..s).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..s {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[s].clone()).collect())
}

/// Exact check that `claimed` is the spectrum of `g`: the product of
/// `A - lambda I` over the claimed eigenvalues vanishes, the multiplicities
/// solved from the traces of `A^0..A^{s-1}` match, and the trace identities
/// hold up to `j = max(s, 6)`.
pub fn verify_spectrum(g: &Graph, claimed: &Spectrum) -> Result<bool, OracleError> {
    let pairs = claimed_integers(claimed)?;
    let n = g.order() as i128;
    if pairs.iter().map(|p| p.1).sum::<i128>() != n || pairs.is_empty() {
        return Ok(false);
    }
    let a = IntMatrix::adjacency(g);
    let mut prod = IntMatrix::identity(g.order());
    for &(l, _) in &pairs {
        prod = prod.mul(&a.shift(l)?)?;
    }
    if !prod.is_zero() {
        return Ok(false);
    }
    let s = pairs.len();
    let lambdas: Vec<i128> = pairs.iter().map(|p| p.0).collect();
    let traces = trace_powers(g, s.max(6))?;
    let Some(mults) = solve_vandermonde(&lambdas, &traces) else {
        return Ok(false);
    };
    if mults.iter().zip(&pairs).any(|(m, &(_, c))| *m != ExactScalar::from(c)) {
        return Ok(false);
    }
    for (j, &t) in traces.iter().enumerate() {
        let mut sum: i128 = 0;
        for &(l, m) in &pairs {
            let term = l
                .checked_pow(j as u32)
                .and_then(|x| x.checked_mul(m))
                .ok_or(OracleError::Overflow)?;
            sum = sum.checked_add(term).ok_or(OracleError::Overflow)?;
        }
        if sum != t {
            return Ok(false);
        }
    }
    Ok(true)
}

const PRIMES: [u64; 3] = [2_147_483_647, 1_000_000_007, 998_244_353];

fn nullity_mod(g: &Graph, lambda: i64, p: u64) -> usize {
    let n = g.order();
    let l = lambda.rem_euclid(p as i64) as u64;
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = g.has_edge(i, j) as u64;
                    if i == j {
                        (a + p - l) % p
                    } else {
                        a
                    }
                })
                .collect()
        })
        .collect();
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow(m[rank][col], p - 2);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * pv % p) % p;
                }
            }
        }
        rank += 1;
    }
    n - rank
}

/// Integral spectrum of `g`, found from nullities of `A - lambda I` modulo
/// several primes and then verified exactly with [`verify_spectrum`].
pub fn integral_spectrum(g: &Graph) -> Result<Spectrum, OracleError> {
    let n = g.order();
    if n == 0 {
        return Spectrum::new(std::iter::empty()).map_err(|e| OracleError::InvalidClaim(e.to_string()));
    }
    let delta = g.max_degree() as i64;
    let mut entries = Vec::new();
    let mut total = 0;
    for lambda in -delta..=delta {
        // modular nullity only over-estimates the rational one
        let mut nullity = nullity_mod(g, lambda, PRIMES[0]);
        for &p in &PRIMES[1..] {
            if nullity == 0 {
                break;
            }
            nullity = nullity.min(nullity_mod(g, lambda, p));
        }
        if nullity > 0 {
            total += nullity;
            entries.push((ExactScalar::from_int(lambda), ExactScalar::from(nullity)));
        }
    }
    if total != n {
        return Err(OracleError::IrrationalSpectrum);
    }
    let spec = Spectrum::new(entries).map_err(|e| OracleError::InvalidClaim(e.to_string()))?;
    if verify_spectrum(g, &spec)? {
        Ok(spec)
    } else {
        Err(OracleError::IrrationalSpectrum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_complete, build_cycle, build_johnson};

    #[test]
    fn complete_graph() {
        let k4 = build_complete(4);
        let s = Spectrum::from_ints(&[(3, 1), (-1, 3)]).unwrap();
        assert!(verify_spectrum(&k4, &s).unwrap());
        assert_eq!(integral_spectrum(&k4).unwrap(), s);
        let wrong = Spectrum::from_ints(&[(3, 2), (-1, 2)]).unwrap();
        assert!(!verify_spectrum(&k4, &wrong).unwrap());
    }

    #[test]
    fn pentagon_irrational() {
        assert_eq!(integral_spectrum(&build_cycle(5)), Err(OracleError::IrrationalSpectrum));
    }

    #[test]
    fn johnson_permuted_multiplicities() {
        let j = build_johnson(8, 4);
        let good = Spectrum::from_ints(&[(16, 1), (8, 7), (2, 20), (-2, 28), (-4, 14)]).unwrap();
        assert!(verify_spectrum(&j, &good).unwrap());
        let bad = Spectrum::from_ints(&[(16, 1), (8, 7), (2, 28), (-2, 20), (-4, 14)]).unwrap();
        assert!(!verify_spectrum(&j, &bad).unwrap());
    }

    #[test]
    fn non_integral_claim() {
        let s = Spectrum::new([(crate::scalar::frac(1, 2), ExactScalar::one())]).unwrap();
        assert!(matches!(
            verify_spectrum(&build_complete(1), &s),
            Err(OracleError::InvalidClaim(_))
        ));
    }
}
