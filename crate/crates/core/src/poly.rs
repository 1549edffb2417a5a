//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::ExactScalar;

/// Coefficients are stored lowest degree first; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<ExactScalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Polynomial::new(vec![c])
    }

    /// `x^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); n + 1];
        coeffs[n] = ExactScalar::one();
        Polynomial { coeffs }
    }

    /// `x - root`
    pub fn linear(root: &ExactScalar) -> Self {
        Polynomial::new(vec![-root, ExactScalar::one()])
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> ExactScalar {
        self.coeffs.last().cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Synthetic division by `x - root`. Returns quotient and remainder.
    pub fn deflate(&self, root: &ExactScalar) -> (Polynomial, ExactScalar) {
        if self.coeffs.is_empty() {
            return (Polynomial::zero(), ExactScalar::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![ExactScalar::zero(); n - 1];
        let mut carry = ExactScalar::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return (Polynomial::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Coefficients as integers, if all are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    /// All integer roots of a monic integer polynomial, with multiplicity, in
    /// descending order. The second value is the cofactor left after removing
    /// them (constant 1 when the polynomial splits over the integers).
    ///
    /// Returns `None` if the polynomial is not monic with integer coefficients.
    pub fn integer_roots(&self) -> Option<(Vec<BigInt>, Polynomial)> {
        if self.leading() != 1 || self.integer_coeffs().is_none() {
            return None;
        }
        let mut rest = self.clone();
        let mut roots = Vec::new();
        while rest.coeffs.first().is_some_and(|c| c.is_zero()) && rest.degree() > Some(0) {
            roots.push(BigInt::zero());
            rest = Polynomial::new(rest.coeffs[1..].to_vec());
        }
        if rest.degree().unwrap_or(0) > 0 {
            let bound = Self::root_bound(&rest.integer_coeffs()?);
            let chain = rest.sturm_chain();
            let mut distinct = Vec::new();
            isolate_integer_roots(&rest, &chain, -bound.clone(), bound, &mut distinct);
            for root in distinct {
                let r = ExactScalar::from_int(root.clone());
                loop {
                    let (q, rem) = rest.deflate(&r);
                    if !rem.is_zero() {
                        break;
                    }
                    roots.push(root.clone());
                    rest = q;
                }
            }
        }
        roots.sort_by(|a, b| b.cmp(a));
        Some((roots, rest))
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ExactScalar::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&factor * c);
            }
            quot[shift] = factor;
            rem.pop();
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * ExactScalar::from(i))
                .collect(),
        )
    }

    /// `f, f', -rem(f, f'), ...` down to a constant.
    fn sturm_chain(&self) -> Vec<Polynomial> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].degree().unwrap_or(0) == 0 {
                break;
            }
            let (_, rem) = chain[n - 2].div_rem(&chain[n - 1]);
            if rem.is_zero() {
                break;
            }
            chain.push(rem.scale(&ExactScalar::from_int(-1)));
        }
        chain
    }

    /// Fujiwara bound on root magnitude for a monic polynomial:
    /// `2 max(|a_{n-1}|, |a_{n-2}|^(1/2), ..., |a_0/2|^(1/n))`, rounded up.
    fn root_bound(coeffs: &[BigInt]) -> BigInt {
        let n = coeffs.len() - 1;
        let mut best = BigInt::zero();
        for k in 1..=n {
            let mut c = coeffs[n - k].abs();
            if k == n {
                c = (c + 1) / 2;
            }
            let mut root = c.nth_root(k as u32);
            if root.pow(k as u32) < c {
                root += 1;
            }
            best = best.max(root);
        }
        best * 2
    }
}

/// Sturm chain rescaled to integer coefficients (positive factors only, so
/// signs are unchanged).
struct IntegerChain(Vec<Vec<BigInt>>);

impl IntegerChain {
    fn new(chain: &[Polynomial]) -> Self {
        IntegerChain(
            chain
                .iter()
                .map(|p| {
                    let l = p
                        .coeffs
                        .iter()
                        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
                    let ls = ExactScalar::from_int(l);
                    p.coeffs
                        .iter()
                        .map(|c| (c * &ls).to_integer().expect("scaled to integers"))
                        .collect()
                })
                .collect(),
        )
    }

    /// Sign changes at `k - 1/2`, from `sum c_i (2k-1)^i 2^(d-i)`.
    fn sign_changes_below(&self, k: &BigInt) -> usize {
        let x: BigInt = k * 2 - 1;
        let two = BigInt::from(2);
        let mut last = 0i8;
        let mut count = 0;
        for coeffs in &self.0 {
            let mut acc = BigInt::zero();
            let mut pow2 = BigInt::from(1);
            // Horner in the homogenized form: acc = acc * x + c_i * 2^(d-i)
            for c in coeffs.iter().rev() {
                acc = acc * &x + c * &pow2;
                pow2 *= &two;
            }
            let s = match acc.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::Plus => 1,
                num_bigint::Sign::NoSign => continue,
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }
}

// Integer roots of a monic integer polynomial are its only rational roots, so
// the chain is never evaluated at a root when probing at half-integers.
fn isolate_integer_roots(
    f: &Polynomial,
    chain: &[Polynomial],
    lo: BigInt,
    hi: BigInt,
    out: &mut Vec<BigInt>,
) {
    let chain = IntegerChain::new(chain);
    // (a, b, V(a - 1/2), V(b + 1/2)); roots in the window = V(a-1/2) - V(b+1/2)
    let va = chain.sign_changes_below(&lo);
    let vb = chain.sign_changes_below(&(&hi + 1));
    let mut stack = vec![(lo, hi, va, vb)];
    while let Some((a, b, va, vb)) = stack.pop() {
        if a > b || va == vb {
            continue;
        }
        if a == b {
            if f.eval(&ExactScalar::from_int(a.clone())).is_zero() {
                out.push(a);
            }
            continue;
        }
        let mid: BigInt = (&a + &b).div_floor(&BigInt::from(2));
        let vm = chain.sign_changes_below(&(&mid + 1));
        stack.push((&mid + 1, b, vm, vb));
        stack.push((a, mid, va, vm));
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = ExactScalar::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = ExactScalar::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_traits::ToPrimitive;

    fn from_roots(roots: &[i64]) -> Polynomial {
        roots
            .iter()
            .fold(Polynomial::constant(int(1)), |acc, r| &acc * &Polynomial::linear(&int(*r)))
    }

    #[test]
    fn eval_and_deflate() {
        let p = from_roots(&[3, -2, 0]);
        assert_eq!(p.eval(&int(3)), 0);
        assert_eq!(p.eval(&int(1)), int(-6));
        let (q, rem) = p.deflate(&int(3));
        assert!(rem.is_zero());
        assert_eq!(q, from_roots(&[-2, 0]));
    }

    #[test]
    fn integer_roots_of_split_polynomial() {
        let p = from_roots(&[16, 8, 2, -2, -4]);
        let (roots, rest) = p.integer_roots().unwrap();
        let roots: Vec<i64> = roots.iter().map(|r| r.to_i64().unwrap()).collect();
        assert_eq!(roots, vec![16, 8, 2, -2, -4]);
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn repeated_and_zero_roots() {
        let p = from_roots(&[0, 0, 5, 5, -1]);
        let (roots, _) = p.integer_roots().unwrap();
        let roots: Vec<i64> = roots.iter().map(|r| r.to_i64().unwrap()).collect();
        assert_eq!(roots, vec![5, 5, 0, 0, -1]);
    }

    #[test]
    fn irrational_factor_is_left_over() {
        // (x - 3)(x^2 - 2)
        let p = &Polynomial::linear(&int(3)) * &Polynomial::new(vec![int(-2), int(0), int(1)]);
        let (roots, rest) = p.integer_roots().unwrap();
        assert_eq!(roots, vec![BigInt::from(3)]);
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn non_monic_rejected() {
        assert!(Polynomial::new(vec![int(1), int(2)]).integer_roots().is_none());
    }

    #[test]
    fn huge_roots_are_found_quickly() {
        let p = from_roots(&[1_600_479_855, 28_071_387, 92_511, -57, -3_249]);
        let (roots, rest) = p.integer_roots().unwrap();
        let roots: Vec<i64> = roots.iter().map(|r| r.to_i64().unwrap()).collect();
        assert_eq!(roots, vec![1_600_479_855, 28_071_387, 92_511, -57, -3_249]);
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn division_with_remainder() {
        // (x^3 - 1) = (x - 1)(x^2 + x + 1) + 0, (x^3 + 2) = x (x^2) + 2
        let f = Polynomial::new(vec![int(-1), int(0), int(0), int(1)]);
        let (q, r) = f.div_rem(&Polynomial::linear(&int(1)));
        assert_eq!(q, Polynomial::new(vec![int(1), int(1), int(1)]));
        assert!(r.is_zero());
        let g = Polynomial::new(vec![int(2), int(0), int(0), int(1)]);
        let (q, r) = g.div_rem(&Polynomial::monomial(2));
        assert_eq!(q, Polynomial::monomial(1));
        assert_eq!(r, Polynomial::constant(int(2)));
    }

    proptest::proptest! {
        #[test]
        fn roots_match_brute_force(
            roots in proptest::collection::vec(-30i64..30, 1..6),
            extra in proptest::collection::vec(-5i64..5, 0..3),
        ) {
            // times a monic factor that may or may not have integer roots
            let mut coeffs: Vec<ExactScalar> = extra.iter().map(|&c| int(c)).collect();
            coeffs.push(int(1));
            let p = &from_roots(&roots) * &Polynomial::new(coeffs);
            let (found, rest) = p.integer_roots().unwrap();
            let mut brute = Vec::new();
            let mut q = p.clone();
            for x in (-200i64..=200).rev() {
                loop {
                    let (d, rem) = q.deflate(&int(x));
                    if !rem.is_zero() || q.degree() == Some(0) {
                        break;
                    }
                    brute.push(BigInt::from(x));
                    q = d;
                }
            }
            proptest::prop_assert_eq!(found, brute);
            proptest::prop_assert_eq!(rest.degree(), q.degree());
        }
    }
}
