use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// Upper limit on each of `p`, `q`, `r`; keeps every fixed-width intermediate
/// (at most fourth powers in `i128`) exact.
pub const MAX_PARAM: i64 = i32::MAX as i64;

/// The parameter triple of an AT4(p,q,r) candidate: local graph eigenvalues
/// `p` and `-q`, antipodal class size `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AT4Params {
    p: i64,
    q: i64,
    r: i64,
}

impl AT4Params {
    /// Validates `p >= 1`, `q >= 2`, `r >= 2`. Anything else about the triple
    /// is a feasibility question, not a construction error.
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::Domain(format!("p must be at least 1, got {p}")));
        }
        if q < 2 {
            return Err(Error::Domain(format!("q must be at least 2, got {q}")));
        }
        if r < 2 {
            return Err(Error::Domain(format!("r must be at least 2, got {r}")));
        }
        if p.max(q).max(r) > MAX_PARAM {
            return Err(Error::Domain(format!(
                "parameters above {MAX_PARAM} are not supported, got ({p},{q},{r})"
            )));
        }
        Ok(AT4Params { p, q, r })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub(crate) fn ps(&self) -> ExactScalar {
        ExactScalar::from_int(self.p)
    }

    pub(crate) fn qs(&self) -> ExactScalar {
        ExactScalar::from_int(self.q)
    }

    pub(crate) fn rs(&self) -> ExactScalar {
        ExactScalar::from_int(self.r)
    }

    /// `pq + p + q`, the second largest eigenvalue.
    pub(crate) fn theta1(&self) -> ExactScalar {
        ExactScalar::from_int(self.p * self.q + self.p + self.q)
    }
}

/// Same as [`AT4Params::new`].
pub fn make_params(p: i64, q: i64, r: i64) -> Result<AT4Params> {
    AT4Params::new(p, q, r)
}

impl fmt::Display for AT4Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AT4({},{},{})", self.p, self.q, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_triples() {
        let p = make_params(1, 2, 3).unwrap();
        assert_eq!((p.p(), p.q(), p.r()), (1, 2, 3));
        // infeasible, but constructible
        assert!(make_params(21, 3, 2).is_ok());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(make_params(0, 2, 2), Err(Error::Domain(_))));
        assert!(matches!(make_params(1, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(make_params(1, 2, 1), Err(Error::Domain(_))));
    }
}
