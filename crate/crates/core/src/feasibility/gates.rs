//! Individual feasibility conditions. Each gate is a pure function of the
//! parameters.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::array::global_multiplicities;
use crate::at4::{alpha, eigenvalues, intersection_array, local_graph_data};
use crate::params::AT4Params;
use crate::scalar::ExactScalar;
use crate::subconstituent::{delta2_spectrum, traces};

use super::mu::mu_srg_at_equality;
use super::ConditionResult;

fn divides(d: i128, n: i128) -> bool {
    d != 0 && n % d == 0
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// The basic arithmetic conditions on `(p, q, r)`, one result per
/// sub-condition, plus an informational flag at `p = q - 2`.
pub fn check_basic(params: &AT4Params) -> Vec<ConditionResult> {
    let (p, q, r) = (params.p(), params.q(), params.r());
    let mut out = Vec::new();

    let x = ExactScalar::from_int(big(p) * q * (p + q)) / params.rs();
    out.push(ConditionResult::new(
        "cover.even",
        x.is_even_integer(),
        format!("pq(p+q)/r = {x}"),
        "pq(p+q)/r is an even integer",
    ));

    let lhs = r as i128 * (p as i128 + 1);
    let rhs = q as i128 * (p as i128 + q as i128);
    out.push(ConditionResult::new(
        "cover.size_bound",
        lhs <= rhs,
        format!("r(p+1) = {lhs}, q(p+q) = {rhs}"),
        "r(p+1) <= q(p+q)",
    ));

    out.push(ConditionResult::new(
        "cover.r_divides",
        (p + q) % r == 0,
        format!("r = {r}, p+q = {}", p + q),
        "r divides p+q",
    ));

    out.push(ConditionResult::new(
        "local.p_lower",
        p >= q - 2,
        format!("p = {p}, q-2 = {}", q - 2),
        "p >= q-2",
    ));
    out.push(ConditionResult::new(
        "info.krein_boundary",
        true,
        if p == q - 2 {
            "p = q-2: Krein parameter q^4_44 vanishes".to_string()
        } else {
            format!("p - (q-2) = {}", p - (q - 2))
        },
        "p = q-2 iff q^4_44 = 0",
    ));

    let (p128, q128) = (p as i128, q as i128);
    let q2 = q128 * q128;
    let n1 = q2 * (q2 - 1);
    out.push(ConditionResult::new(
        "local.div_q",
        divides(p128 + q128, n1),
        format!("(p+q) = {} | q^2(q^2-1) = {n1}", p128 + q128),
        "(p+q) divides q^2(q^2-1)",
    ));
    let n2: BigInt = big(q).pow(2) * (big(q).pow(2) - 1) * (big(q).pow(2) + q - 1) * (big(q) + 2);
    let d2: BigInt = big(p) + big(q).pow(2);
    out.push(ConditionResult::new(
        "local.div_q2",
        n2.is_multiple_of(&d2),
        format!("(p+q^2) = {d2} | q^2(q^2-1)(q^2+q-1)(q+2) = {n2}"),
        "(p+q^2) divides q^2(q^2-1)(q^2+q-1)(q+2)",
    ));

    out.push(check_local_srg(params));
    out.extend(check_integrality(params));
    if r == 2 {
        out.extend(check_delta2(params));
    }
    out
}

/// Local graph `SRG(q(pq+p+q), p(q+1), 2p-q, p)` must have nonnegative
/// parameters.
pub fn check_local_srg(params: &AT4Params) -> ConditionResult {
    let local = local_graph_data(params);
    let ok = local.srg.is_nonnegative() && local.srg.identity_holds();
    ConditionResult::new(
        "local.srg_nonneg",
        ok,
        format!("local graph {}", local.srg),
        "local graph parameters (n',k',a',c') are nonnegative and consistent",
    )
}

/// Integrality of `c2`, `l1`, `l2`, `alpha`, the whole array, and the global
/// eigenvalue multiplicities.
pub fn check_integrality(params: &AT4Params) -> Vec<ConditionResult> {
    let array = intersection_array(params);
    let local = local_graph_data(params);
    let mut out = Vec::new();
    let mut scalar = |id: &str, name: &str, v: &ExactScalar| {
        out.push(ConditionResult::new(
            id,
            v.is_integer(),
            format!("{name} = {v}"),
            &format!("{name} is an integer"),
        ));
    };
    scalar("integral.c2", "c2", &array.c()[1]);
    scalar("integral.l1", "l1", &local.l1);
    scalar("integral.l2", "l2", &local.l2);
    scalar("integral.alpha", "alpha", &alpha(params));

    let bad = array.non_integral();
    out.push(ConditionResult::new(
        "integral.array",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{array}, n = {}", array.n())
        } else {
            format!("non-integral: {}", bad.join(", "))
        },
        "intersection array, k_i and n are integers",
    ));

    out.push(if !bad.is_empty() {
        ConditionResult::new(
            "integral.global_mult",
            true,
            "not applicable: array is not integral",
            "eigenvalue multiplicities are positive integers",
        )
    } else {
        match global_multiplicities(&array) {
            Ok(spec) => {
                let expected = eigenvalues(params).to_vec();
                let matches = spec.eigenvalues() == expected;
                let integral = spec.has_integral_multiplicities();
                let mut witness = format!("{spec}");
                if !matches {
                    witness.push_str("; eigenvalues differ from closed form");
                }
                ConditionResult::new(
                    "integral.global_mult",
                    matches && integral && spec.order() == *array.n(),
                    witness,
                    "eigenvalue multiplicities are positive integers",
                )
            }
            Err(e) => ConditionResult::new(
                "integral.global_mult",
                false,
                e.to_string(),
                "eigenvalue multiplicities are positive integers",
            ),
        }
    });
    out
}

/// For `r = 2`: the second subconstituent multiplicities are nonnegative
/// integers and reproduce the trace counts.
pub fn check_delta2(params: &AT4Params) -> Vec<ConditionResult> {
    let (Ok(spec), Ok(tr)) = (delta2_spectrum(params), traces(params)) else {
        return Vec::new();
    };
    let bad = spec.bad_multiplicities();
    let mults = ConditionResult::new(
        "delta2.multiplicities",
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "m1 = {}, m2 = {}, m3 = {}",
                spec.m1(),
                spec.m2(),
                spec.m3()
            )
        } else {
            format!("bad: {}", bad.join(", "))
        },
        "second subconstituent multiplicities are nonnegative integers",
    );
    let sums: Vec<ExactScalar> = (0..4).map(|j| spec.power_sum(j)).collect();
    let consistent = sums.iter().zip(&tr.t).all(|(a, b)| a == b);
    let trace = ConditionResult::new(
        "delta2.traces",
        consistent,
        format!(
            "sum m lambda^j = [{}], traces = [{}]",
            join(&sums),
            join(&tr.t)
        ),
        "second subconstituent spectrum reproduces tr(B^j), j = 0..3",
    );
    vec![mults, trace]
}

fn join(v: &[ExactScalar]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// `r(p+q) <= p + q^3`, recording whether equality holds.
pub fn check_tight_bound(params: &AT4Params) -> ConditionResult {
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    let lhs = r * (p + q);
    let rhs = p + q * q * q;
    let relation = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "= (equality)",
        std::cmp::Ordering::Greater => ">",
    };
    ConditionResult::new(
        "mu.tight_bound",
        lhs <= rhs,
        format!("r(p+q) = {lhs} {relation} p+q^3 = {rhs}"),
        "r <= (p+q^3)/(p+q)",
    )
}

pub fn tight_bound_equality(params: &AT4Params) -> bool {
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    r * (p + q) == p + q * q * q
}

/// `p <= q^3 - 2q`.
pub fn check_p_bound(params: &AT4Params) -> ConditionResult {
    let q = params.q() as i128;
    let bound = q * q * q - 2 * q;
    ConditionResult::new(
        "mu.p_bound",
        (params.p() as i128) <= bound,
        format!("p = {}, q^3-2q = {bound}", params.p()),
        "p <= q^3-2q",
    )
}

/// `c2 * c'` is even, with `c' = p`.
pub fn check_parity(params: &AT4Params) -> ConditionResult {
    let c2 = intersection_array(params).c()[1].clone();
    let anchor = "c2*c' is even (c' = p)";
    match c2.to_integer() {
        None => ConditionResult::new(
            "mu.parity",
            true,
            format!("not applicable: c2 = {c2} is not an integer"),
            anchor,
        ),
        Some(c2) => {
            let product = &c2 * params.p();
            ConditionResult::new(
                "mu.parity",
                product.is_even(),
                format!("c2*c' = {c2}*{} = {product}", params.p()),
                anchor,
            )
        }
    }
}

/// At equality with `r > 2`: `(q+r) | r(r-2)(r-1)^2(r^2-r-1)`.
pub fn check_equality_divisibility(params: &AT4Params) -> ConditionResult {
    let anchor = "at equality with r > 2: (q+r) divides r(r-2)(r-1)^2(r^2-r-1)";
    let (q, r) = (params.q() as i128, params.r() as i128);
    if !tight_bound_equality(params) || r <= 2 {
        return ConditionResult::new(
            "mu.equality_divisibility",
            true,
            "not applicable",
            anchor,
        );
    }
    let n = lem1_numerator(params.r());
    ConditionResult::new(
        "mu.equality_divisibility",
        n.is_multiple_of(&BigInt::from(q + r)),
        format!("(q+r) = {} | {n}", q + r),
        anchor,
    )
}

/// `r(r-2)(r-1)^2(r^2-r-1)`
pub fn lem1_numerator(r: i64) -> BigInt {
    let r = big(r);
    &r * (&r - 2) * (&r - 1) * (&r - 1) * (&r * &r - &r - 1)
}

/// At equality the forced mu-graph SRG needs integral parameters and
/// multiplicities.
pub fn check_mu_equality_srg(params: &AT4Params) -> ConditionResult {
    let anchor = "at equality the mu-graph is an SRG with integral parameters";
    match mu_srg_at_equality(params) {
        None => ConditionResult::new("mu.equality_srg", true, "not applicable", anchor),
        Some(d) => ConditionResult::new(
            "mu.equality_srg",
            d.is_integral() && d.srg.identity_holds() && !d.m_minus.is_negative(),
            format!(
                "{} with spectrum {{{}^1, {}^{}, {}^{}}}",
                d.srg, d.srg.k, d.lambda, d.m_plus, d.smallest, d.m_minus
            ),
            anchor,
        ),
    }
}

/// `pq - r(p+q) + q^3 > 0`; informational.
pub fn check_bound_positivity(params: &AT4Params) -> ConditionResult {
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    let v = p * q - r * (p + q) + q * q * q;
    ConditionResult::new(
        "info.bound_positivity",
        true,
        format!("pq - r(p+q) + q^3 = {v}{}", if v > 0 { "" } else { " (not positive)" }),
        "pq - r(p+q) + q^3 > 0",
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", content = "s")]
pub enum Case {
    /// (1,2,3)
    ConwaySmith,
    /// (q-2, q, q-1)
    QMinus2Family,
    /// (qs, q, q)
    QsqqFamily(i64),
    /// `(p+q)(2q+1) >= 3r(p+2)`, `alpha >= 3`, `r <= q-1`
    GenericCase,
    NoCase,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Case::ConwaySmith => write!(f, "Conway-Smith (1,2,3)"),
            Case::QMinus2Family => write!(f, "(q-2,q,q-1) family"),
            Case::QsqqFamily(s) => write!(f, "(qs,q,q) family, s = {s}"),
            Case::GenericCase => write!(f, "generic"),
            Case::NoCase => write!(f, "none"),
        }
    }
}

pub fn classify_case(params: &AT4Params) -> Case {
    let (p, q, r) = (params.p(), params.q(), params.r());
    if (p, q, r) == (1, 2, 3) {
        return Case::ConwaySmith;
    }
    if p == q - 2 && r == q - 1 {
        return Case::QMinus2Family;
    }
    if r == q && p % q == 0 {
        return Case::QsqqFamily(p / q);
    }
    let (p, q, r) = (p as i128, q as i128, r as i128);
    let inequality = (p + q) * (2 * q + 1) >= 3 * r * (p + 2);
    let alpha_ok = p + q >= 3 * r;
    if inequality && alpha_ok && r <= q - 1 {
        Case::GenericCase
    } else {
        Case::NoCase
    }
}

pub fn check_case(params: &AT4Params) -> ConditionResult {
    let case = classify_case(params);
    let (p, q, r) = (params.p() as i128, params.q() as i128, params.r() as i128);
    let witness = match case {
        Case::GenericCase | Case::NoCase => format!(
            "{case}: (p+q)(2q+1) = {} vs 3r(p+2) = {}, alpha = {}, r = {r} vs q-1 = {}",
            (p + q) * (2 * q + 1),
            3 * r * (p + 2),
            alpha(params),
            q - 1
        ),
        _ => case.to_string(),
    };
    ConditionResult::new(
        "case.classification",
        case != Case::NoCase,
        witness,
        "exactly one of: (1,2,3); (q-2,q,q-1); (qs,q,q); (p+q)(2q+1) >= 3r(p+2) with alpha >= 3 and r <= q-1",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    fn find<'a>(v: &'a [ConditionResult], id: &str) -> &'a ConditionResult {
        v.iter().find(|c| c.id == id).unwrap()
    }

    #[test]
    fn basic_examples() {
        let v = check_basic(&make_params(1, 2, 3).unwrap());
        assert!(v.iter().all(|c| c.passed), "{v:#?}");
        assert!(find(&v, "local.div_q2").witness.contains("(p+q^2) = 5 | q^2(q^2-1)(q^2+q-1)(q+2) = 240"));

        let v = check_basic(&make_params(3, 2, 5).unwrap());
        let c = find(&v, "cover.size_bound");
        assert!(!c.passed);
        assert_eq!(c.witness, "r(p+1) = 20, q(p+q) = 10");

        let v = check_basic(&make_params(1, 4, 5).unwrap());
        assert!(!find(&v, "local.p_lower").passed);
    }

    #[test]
    fn krein_boundary_is_informational() {
        let v = check_basic(&make_params(2, 4, 3).unwrap());
        let c = find(&v, "info.krein_boundary");
        assert!(c.passed);
        assert!(c.witness.contains("vanishes"));
    }

    #[test]
    fn tight_bound_examples() {
        let c = check_tight_bound(&make_params(351, 9, 3).unwrap());
        assert!(c.passed);
        assert!(c.witness.contains("1080 = (equality)"));
        assert!(!check_tight_bound(&make_params(6, 2, 2).unwrap()).passed);
        let p = make_params(4, 2, 2).unwrap();
        assert!(check_tight_bound(&p).passed);
        assert!(tight_bound_equality(&p));
    }

    #[test]
    fn p_bound_examples() {
        assert!(check_p_bound(&make_params(21, 3, 2).unwrap()).passed);
        assert!(!check_p_bound(&make_params(22, 3, 2).unwrap()).passed);
        assert!(check_p_bound(&make_params(1, 2, 3).unwrap()).passed);
    }

    #[test]
    fn parity_examples() {
        let c = check_parity(&make_params(15, 3, 2).unwrap());
        assert!(!c.passed);
        assert_eq!(c.witness, "c2*c' = 27*15 = 405");
        assert!(check_parity(&make_params(2, 2, 2).unwrap()).passed);
        let c = check_parity(&make_params(9, 3, 2).unwrap());
        assert!(c.passed);
        assert_eq!(c.witness, "c2*c' = 18*9 = 162");
        let c = check_parity(&make_params(2, 2, 3).unwrap());
        assert!(c.passed && c.witness.starts_with("not applicable"));
    }

    #[test]
    fn equality_divisibility_examples() {
        let c = check_equality_divisibility(&make_params(351, 9, 3).unwrap());
        assert!(c.passed);
        assert_eq!(c.witness, "(q+r) = 12 | 60");
        assert!(check_equality_divisibility(&make_params(161, 7, 3).unwrap()).passed);
        assert!(!check_equality_divisibility(&make_params(26, 4, 3).unwrap()).passed);
        let c = check_equality_divisibility(&make_params(2, 2, 2).unwrap());
        assert!(c.passed && c.witness == "not applicable");
    }

    #[test]
    fn case_examples() {
        assert_eq!(classify_case(&make_params(1, 2, 3).unwrap()), Case::ConwaySmith);
        assert_eq!(classify_case(&make_params(9, 3, 3).unwrap()), Case::QsqqFamily(3));
        assert_eq!(classify_case(&make_params(8, 4, 2).unwrap()), Case::GenericCase);
        assert_eq!(classify_case(&make_params(2, 4, 3).unwrap()), Case::QMinus2Family);
        // alpha = 2 < 3, r = 2 > q-1 = 1
        assert_eq!(classify_case(&make_params(2, 2, 4).unwrap()), Case::NoCase);
        assert!(!check_case(&make_params(2, 2, 4).unwrap()).passed);
    }
}
