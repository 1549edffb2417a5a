//! The full oracle-versus-formula comparison for the two constructible
//! graphs, J(8,4) = AT4(2,2,2) and the halved 8-cube = AT4(4,2,2).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::array::global_multiplicities;
use crate::at4::{alpha, intersection_array, intersection_numbers_a, local_graph_data, subconstituent_sizes};
use crate::feasibility::complete_multipartite_s;
use crate::params::AT4Params;
use crate::scalar::ExactScalar;
use crate::spectrum::Spectrum;
use crate::subconstituent::{delta2_spectrum, delta2_tightness};

use super::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleName {
    #[serde(rename = "j84")]
    J84,
    #[serde(rename = "halved8cube")]
    HalvedCube8,
}

impl OracleName {
    pub const ALL: [OracleName; 2] = [OracleName::J84, OracleName::HalvedCube8];

    pub fn as_str(self) -> &'static str {
        match self {
            OracleName::J84 => "j84",
            OracleName::HalvedCube8 => "halved8cube",
        }
    }

    pub fn params(self) -> AT4Params {
        match self {
            OracleName::J84 => AT4Params::new(2, 2, 2),
            OracleName::HalvedCube8 => AT4Params::new(4, 2, 2),
        }
        .expect("valid oracle parameters")
    }

    pub fn build(self) -> Graph {
        match self {
            OracleName::J84 => build_johnson(8, 4),
            OracleName::HalvedCube8 => build_halved_cube(8),
        }
    }
}

impl fmt::Display for OracleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OracleName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "j84" => Ok(OracleName::J84),
            "halved8cube" => Ok(OracleName::HalvedCube8),
            _ => Err(format!("unknown oracle {s:?} (expected j84 or halved8cube)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub name: OracleName,
    pub params: AT4Params,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&OracleCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// `(n, k, lambda, mu)` if `g` is strongly regular (complete and empty
/// graphs included, with the undefined parameter reported as 0).
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let k = g.regular_degree()?;
    let n = g.order();
    let (mut lam, mut mu) = (None::<usize>, None::<usize>);
    for u in 0..n {
        for v in u + 1..n {
            let c = and_count(g.row(u), g.row(v));
            let slot = if g.has_edge(u, v) { &mut lam } else { &mut mu };
            match slot {
                None => *slot = Some(c),
                Some(x) if *x != c => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lam.unwrap_or(0), mu.unwrap_or(0)))
}

/// Whether `g` is complete multipartite with `parts` parts of size `size`:
/// its complement must be a disjoint union of `parts` cliques of that size.
pub fn is_complete_multipartite(g: &Graph, parts: usize, size: usize) -> bool {
    let n = g.order();
    if n != parts * size {
        return false;
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for u in 0..n {
        if seen[u] {
            continue;
        }
        let part: Vec<usize> = (0..n).filter(|&v| v == u || !g.has_edge(u, v)).collect();
        if part.len() != size {
            return false;
        }
        for &a in &part {
            for &b in &part {
                if a != b && g.has_edge(a, b) {
                    return false;
                }
            }
            seen[a] = true;
        }
        count += 1;
    }
    count == parts
}

struct Checks(Vec<OracleCheck>);

impl Checks {
    fn push(&mut self, id: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(OracleCheck {
            id: id.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

fn sc(v: usize) -> ExactScalar {
    ExactScalar::from(v)
}

/// Builds the named graph and runs every brute-force comparison.
pub fn run_oracle(name: OracleName) -> OracleReport {
    let params = name.params();
    let g = name.build();
    let mut out = Checks(Vec::new());
    let (p, q, r) = (params.p(), params.q(), params.r());
    let n = g.order();

    // distance-regularity and the array
    let formula = intersection_array(&params);
    let drg = verify_drg(&g);
    out.push(
        "drg.array",
        drg.as_ref() == Some(&formula),
        format!(
            "brute force {} vs formula {formula}",
            drg.as_ref().map_or("not distance-regular".to_string(), |a| a.to_string())
        ),
    );
    let a_formula = intersection_numbers_a(&params);
    let a_ok = drg.as_ref().is_some_and(|a| a.a() == a_formula.as_slice());
    out.push("drg.a", a_ok, format!("a_i = {:?}", a_formula.iter().map(|x| x.to_string()).collect::<Vec<_>>()));

    let sizes = subconstituent_sizes(&params);
    let mut sizes_ok = sc(n) == formula.n().clone();
    for x in 0..n {
        match distance_partition(&g, x) {
            Ok(dp) => sizes_ok &= dp.sizes().iter().map(|&s| sc(s)).eq(sizes.iter().cloned()),
            Err(_) => sizes_ok = false,
        }
    }
    out.push(
        "drg.sizes",
        sizes_ok,
        format!("every vertex has layer sizes {:?}", sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
    );

    // global spectrum
    let expected = global_multiplicities(&formula).ok();
    let found = integral_spectrum(&g).ok();
    let spec_ok = match (&expected, &found) {
        (Some(e), Some(f)) => e == f && verify_spectrum(&g, e).unwrap_or(false),
        _ => false,
    };
    out.push(
        "spectrum.global",
        spec_ok,
        format!("{}", found.map_or("not integral".into(), |s| s.to_string())),
    );

    // local graphs
    let local = local_graph_data(&params);
    let local_spec = local.spectrum().ok();
    let mut local_ok = true;
    let mut local_seen = None;
    for x in 0..n {
        let lg = local_graph(&g, x);
        let srg = srg_parameters(&lg);
        local_seen = srg;
        let matches = srg.is_some_and(|(a, b, c, d)| {
            local.srg == crate::at4::SrgParams::from_ints(a as i64, b as i64, c as i64, d as i64)
        });
        local_ok &= matches;
        if x == 0 {
            local_ok &= local_spec
                .as_ref()
                .is_some_and(|s| verify_spectrum(&lg, s).unwrap_or(false));
        }
    }
    out.push(
        "local.srg",
        local_ok,
        format!("formula {} ({}), brute force {:?}", local.srg, local_spec.map_or("-".into(), |s| s.to_string()), local_seen),
    );

    // mu-graphs over all distance-2 pairs
    let dist = all_distances(&g).expect("oracle graphs are connected");
    let c2 = formula.c_at(2).to_i64().unwrap() as usize;
    let s = complete_multipartite_s(&params);
    let mut mu_reg = true;
    let mut mu_shape = true;
    let mut pairs = 0;
    for x in 0..n {
        for y in x + 1..n {
            if dist[x][y] != 2 {
                continue;
            }
            pairs += 1;
            let common: Vec<u64> = g.row(x).iter().zip(g.row(y)).map(|(a, b)| a & b).collect();
            let m = induced_subgraph(&g, &bits(&common).collect::<Vec<_>>());
            mu_reg &= m.order() == c2 && m.regular_degree() == Some(p as usize);
            mu_shape &= s.is_some_and(|s| is_complete_multipartite(&m, (s + 1) as usize, q as usize));
        }
    }
    out.push("mu.regular", mu_reg, format!("{pairs} pairs: {p}-regular on c2 = {c2} vertices"));
    out.push(
        "mu.shape",
        mu_shape,
        format!("K_{{{}x{q}}}", s.map_or("?".into(), |s| (s + 1).to_string())),
    );

    // triple intersection number
    let (alpha_found, triples) = triple_alpha_exhaustive(&g);
    let alpha_formula = alpha(&params);
    out.push(
        "alpha.exhaustive",
        alpha_found.is_some_and(|a| alpha_formula == a),
        format!("alpha = {alpha_formula}, brute force {alpha_found:?} over {triples} triples"),
    );

    // antipodal classes
    let classes = antipodal_classes(&g);
    let classes_ok = classes
        .as_ref()
        .is_ok_and(|c| c.len() * r as usize == n && c.iter().all(|c| c.len() == r as usize));
    out.push(
        "antipodal.classes",
        classes_ok,
        match &classes {
            Ok(c) => format!("{} classes of size {r}", c.len()),
            Err(e) => e.to_string(),
        },
    );

    // H-subgraphs: union of mu-graphs over one antipodal class in the second subconstituent
    let bound = ExactScalar::from_int(p * q * (1 + p + q - q * q)) / ExactScalar::from_int(p + q);
    let mut h_ok = classes.is_ok();
    let mut h_count = 0;
    if let Ok(classes) = &classes {
        for x in 0..n {
            for cls in classes {
                if !cls.iter().all(|&y| dist[x][y] == 2) {
                    continue;
                }
                h_count += 1;
                let ok = h_union_with(&g, &dist, x, cls).ok().and_then(|h| {
                    let spec = integral_spectrum(&h).ok()?;
                    Some(
                        h.order() as i64 == q * (p + q)
                            && h.regular_degree() == Some(p as usize)
                            && spec.multiplicity_of(&ExactScalar::from_int(p)) == r
                            && spec.multiplicity_of(&ExactScalar::from_int(-q)) >= bound
                            && spec.len() >= 3,
                    )
                });
                h_ok &= ok == Some(true);
            }
        }
    }
    out.push(
        "h.subgraphs",
        h_ok && h_count > 0,
        format!("{h_count} H-subgraphs: order {}, mult(p) = r, mult(-q) >= {bound}, >= 3 eigenvalues", q * (p + q)),
    );

    // second subconstituent
    let d2 = second_subconstituent(&g, 0);
    let d2_formula = delta2_spectrum(&params).and_then(|s| s.spectrum()).ok();
    out.push(
        "delta2.spectrum",
        d2_formula.as_ref().is_some_and(|s| verify_spectrum(&d2, s).unwrap_or(false)),
        d2_formula.map_or("no formula".into(), |s| s.to_string()),
    );
    if let Ok(Some(cover)) = delta2_tightness(&params) {
        let mut arr_ok = true;
        let mut antipodal_ok = true;
        for x in 0..n {
            let d2 = second_subconstituent(&g, x);
            arr_ok &= verify_drg(&d2).as_ref() == Some(&cover.array);
            // every vertex of the cover has exactly one vertex at distance 4
            antipodal_ok &= (0..d2.order()).all(|v| {
                distance_partition(&d2, v).is_ok_and(|dp| dp.layers.len() == 5 && dp.layers[4].len() == 1)
            });
        }
        out.push("delta2.drg", arr_ok, format!("every second subconstituent has array {}", cover.array));
        out.push("delta2.antipodal", antipodal_ok, "k4(v) = 1 for every vertex of every second subconstituent");
    }

    OracleReport {
        name,
        params,
        checks: out.0,
    }
}

/// Spectrum of a graph's second subconstituent at vertex 0, for reporting.
pub fn delta2_brute_spectrum(g: &Graph) -> Result<Spectrum, OracleError> {
    integral_spectrum(&second_subconstituent(g, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_detection() {
        assert!(is_complete_multipartite(&build_cycle(4), 2, 2));
        assert!(!is_complete_multipartite(&build_cycle(5), 5, 1));
        assert!(is_complete_multipartite(&build_complete(3), 3, 1));
    }

    #[test]
    fn srg_detection() {
        assert_eq!(srg_parameters(&build_cycle(5)), Some((5, 2, 0, 1)));
        assert_eq!(srg_parameters(&build_cycle(6)), None);
    }

    #[test]
    fn names() {
        assert_eq!("j84".parse::<OracleName>(), Ok(OracleName::J84));
        assert!("foo".parse::<OracleName>().is_err());
    }
}
