//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::Command;

use at4_cli::{cmd_enumerate, cmd_table1, EnumerationRequest, ReportDocument};
use at4_core::feasibility::{mu_srg_at_equality, tight_bound_equality, Status};
use at4_core::oracle::{
    build_halved_cube, build_johnson, distance_partition, integral_spectrum, local_graph,
    run_oracle, second_subconstituent, srg_parameters, verify_drg, OracleName, OracleReport,
};
use at4_core::subconstituent::traces;
use at4_core::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn p(p: i64, q: i64, r: i64) -> AT4Params {
    AT4Params::new(p, q, r).unwrap()
}

fn at4_json(args: &[&str]) -> Result<ReportDocument, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_at4"))
        .arg("--format")
        .arg("json")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), format!("at4 {args:?} exited {:?}", out.status.code()))?;
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn require_checks(report: &OracleReport, ids: &[&str]) -> Result<(), String> {
    for id in ids {
        let c = report.check(id).ok_or(format!("missing check {id}"))?;
        ensure(c.passed, format!("{id}: {}", c.detail))?;
    }
    Ok(())
}

fn c1_table() -> Outcome {
    let doc = cmd_table1().map_err(|e| e.to_string())?;
    let rows = doc.table.ok_or("no table")?;
    ensure(rows.len() == 23, format!("{} rows", rows.len()))?;
    for r in &rows {
        ensure(r.matches, format!("{} computed k={} alpha={} c2={}", r.label, r.k, r.alpha, r.c2))?;
    }
    let get = |l: &str| rows.iter().find(|r| r.label == l).unwrap();
    ensure((get("A9").k, get("A9").alpha, get("A9").c2) == (416, 8, 32), "A9")?;
    ensure((get("B12").k, get("B12").alpha, get("B12").c2) == (336, 10, 40), "B12")?;
    Ok("23 rows of (k,p,q,r,alpha,c2) reproduced exactly".into())
}

fn c2_johnson(report: &OracleReport) -> Outcome {
    let g = build_johnson(8, 4);
    let params = p(2, 2, 2);
    let arr = verify_drg(&g).ok_or("J(8,4) not distance-regular")?;
    ensure(arr == intersection_array(&params), format!("array {arr}"))?;
    ensure(arr.to_string() == "{16,9,4,1;1,4,9,16}", arr.to_string())?;
    for x in 0..g.order() {
        ensure(srg_parameters(&local_graph(&g, x)) == Some((16, 6, 2, 2)), "local graph")?;
    }
    let spec = integral_spectrum(&g).map_err(|e| e.to_string())?;
    let want = Spectrum::from_ints(&[(16, 1), (8, 7), (2, 20), (-2, 28), (-4, 14)]).unwrap();
    ensure(spec == want && global_multiplicities(&arr).unwrap() == want, format!("spectrum {spec}"))?;
    require_checks(report, &["drg.array", "local.srg", "mu.regular", "mu.shape", "alpha.exhaustive", "spectrum.global"])?;
    Ok(format!("array {arr}, SRG(16,6,2,2), mu = K_{{2,2}}, alpha = 2, spectrum {spec}"))
}

fn c3_halved_cube(report: &OracleReport) -> Outcome {
    let g = build_halved_cube(8);
    let want = IntersectionArray::from_ints(&[16, 9, 4, 1], &[1, 4, 9, 16]).unwrap();
    for x in [0, 1, 77, 127] {
        let d2 = second_subconstituent(&g, x);
        ensure(d2.order() == 70, "order")?;
        ensure(verify_drg(&d2).as_ref() == Some(&want), "array")?;
        for v in 0..70 {
            let dp = distance_partition(&d2, v).map_err(|e| e.to_string())?;
            ensure(dp.layers.len() == 5 && dp.layers[4].len() == 1, format!("k4({v}) != 1"))?;
        }
    }
    require_checks(report, &["delta2.drg", "delta2.antipodal"])?;
    let cover = delta2_tightness(&p(4, 2, 2)).map_err(|e| e.to_string())?.ok_or("no cover")?;
    ensure(cover.params == p(2, 2, 2) && cover.array == want, "delta2_tightness(4,2,2)")?;
    Ok(format!("second subconstituent is an antipodal 2-cover with array {want}; tightness gives {}", cover.params))
}

fn c4_traces() -> Outcome {
    let mut n = 0;
    for q in 2..=6i64 {
        for pp in 1..=q * q * q - 2 * q {
            if (pp + q) % 2 != 0 {
                continue;
            }
            let params = p(pp, q, 2);
            if !intersection_array(&params).is_integral() {
                continue;
            }
            n += 1;
            let s = delta2_spectrum(&params).map_err(|e| e.to_string())?;
            let t = traces(&params).map_err(|e| e.to_string())?;
            for j in 0..4 {
                ensure(s.power_sum(j as u32) == t.t[j], format!("{params} j={j}"))?;
            }
        }
    }
    let brute = integral_spectrum(&second_subconstituent(&build_johnson(8, 4), 0)).map_err(|e| e.to_string())?;
    let want = Spectrum::from_ints(&[(8, 1), (4, 6), (0, 9), (2, 4), (-2, 12), (-4, 4)]).unwrap();
    let formula = delta2_spectrum(&p(2, 2, 2)).and_then(|s| s.spectrum()).map_err(|e| e.to_string())?;
    ensure(brute == want && formula == want, format!("brute {brute}, formula {formula}"))?;
    Ok(format!("{n} integral r=2 candidates satisfy the four trace identities; J(8,4) gives {brute}"))
}

fn c5_excess() -> Outcome {
    for q in 2..=5i64 {
        let spec = delta2_spectrum(&p(q * q * q - 2 * q, q, 2))
            .and_then(|s| s.spectrum())
            .map_err(|e| e.to_string())?;
        let v = spectral_excess_value(&spec).map_err(|e| e.to_string())?;
        ensure(v == 1, format!("q={q}: {v}"))?;
    }
    Ok("p_4(kappa) = 1 for q = 2..5".into())
}

fn c6_equality() -> Outcome {
    let doc = at4_json(&["check", "351", "9", "3"])?;
    let r = doc.report(351, 9, 3).ok_or("no report")?;
    let params = p(351, 9, 3);
    ensure(tight_bound_equality(&params), "equality not detected")?;
    let mu = r.mu_graph_info.clone().ok_or("no mu-graph data")?;
    ensure(mu == mu_srg_at_equality(&params).unwrap(), "mismatch")?;
    ensure(mu.srg.to_string() == "SRG(1080,351,126,108)", mu.srg.to_string())?;
    let spec = mu.spectrum().map_err(|e| e.to_string())?;
    ensure(spec == Spectrum::from_ints(&[(351, 1), (27, 260), (-9, 819)]).unwrap(), spec.to_string())?;
    ensure(mu.srg.identity_holds(), "k(k-a-1) != (n-k-1)c")?;
    ensure(matches!(r.status, Status::KnownExists(_)), r.status.to_string())?;
    Ok(format!("{} with spectrum {spec}; SRG identity holds", mu.srg))
}

fn c7_chain() -> Outcome {
    let a = at4_json(&["check", "21", "3", "2"])?;
    ensure(!a.reports[0].status.survives(), a.reports[0].status.to_string())?;
    let b = at4_json(&["check", "15", "3", "2"])?;
    let r = &b.reports[0];
    ensure(matches!(r.status, Status::Infeasible(_)), r.status.to_string())?;
    let parity = r.conditions.iter().find(|c| c.id == "mu.parity").ok_or("no parity gate")?;
    ensure(!parity.passed && parity.witness.contains("27*15 = 405"), parity.witness.clone())?;
    let mut rejected = Vec::new();
    for q in [7i64, 11] {
        for pp in [q * q * q - 2 * q, q * q * q - q * q - q] {
            let doc = at4_json(&["check", &pp.to_string(), &q.to_string(), "2", "--no-registry"])?;
            let st = &doc.reports[0].status;
            ensure(matches!(st, Status::Infeasible(_)), format!("({pp},{q},2): {st}"))?;
            rejected.push(format!("({pp},{q},2)"));
        }
    }
    Ok(format!("(21,3,2), (15,3,2) [27*15 = 405 odd], {} rejected", rejected.join(", ")))
}

fn c8_enumerate() -> Outcome {
    let scan = |q: i64, registry: bool| -> Result<Vec<(i64, i64, i64)>, String> {
        let mut req = EnumerationRequest::new(q, q);
        req.registry = registry;
        Ok(cmd_enumerate(&req).map_err(|e| e.to_string())?.survivors())
    };
    let q2 = scan(2, true)?;
    ensure(q2 == vec![(1, 2, 3), (2, 2, 2), (4, 2, 2)], format!("q=2: {q2:?}"))?;
    let q3 = scan(3, true)?;
    ensure(q3 == vec![(3, 3, 3), (9, 3, 2), (9, 3, 3)], format!("q=3: {q3:?}"))?;
    let raw = scan(3, false)?;
    let diff: Vec<_> = raw.iter().filter(|t| !q3.contains(t)).collect();
    ensure(diff == vec![&(6, 3, 3)] && q3.iter().all(|t| raw.contains(t)), format!("diff {diff:?}"))?;
    Ok(format!("q=2 {q2:?}; q=3 {q3:?}; computed-only adds {diff:?}"))
}

fn c9_scan() -> Outcome {
    let doc = at4_json(&["lem1-scan", "3"])?;
    let qs: Vec<i128> = doc.scan.ok_or("no scan")?.iter().map(|e| e.q).collect();
    ensure(qs == vec![2, 3, 7, 9, 12, 17, 27, 57], format!("{qs:?}"))?;
    Ok(format!("q in {qs:?}"))
}

fn c10_properties(reports: &[OracleReport]) -> Outcome {
    let mut grid = 0;
    for q in 2..=9i64 {
        for pp in 1..=q * q * q - 2 * q {
            for r in (2..=pp + q).filter(|r| (pp + q) % r == 0) {
                let params = p(pp, q, r);
                if intersection_array(&params).is_integral() {
                    grid += 1;
                    ensure(verify_tight_identity(&params), format!("tight identity {params}"))?;
                }
            }
        }
    }
    let doc = cmd_table1().map_err(|e| e.to_string())?;
    for row in doc.table.unwrap() {
        let array = intersection_array(&row.params);
        let spec = global_multiplicities(&array).map_err(|e| format!("{}: {e}", row.label))?;
        ensure(
            spec.entries().iter().all(|e| e.multiplicity.is_integer() && e.multiplicity.is_positive())
                && &spec.order() == array.n(),
            format!("{} multiplicities", row.label),
        )?;
        let b = predistance_polynomials(&spec).map_err(|e| e.to_string())?;
        for i in 0..b.len() {
            for j in 0..b.len() {
                let ip = b.inner(&b.poly(i), &b.poly(j));
                let want = if i == j { b.value_at_lambda0(i) } else { ExactScalar::zero() };
                ensure(ip == want, format!("{} <p{i},p{j}>", row.label))?;
            }
        }
    }
    for rep in reports {
        require_checks(rep, &["h.subgraphs"])?;
    }
    Ok(format!(
        "tight identity on {grid} integral grid points; 23 rows have positive integral multiplicities and orthogonal predistance bases; H-subgraph bounds hold on both oracles"
    ))
}

fn main() {
    let j84 = run_oracle(OracleName::J84);
    let cube = run_oracle(OracleName::HalvedCube8);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("table regeneration", Box::new(c1_table)),
        ("J(8,4) oracle equivalence", Box::new(|| c2_johnson(&j84))),
        ("second subconstituent of the halved 8-cube", Box::new(|| c3_halved_cube(&cube))),
        ("second subconstituent spectrum and traces", Box::new(c4_traces)),
        ("spectral excess", Box::new(c5_excess)),
        ("mu-graph equality case", Box::new(c6_equality)),
        ("nonexistence chain", Box::new(c7_chain)),
        ("enumeration", Box::new(c8_enumerate)),
        ("divisibility scan", Box::new(c9_scan)),
        ("property suites", Box::new(|| c10_properties(&[j84.clone(), cube.clone()]))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
