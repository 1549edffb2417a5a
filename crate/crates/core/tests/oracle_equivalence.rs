use at4_core::oracle::{run_oracle, OracleName};

#[test]
fn johnson_graph_matches_formulas() {
    let report = run_oracle(OracleName::J84);
    for c in &report.checks {
        assert!(c.passed, "{}: {}", c.id, c.detail);
    }
    assert!(report.check("delta2.spectrum").is_some());
}

#[test]
fn halved_cube_matches_formulas() {
    let report = run_oracle(OracleName::HalvedCube8);
    for c in &report.checks {
        assert!(c.passed, "{}: {}", c.id, c.detail);
    }
    assert!(report.check("delta2.drg").is_some());
    assert!(report.check("delta2.antipodal").is_some());
}
