use std::fmt::Write;

use at4_core::feasibility::ConditionResult;
use clap::ValueEnum;

use crate::document::{CandidateReport, ReportDocument, Request};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(doc),
        Format::Table => render_table(doc),
    }
}

fn mark(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn condition_line(out: &mut String, c: &ConditionResult) {
    let _ = writeln!(out, "  [{}] {:<28} {}", mark(c.passed), c.id, c.witness);
}

fn candidate_detail(out: &mut String, r: &CandidateReport) {
    let _ = writeln!(out, "AT4({},{},{})  array {}", r.p, r.q, r.r, r.array);
    let _ = writeln!(out, "status: {}", r.status);
    if let Some(hit) = &r.registry {
        let name = if hit.name.is_empty() { String::new() } else { format!("{} ", hit.name) };
        let _ = writeln!(out, "registry: {:?} {name}({})", hit.status, hit.source);
    }
    let _ = writeln!(out, "case: {:?}", r.case);
    let _ = writeln!(out, "conditions:");
    for c in &r.conditions {
        condition_line(out, c);
    }
    if let Some(c) = &r.mu_candidate {
        let _ = writeln!(out, "mu-graph candidate:");
        condition_line(out, c);
    }
    if let Some(mu) = &r.mu_graph_info {
        let spec = mu.spectrum().map(|s| s.to_string()).unwrap_or_else(|e| e.to_string());
        let _ = writeln!(out, "mu-graph at equality: {} spectrum {spec}", mu.srg);
    }
    let s = &r.spectra;
    let ev: Vec<String> = s.eigenvalues.iter().map(|e| e.to_string()).collect();
    let _ = writeln!(out, "eigenvalues: [{}]", ev.join(", "));
    let show = |x: &Option<at4_core::Spectrum>| x.as_ref().map_or("-".to_string(), |s| s.to_string());
    let _ = writeln!(out, "global spectrum: {}", show(&s.global));
    let _ = writeln!(out, "local spectrum: {}", show(&s.local));
    if s.delta2.is_some() {
        let _ = writeln!(out, "second subconstituent spectrum: {}", show(&s.delta2));
    }
}

fn failed_ids(r: &CandidateReport) -> String {
    let ids: Vec<&str> = r.conditions.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect();
    if ids.is_empty() {
        "-".into()
    } else {
        ids.join(",")
    }
}

fn summary_line(out: &mut String, doc: &ReportDocument) {
    let counts: Vec<String> = doc
        .summary
        .by_status
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let _ = writeln!(out, "visited {}: {}", doc.summary.visited, counts.join(" "));
}

fn render_table(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match &doc.request {
        Request::Check { .. } => {
            for r in &doc.reports {
                candidate_detail(&mut out, r);
            }
        }
        Request::Enumerate(_) => {
            let _ = writeln!(out, "{:>5} {:>6} {:>4}  {:<18} failed gates / registry", "q", "p", "r", "status");
            for r in &doc.reports {
                let extra = match &r.registry {
                    Some(hit) if !hit.name.is_empty() => format!("{} ({})", failed_ids(r), hit.name),
                    Some(hit) => format!("{} ({})", failed_ids(r), hit.source),
                    None => failed_ids(r),
                };
                let _ = writeln!(out, "{:>5} {:>6} {:>4}  {:<18} {extra}", r.q, r.p, r.r, r.status.label());
            }
            summary_line(&mut out, doc);
        }
        Request::Table1 => {
            let _ = writeln!(
                out,
                "{:<4} {:<14} {:>6} {:>4} {:>2} {:>2} {:>4} {:>5}  {:<5} {:<18} mu-graph",
                "row", "name", "k", "p", "q", "r", "alpha", "c2", "match", "status"
            );
            for t in doc.table.iter().flatten() {
                let mut mu = t.mu_published.clone();
                if !t.mu_computed.is_empty() {
                    mu = format!("{mu} [{}]", t.mu_computed.join("; "));
                }
                let _ = writeln!(
                    out,
                    "{:<4} {:<14} {:>6} {:>4} {:>2} {:>2} {:>4} {:>5}  {:<5} {:<18} {mu}",
                    t.label,
                    t.name,
                    t.k,
                    t.params.p(),
                    t.params.q(),
                    t.params.r(),
                    t.alpha,
                    t.c2,
                    if t.matches { "yes" } else { "NO" },
                    t.status.label(),
                );
            }
        }
        Request::Lem1Scan { r } => {
            let _ = writeln!(out, "r = {r}: q with (q+r) | r(r-2)(r-1)^2(r^2-r-1), p = (q^3-rq)/(r-1)");
            for e in doc.scan.iter().flatten() {
                let status = e.status.as_ref().map_or(e.note.clone(), |s| s.to_string());
                let _ = writeln!(out, "  q = {:<6} p = {:<10} {status}", e.q, e.p);
            }
        }
        Request::Oracle { name } => {
            if let Some(o) = &doc.oracle {
                let _ = writeln!(out, "oracle {name} = {}", o.params);
                for c in &o.checks {
                    let _ = writeln!(out, "  [{}] {:<18} {}", mark(c.passed), c.id, c.detail);
                }
                let _ = writeln!(out, "{}", if o.all_passed() { "all checks passed" } else { "VERIFICATION FAILED" });
            }
        }
    }
    out
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn render_csv(doc: &ReportDocument) -> String {
    let s = |x: &dyn ToString| x.to_string();
    match &doc.request {
        Request::Table1 => {
            let header: Vec<String> = ["row", "name", "k", "p", "q", "r", "alpha", "c2", "matches", "status", "mu_published", "mu_computed"]
                .map(String::from)
                .to_vec();
            let rows: Vec<Vec<String>> = doc
                .table
                .iter()
                .flatten()
                .map(|t| {
                    vec![
                        t.label.clone(),
                        t.name.clone(),
                        s(&t.k),
                        s(&t.params.p()),
                        s(&t.params.q()),
                        s(&t.params.r()),
                        s(&t.alpha),
                        s(&t.c2),
                        s(&t.matches),
                        t.status.label().to_string(),
                        t.mu_published.clone(),
                        t.mu_computed.join("; "),
                    ]
                })
                .collect();
            csv_string(&header, &rows)
        }
        Request::Lem1Scan { .. } => {
            let header: Vec<String> = ["q", "p", "status", "note"].map(String::from).to_vec();
            let rows: Vec<Vec<String>> = doc
                .scan
                .iter()
                .flatten()
                .map(|e| {
                    vec![
                        s(&e.q),
                        e.p.clone(),
                        e.status.as_ref().map_or(String::new(), |x| x.label().to_string()),
                        e.note.clone(),
                    ]
                })
                .collect();
            csv_string(&header, &rows)
        }
        Request::Oracle { .. } => {
            let header: Vec<String> = ["id", "passed", "detail"].map(String::from).to_vec();
            let rows: Vec<Vec<String>> = doc
                .oracle
                .iter()
                .flat_map(|o| &o.checks)
                .map(|c| vec![c.id.clone(), s(&c.passed), c.detail.clone()])
                .collect();
            csv_string(&header, &rows)
        }
        Request::Check { .. } | Request::Enumerate(_) => {
            // one column per gate id, in order of first appearance
            let mut ids: Vec<String> = Vec::new();
            for r in &doc.reports {
                for c in r.conditions.iter().chain(&r.mu_candidate) {
                    if !ids.contains(&c.id) {
                        ids.push(c.id.clone());
                    }
                }
            }
            let mut header: Vec<String> = ["p", "q", "r", "status"].map(String::from).to_vec();
            header.extend(ids.iter().cloned());
            let rows: Vec<Vec<String>> = doc
                .reports
                .iter()
                .map(|r| {
                    let mut row = vec![s(&r.p), s(&r.q), s(&r.r), r.status.label().to_string()];
                    for id in &ids {
                        let cell = r
                            .conditions
                            .iter()
                            .chain(&r.mu_candidate)
                            .find(|c| &c.id == id)
                            .map_or("", |c| if c.passed { "pass" } else { "fail" });
                        row.push(cell.to_string());
                    }
                    row
                })
                .collect();
            csv_string(&header, &rows)
        }
    }
}
