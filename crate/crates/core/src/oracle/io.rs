use std::path::Path;

use super::{Graph, OracleError};

/// Parses the edge-list format: first line `n`, then one `u v` per line
/// (0-based). Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, OracleError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line, msg: String| OracleError::Parse { line, msg };
    let (line, first) = lines.next().ok_or_else(|| err(0, "missing vertex count".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| err(line, format!("bad vertex count {first:?}")))?;
    let mut g = Graph::new(n);
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(err(line, format!("expected `u v`, got {l:?}")));
        };
        let parse = |s: &str| -> Result<usize, OracleError> {
            let x: usize = s.parse().map_err(|_| err(line, format!("bad vertex {s:?}")))?;
            if x >= n {
                return Err(err(line, format!("vertex {x} out of range 0..{n}")));
            }
            Ok(x)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn read_edge_list(path: &Path) -> Result<Graph, OracleError> {
    let text = std::fs::read_to_string(path).map_err(|e| OracleError::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_edge_list(&text)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::build_johnson;

    #[test]
    fn round_trip() {
        let g = build_johnson(6, 2);
        let h = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_edge_list(""), Err(OracleError::Parse { .. })));
        assert!(matches!(parse_edge_list("3\n0 3"), Err(OracleError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n1 1"), Err(OracleError::Parse { .. })));
        assert!(matches!(parse_edge_list("3\n1"), Err(OracleError::Parse { .. })));
        assert_eq!(parse_edge_list("# c\n2\n\n0 1\n").unwrap().edge_count(), 1);
    }
}
