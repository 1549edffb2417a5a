use crate::array::IntersectionArray;

use super::{and3_count, and_count, bits, Graph, OracleError};

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub base: usize,
    pub layers: Vec<Vec<usize>>,
    pub dist: Vec<u32>,
}

impl DistancePartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }
}

fn bfs(g: &Graph, x: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[x] = 0;
    let mut frontier = vec![x];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for v in g.neighbors(u) {
                if dist[v] == UNREACHABLE {
                    dist[v] = level;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

pub fn distance_partition(g: &Graph, x: usize) -> Result<DistancePartition, OracleError> {
    let dist = bfs(g, x);
    if dist.contains(&UNREACHABLE) {
        return Err(OracleError::DisconnectedGraph);
    }
    let ecc = *dist.iter().max().unwrap() as usize;
    let mut layers = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        layers[d as usize].push(v);
    }
    Ok(DistancePartition {
        base: x,
        layers,
        dist,
    })
}

/// Full distance matrix; fails on disconnected graphs.
pub fn all_distances(g: &Graph) -> Result<Vec<Vec<u32>>, OracleError> {
    let d: Vec<Vec<u32>> = (0..g.order()).map(|x| bfs(g, x)).collect();
    if d.iter().any(|row| row.contains(&UNREACHABLE)) {
        return Err(OracleError::DisconnectedGraph);
    }
    Ok(d)
}

fn diameter_of(dist: &[Vec<u32>]) -> usize {
    dist.iter().flatten().copied().max().unwrap_or(0) as usize
}

/// The intersection array, if `g` is distance-regular. Exhaustive over all
/// ordered vertex pairs. Disconnected graphs and graphs of diameter 0 give
/// `None`.
pub fn verify_drg(g: &Graph) -> Option<IntersectionArray> {
    let dist = all_distances(g).ok()?;
    let d = diameter_of(&dist);
    if d == 0 {
        return None;
    }
    // masks[x][i] = Γ_i(x)
    let masks: Vec<Vec<Vec<u64>>> = (0..g.order())
        .map(|x| {
            (0..=d)
                .map(|i| g.mask((0..g.order()).filter(|&y| dist[x][y] as usize == i)))
                .collect()
        })
        .collect();
    let mut b: Vec<Option<usize>> = vec![None; d + 1];
    let mut c: Vec<Option<usize>> = vec![None; d + 1];
    for x in 0..g.order() {
        for y in 0..g.order() {
            let i = dist[x][y] as usize;
            let row = g.row(y);
            let ci = if i > 0 { and_count(row, &masks[x][i - 1]) } else { 0 };
            let bi = if i < d { and_count(row, &masks[x][i + 1]) } else { 0 };
            for (slot, val) in [(&mut b[i], bi), (&mut c[i], ci)] {
                match slot {
                    None => *slot = Some(val),
                    Some(prev) if *prev != val => return None,
                    _ => {}
                }
            }
        }
    }
    let b: Vec<i64> = (0..d).map(|i| b[i].unwrap() as i64).collect();
    let c: Vec<i64> = (1..=d).map(|i| c[i].unwrap() as i64).collect();
    IntersectionArray::from_ints(&b, &c).ok()
}

/// Induced subgraph on `s`, with vertices renumbered in the given order.
/// Labels are carried over when present.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Graph {
    let mut h = Graph::new(s.len());
    for (i, &u) in s.iter().enumerate() {
        for (j, &v) in s.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
    }
    match g.labels() {
        Some(l) => h.with_labels(s.iter().map(|&v| l[v].clone()).collect()),
        None => h,
    }
}

pub fn local_graph(g: &Graph, x: usize) -> Graph {
    let s: Vec<usize> = g.neighbors(x).collect();
    induced_subgraph(g, &s)
}

pub fn second_subconstituent(g: &Graph, x: usize) -> Graph {
    let dist = bfs(g, x);
    let s: Vec<usize> = (0..g.order()).filter(|&v| dist[v] == 2).collect();
    induced_subgraph(g, &s)
}

fn pair_distance(g: &Graph, x: usize, y: usize) -> u32 {
    bfs(g, x)[y]
}

/// The subgraph induced on the common neighbours of `x` and `y`.
pub fn mu_graph(g: &Graph, x: usize, y: usize) -> Result<Graph, OracleError> {
    let d = pair_distance(g, x, y);
    if d != 2 {
        return Err(OracleError::WrongDistance(x, y, d));
    }
    let common: Vec<u64> = g.row(x).iter().zip(g.row(y)).map(|(a, b)| a & b).collect();
    let s: Vec<usize> = bits(&common).collect();
    Ok(induced_subgraph(g, &s))
}

/// Union of the mu-graphs of `x` with each member of an antipodal class
/// lying in the second subconstituent of `x`.
pub fn h_union(g: &Graph, x: usize, class: &[usize]) -> Result<Graph, OracleError> {
    h_union_with(g, &all_distances(g)?, x, class)
}

/// [`h_union`] with a precomputed distance matrix.
pub fn h_union_with(
    g: &Graph,
    dist: &[Vec<u32>],
    x: usize,
    class: &[usize],
) -> Result<Graph, OracleError> {
    let d = diameter_of(dist) as u32;
    if class.is_empty() {
        return Err(OracleError::BadClass("empty class".into()));
    }
    for &y in class {
        if dist[x][y] != 2 {
            return Err(OracleError::BadClass(format!(
                "vertex {y} is at distance {} from {x}, not 2",
                dist[x][y]
            )));
        }
    }
    for (i, &y) in class.iter().enumerate() {
        for &z in &class[i + 1..] {
            if dist[y][z] != d {
                return Err(OracleError::BadClass(format!(
                    "vertices {y} and {z} are at distance {}, not {d}",
                    dist[y][z]
                )));
            }
        }
    }
    let mut union = vec![0u64; g.words()];
    for &y in class {
        for (u, (a, b)) in union.iter_mut().zip(g.row(x).iter().zip(g.row(y))) {
            *u |= a & b;
        }
    }
    let s: Vec<usize> = bits(&union).collect();
    Ok(induced_subgraph(g, &s))
}

/// Classes of the relation "equal or at maximal distance".
pub fn antipodal_classes(g: &Graph) -> Result<Vec<Vec<usize>>, OracleError> {
    let dist = all_distances(g)?;
    let d = diameter_of(&dist) as u32;
    if d <= 1 {
        return Err(OracleError::NotAntipodal(format!(
            "diameter {d}: every pair is at maximal distance, antipodality is not meaningful"
        )));
    }
    let n = g.order();
    let class_of = |x: usize| -> Vec<usize> {
        (0..n).filter(|&y| dist[x][y] == 0 || dist[x][y] == d).collect()
    };
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let cls = class_of(x);
        for &y in &cls {
            if class_of(y) != cls {
                return Err(OracleError::NotAntipodal(format!(
                    "distance-{d} relation is not transitive at vertices {x} and {y}"
                )));
            }
            assigned[y] = true;
        }
        classes.push(cls);
    }
    Ok(classes)
}

/// Checks that |Γ(x)∩Γ(y)∩Γ(z)| takes one value over all triples with
/// x ~ y and z at distance 2 from both, visiting at most `samples` triples
/// in lexicographic order. `None` if the values disagree or no triple exists.
pub fn triple_alpha_sample(g: &Graph, samples: usize) -> Option<i64> {
    triple_alpha_scan(g, Some(samples)).0
}

/// Exhaustive version; also returns the number of triples visited.
pub fn triple_alpha_exhaustive(g: &Graph) -> (Option<i64>, usize) {
    triple_alpha_scan(g, None)
}

fn triple_alpha_scan(g: &Graph, limit: Option<usize>) -> (Option<i64>, usize) {
    let Ok(dist) = all_distances(g) else {
        return (None, 0);
    };
    let n = g.order();
    let mut value: Option<usize> = None;
    let mut seen = 0usize;
    for x in 0..n {
        for y in g.neighbors(x) {
            for z in 0..n {
                if dist[x][z] != 2 || dist[y][z] != 2 {
                    continue;
                }
                if limit.is_some_and(|l| seen >= l) {
                    return (value.map(|v| v as i64), seen);
                }
                seen += 1;
                let a = and3_count(g.row(x), g.row(y), g.row(z));
                match value {
                    None => value = Some(a),
                    Some(v) if v != a => return (None, seen),
                    _ => {}
                }
            }
        }
    }
    (value.map(|v| v as i64), seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_complete, build_cycle, build_halved_cube, build_johnson, build_path};

    #[test]
    fn partitions() {
        let j = build_johnson(8, 4);
        assert_eq!(distance_partition(&j, 0).unwrap().sizes(), vec![1, 16, 36, 16, 1]);
        let h = build_halved_cube(8);
        assert_eq!(distance_partition(&h, 5).unwrap().sizes(), vec![1, 28, 70, 28, 1]);
        assert_eq!(distance_partition(&Graph::new(1), 0).unwrap().sizes(), vec![1]);
        assert_eq!(
            distance_partition(&Graph::new(2), 0),
            Err(OracleError::DisconnectedGraph)
        );
    }

    #[test]
    fn drg_small() {
        assert!(verify_drg(&build_path(3)).is_none());
        let c5 = verify_drg(&build_cycle(5)).unwrap();
        assert_eq!(c5.to_string(), "{2,1;1,1}");
        assert_eq!(verify_drg(&build_complete(4)).unwrap().to_string(), "{3;1}");
        assert!(verify_drg(&Graph::new(1)).is_none());
    }

    #[test]
    fn induced_empty() {
        let g = induced_subgraph(&build_complete(3), &[]);
        assert_eq!(g.order(), 0);
    }

    #[test]
    fn mu_wrong_distance() {
        let j = build_johnson(8, 4);
        let y = j.neighbors(0).next().unwrap();
        assert!(matches!(mu_graph(&j, 0, y), Err(OracleError::WrongDistance(_, _, 1))));
    }

    #[test]
    fn antipodal_degenerate() {
        assert!(matches!(
            antipodal_classes(&build_complete(4)),
            Err(OracleError::NotAntipodal(_))
        ));
        // path on 4 vertices: 0 and 3 are antipodal but 1 has no partner at distance 3
        // yet the relation is still an equivalence (singletons plus {0,3})
        assert_eq!(antipodal_classes(&build_path(4)).unwrap().len(), 3);
        // 5-cycle: relation is distance-2, not transitive
        assert!(antipodal_classes(&build_cycle(5)).is_err());
    }

    #[test]
    fn h_union_bad_class() {
        let j = build_johnson(8, 4);
        assert!(matches!(h_union(&j, 0, &[0]), Err(OracleError::BadClass(_))));
    }

    #[test]
    fn alpha_negative_control() {
        // deterministic pseudo-random graph from a fixed linear congruential stream
        let mut g = Graph::new(24);
        let mut s: u64 = 12345;
        for u in 0..24 {
            for v in u + 1..24 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if s >> 63 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        assert_eq!(triple_alpha_exhaustive(&g).0, None);
    }
}
