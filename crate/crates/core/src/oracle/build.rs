use super::Graph;

/// Johnson graph `J(v, k)`: `k`-subsets of a `v`-set, adjacent when they
/// share `k - 1` elements. Vertices are ordered by their bitmask.
pub fn build_johnson(v: u32, k: u32) -> Graph {
    assert!(v <= 30 && k <= v);
    let sets: Vec<u32> = (0u32..1 << v).filter(|s| s.count_ones() == k).collect();
    let mut g = Graph::new(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if (sets[i] & sets[j]).count_ones() == k - 1 {
                g.add_edge(i, j);
            }
        }
    }
    let labels = sets
        .iter()
        .map(|s| {
            let elems: Vec<String> = (0..v).filter(|b| s >> b & 1 == 1).map(|b| b.to_string()).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    g.with_labels(labels)
}

/// Halved `dim`-cube: even-weight binary words of length `dim`, adjacent at
/// Hamming distance 2.
pub fn build_halved_cube(dim: u32) -> Graph {
    assert!(dim <= 20);
    let words: Vec<u32> = (0u32..1 << dim).filter(|w| w.count_ones() % 2 == 0).collect();
    let mut g = Graph::new(words.len());
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if (words[i] ^ words[j]).count_ones() == 2 {
                g.add_edge(i, j);
            }
        }
    }
    let labels = words
        .iter()
        .map(|w| format!("{:0width$b}", w, width = dim as usize))
        .collect();
    g.with_labels(labels)
}

pub fn build_complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn build_path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn build_cycle(n: usize) -> Graph {
    let mut g = build_path(n);
    if n > 2 {
        g.add_edge(n - 1, 0);
    }
    g
}
