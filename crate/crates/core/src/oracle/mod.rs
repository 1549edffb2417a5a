//! Concrete witness graphs and brute-force checks of the structural claims:
//! distance-regularity, local graphs, mu-graphs, H-subgraphs, antipodal
//! classes, triple intersection numbers and exact integral spectra.
//!
//! Adjacency is stored as packed bit rows; everything here is exact.

mod build;
mod io;
mod spectrum;
mod structure;
mod suite;

use thiserror::Error;

pub use build::{build_complete, build_cycle, build_halved_cube, build_johnson, build_path};
pub use io::{parse_edge_list, read_edge_list, write_edge_list};
pub use suite::{delta2_brute_spectrum, is_complete_multipartite, run_oracle, srg_parameters, OracleCheck, OracleName, OracleReport};
pub use spectrum::{integral_spectrum, trace_powers, verify_spectrum, IntMatrix};
pub use structure::{
    all_distances, antipodal_classes, distance_partition, h_union, h_union_with, induced_subgraph,
    local_graph, mu_graph, second_subconstituent, triple_alpha_exhaustive, triple_alpha_sample,
    verify_drg, DistancePartition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("vertices {0} and {1} are at distance {2}, expected 2")]
    WrongDistance(usize, usize, u32),
    #[error("bad antipodal class: {0}")]
    BadClass(String),
    #[error("not antipodal: {0}")]
    NotAntipodal(String),
    #[error("spectrum is not integral")]
    IrrationalSpectrum,
    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,
    #[error("claimed spectrum is invalid: {0}")]
    InvalidClaim(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbourhood of `v` as a packed bit row.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Common valency, if regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// Bit row with the given vertices set.
    pub fn mask<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for v in vertices {
            m[v / 64] |= 1 << (v % 64);
        }
        m
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }
}

pub(crate) fn bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(crate) fn and3_count(a: &[u64], b: &[u64], c: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| (x & y & z).count_ones() as usize)
        .sum()
}
