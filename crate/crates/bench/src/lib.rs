//! Benchmark fixtures shared by the criterion targets in `benches/`.

use at4_core::AT4Params;

/// A spread of parameter triples: small existing graphs and one open
/// candidate with very large quotient eigenvalues.
pub fn sample_params() -> Vec<AT4Params> {
    [(2, 2, 2), (9, 3, 3), (1, 2, 3), (92511, 57, 3)]
        .into_iter()
        .map(|(p, q, r)| AT4Params::new(p, q, r).expect("valid fixture"))
        .collect()
}
