//! Exact feasibility analysis for AT4(p,q,r), the antipodal tight
//! distance-regular graphs of diameter four.
//!
//! All feasibility logic runs over exact rationals ([`ExactScalar`]). The
//! [`oracle`] module builds small concrete graphs and checks the same
//! quantities by brute force.

pub mod array;
pub mod at4;
pub mod error;
pub mod feasibility;
pub mod oracle;
pub mod params;
pub mod poly;
pub mod predistance;
pub mod scalar;
pub mod spectrum;
pub mod subconstituent;
pub mod table;

pub use array::{antipodal_array_from, global_multiplicities, IntersectionArray};
pub use at4::{
    alpha, eigenvalues, intersection_array, intersection_numbers_a, local_graph_data,
    recover_a1_c2, subconstituent_sizes, verify_tight_identity, LocalGraphData, SrgParams,
};
pub use error::{Error, Result};
pub use params::{make_params, AT4Params, MAX_PARAM};
pub use scalar::ExactScalar;
pub use spectrum::{Spectrum, SpectrumEntry};
pub use predistance::{predistance_polynomials, spectral_excess_value, PredistanceBasis};
pub use subconstituent::{
    delta2_spectrum, delta2_tightness, traces, Delta2Cover, Delta2Spectrum, TraceVector,
};
