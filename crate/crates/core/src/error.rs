use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("intersection array has non-integral entries: {0}")]
    NonIntegralArray(String),
    #[error("characteristic polynomial does not split over the rationals")]
    IrrationalSpectrum,
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
