use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("root system closure exceeded {0} roots")]
    NonFiniteSystem(usize),
    #[error("not a lattice automorphism of finite order: {0}")]
    NotAnAutomorphism(String),
    #[error("sigma does not permute the simple roots")]
    DoesNotPreserveBase,
    #[error("unknown root datum label `{0}`")]
    UnknownLabel(String),
    #[error("index {index} out of range for {len} simple roots")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("enumeration cap {cap} exceeded after {partial} elements")]
    CapExceeded { partial: usize, cap: usize },
    #[error("cone dimension {0} exceeds the supported maximum of 12")]
    DimensionTooLarge(usize),
    #[error("linear map is singular")]
    SingularMap,
    #[error("sigma^{0} does not fix the Levi type pointwise")]
    InvalidR(usize),
    #[error("classification rank {0} exceeds the supported maximum of 8")]
    RankTooLarge(usize),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
