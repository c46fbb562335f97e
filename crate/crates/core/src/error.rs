use thiserror::Error;

use crate::engine::EngineId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot combine a {left} element with a {right} element")]
    MixedEngines { left: EngineId, right: EngineId },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },

    #[error("matrix is not unipotent: {0}")]
    NotUnipotent(String),

    #[error("elements do not commute: {0}")]
    NonCommuting(String),

    #[error("invalid letter {letter} for rank {rank}")]
    InvalidLetter { letter: i64, rank: usize },

    #[error("invalid Nielsen map: {0}")]
    InvalidNielsen(String),

    #[error("elementary matrix needs i != j (got {0},{0})")]
    DiagonalElementary(usize),

    #[error("invalid piecewise-linear map: {0}")]
    InvalidPlMap(String),

    #[error("point {0} lies outside [0,1]")]
    OutOfDomain(String),

    #[error("not an automorphism: {0}")]
    NotInvertible(String),

    #[error("duplicate generator label {0:?}")]
    DuplicateLabel(String),

    #[error("generators {0:?} and {1:?} are equal as group elements")]
    DuplicateElement(String, String),

    #[error("unknown generator label {0:?}")]
    UnknownLabel(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no witness strategy applies: {0}")]
    StrategyInapplicable(String),

    #[error("element cap of {0} exceeded")]
    CapExceeded(usize),

    #[error("malformed element key: {0}")]
    Decode(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
