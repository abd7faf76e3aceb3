//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by diagram parsing and the root-combinatorics operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown diagram type letter '{0}'")]
    UnknownType(char),
    #[error("rank {rank} out of range for type {letter}")]
    RankOutOfRange { letter: char, rank: usize },
    #[error("marked node {mark} not in 1..={rank}")]
    MarkOutOfRange { mark: usize, rank: usize },
    #[error("marking set is empty")]
    EmptyMarking,
    #[error("node subset is empty")]
    EmptyNodeSet,
    #[error("node {0} is not in the diagram")]
    NodeNotInDiagram(usize),
    #[error("operation requires a connected diagram")]
    Disconnected,
    #[error("graph is not a Dynkin diagram of finite type")]
    NotDynkin,
    #[error("rank mismatch between operands")]
    RankMismatch,
    #[error("vector is not a root of this root system")]
    NotARoot,
    #[error("mixed signs: vector is neither a positive nor a negative root")]
    MixedSigns,
    #[error("element is not a minimal coset representative")]
    NotMinimalRepresentative,
    #[error("element is not a maximal coset representative")]
    NotMaximalRepresentative,
    #[error("root subset is not an inversion set")]
    NotAnInversionSet,
    #[error("Schubert datum is not horizontal")]
    NotHorizontal,
    #[error("operation requires a maximal parabolic (exactly one marked node)")]
    NotMaximalParabolic,
    #[error("factor is not cominuscule")]
    NonCominusculeFactor,
    #[error("data come from different parabolic contexts")]
    MixedContexts,
    #[error("coset enumeration exceeded the cap of {cap} elements")]
    EnumerationCapExceeded { cap: usize },
    #[error("internal reconstruction failure: {0}")]
    ReconstructionFailed(String),
    #[error("ambient dimension m = {0} is below the minimum of 5")]
    AmbientTooSmall(usize),
    #[error("invalid isotropic Schubert class: {0}")]
    InvalidClass(String),
    #[error("curve check is only defined for non-horizontal classes")]
    HorizontalClass,
    #[error("cross-check requires 5 <= m <= 12, got {0}")]
    CrosscheckRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
