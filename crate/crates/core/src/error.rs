use thiserror::Error;

use crate::universe::Universe;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: Universe, right: Universe },
    #[error("operation needs a {expected} universe, got {got}")]
    WrongUniverseKind { expected: &'static str, got: Universe },
    #[error("empty input to {0}")]
    EmptyInput(&'static str),
    #[error("set is not contained in the subspace carrier")]
    OutsideCarrier,
    #[error("finite universe too large: {0} points (limit {1})")]
    UniverseTooLarge(u32, u32),
    #[error("point {0} is not in {1}")]
    PointOutsideUniverse(String, Universe),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("precondition A ≺ B does not hold")]
    NotStronglyBelow,
    #[error("no interpolating witness found (the relation violates axiom 4)")]
    NoWitnessFound,
    #[error("unsupported proximity or algebra kind: {0}")]
    UnsupportedKind(String),
    #[error("proximity is not zero-dimensional")]
    NotZeroDimensional,
    #[error("sequence is not a ≺-chain")]
    NotAChain,
    #[error("chain could only be probed at finitely many levels")]
    ChainOnlyProbed,
    #[error("precondition not established: {0}")]
    PreconditionNotEstablished(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("algebra is not finitely atomic: {0}")]
    NotFinitelyAtomic(String),
    #[error("not an ideal of the algebra: {0}")]
    NotAnIdeal(String),
    #[error("map is not measurable")]
    NotMeasurable,
    #[error("set is not open")]
    NotOpen,
    #[error("pointwise limit is not computable for this sequence kind")]
    LimitNotComputable,
    #[error("coreflection of the target is unsupported: {0}")]
    TargetUnsupported(String),
    #[error("source algebra is not a sigma-algebra")]
    SourceNotSigma,
    #[error("law {law} expects {expected}")]
    ArityMismatch { law: String, expected: String },
    #[error("unknown law id {0}")]
    UnknownLaw(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Stable variant name, used when a report records a refusal.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UniverseMismatch { .. } => "UniverseMismatch",
            Error::WrongUniverseKind { .. } => "WrongUniverseKind",
            Error::EmptyInput(_) => "EmptyInput",
            Error::OutsideCarrier => "OutsideCarrier",
            Error::UniverseTooLarge(..) => "UniverseTooLarge",
            Error::PointOutsideUniverse(..) => "PointOutsideUniverse",
            Error::InvalidAlgebra(_) => "InvalidAlgebra",
            Error::InvalidFunction(_) => "InvalidFunction",
            Error::InvalidSequence(_) => "InvalidSequence",
            Error::NotStronglyBelow => "NotStronglyBelow",
            Error::NoWitnessFound => "NoWitnessFound",
            Error::UnsupportedKind(_) => "UnsupportedKind",
            Error::NotZeroDimensional => "NotZeroDimensional",
            Error::NotAChain => "NotAChain",
            Error::ChainOnlyProbed => "ChainOnlyProbed",
            Error::PreconditionNotEstablished(_) => "PreconditionNotEstablished",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::NotFinitelyAtomic(_) => "NotFinitelyAtomic",
            Error::NotAnIdeal(_) => "NotAnIdeal",
            Error::NotMeasurable => "NotMeasurable",
            Error::NotOpen => "NotOpen",
            Error::LimitNotComputable => "LimitNotComputable",
            Error::TargetUnsupported(_) => "TargetUnsupported",
            Error::SourceNotSigma => "SourceNotSigma",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::UnknownLaw(_) => "UnknownLaw",
            Error::Overflow(_) => "Overflow",
        }
    }
}
