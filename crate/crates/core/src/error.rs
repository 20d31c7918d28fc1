use thiserror::Error;

use crate::category::{BackendId, LawReport, ObjectRef};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: ObjectRef, found: ObjectRef },

    #[error("backend mismatch: {left:?} vs {right:?}")]
    BackendMismatch { left: BackendId, right: BackendId },

    #[error("object {0} is not valid in this backend")]
    UnknownObject(ObjectRef),

    #[error("object {0} is not a tensor product")]
    NotATensor(ObjectRef),

    #[error("object {0} is not an internal hom")]
    NotAHom(ObjectRef),

    #[error("carrier of {0} is too large to tabulate")]
    TooLarge(ObjectRef),

    #[error("malformed payload: {0}")]
    MalformedPayload(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown label {label:?} in {context}")]
    UnknownLabel { label: String, context: String },

    #[error("empty diagram path")]
    EmptyPath,

    #[error("not associative at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),

    #[error("unit law fails at {0}")]
    UnitLawFails(String),

    #[error("monoid is not commutative")]
    NotCommutative,

    #[error("the monoidal unit of {0:?} is not terminal")]
    UnitNotTerminal(BackendId),

    #[error("law violated: {0}")]
    LawViolation(LawReport),

    #[error("morphism does not equalize the pair")]
    NotEqualizing,

    #[error("time objects differ")]
    TimeMismatch,

    #[error("flows do not match at the shared endpoint")]
    EndpointMismatch,

    #[error("index {index} out of range for {object}")]
    OutOfRange { index: usize, object: ObjectRef },

    #[error("operation unsupported by {0:?} backend")]
    Unsupported(BackendId),

    #[error("invariant broken: {0}")]
    Invariant(String),
}
