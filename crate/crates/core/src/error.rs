use thiserror::Error;

use crate::identity::IdentityReport;
use crate::magma::ElementId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("magma order must be at least 1")]
    EmptyMagma,

    #[error("expected {expected} table entries, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("entry ({row}, {col}) = {value} is outside [0, {order})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("element {index} is not valid in a magma of order {order}")]
    InvalidElement { index: usize, order: usize },

    #[error("{what} = {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("subset is not closed: {a}·{b} leaves it")]
    NotClosed { a: ElementId, b: ElementId },

    #[error("empty subset")]
    EmptySubset,

    #[error("partition does not cover the magma: {0}")]
    MalformedPartition(String),

    #[error("sigma is not transitive: {a} σ {b} and {b} σ {c} but not {a} σ {c}")]
    NotAnEquivalence {
        a: ElementId,
        b: ElementId,
        c: ElementId,
    },

    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(ElementId),

    #[error("{0}·{1} differs from {1}·{0}")]
    NotCommutative(ElementId, ElementId),

    #[error("natural order axiom fails: {0}")]
    OrderAxiomFailure(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(IdentityReport),

    #[error("characteristic {0} is not an odd prime")]
    InvalidCharacteristic(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element {0} has zero weight")]
    ZeroWeight(ElementId),

    #[error("empty constraint set")]
    NoConstraints,
}
