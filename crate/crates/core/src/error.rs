use thiserror::Error;

/// Errors raised by group construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("operands belong to different groups ({left} and {right})")]
    MixedGroups { left: String, right: String },
    #[error("element {element} does not belong to {group}")]
    ForeignElement { element: String, group: String },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("group of order {order} exceeds the supported maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("cannot parse group element {text:?}: {reason}")]
    BadElement { text: String, reason: String },
    #[error("unknown group descriptor {0:?}")]
    BadDescriptor(String),
    #[error("dihedral parameter k must be positive")]
    ZeroRotationParameter,
}

/// Errors raised while building presentations or reading knot files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("invalid parameters m = {m}, n = {n}: {reason}")]
    InvalidParameters { m: i64, n: i64, reason: String },
    #[error("m = {m} is outside the domain of this operation (|m| must be at least 2)")]
    OutOfDomain { m: i64 },
    #[error("generator index {index} out of range 1..={generators}")]
    IndexOutOfRange { index: usize, generators: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
}

/// Errors raised by the representation search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error(
        "exhaustive search over {group_order}^{generators} assignments exceeds the oracle bound of {bound}"
    )]
    OracleGuard {
        group_order: usize,
        generators: usize,
        bound: u64,
    },
    #[error("generator x{0} has no image in the assignment")]
    Unassigned(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}
