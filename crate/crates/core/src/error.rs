use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },

    #[error("illegal defense move {from} -> {to}: {reason}")]
    IllegalMove {
        from: usize,
        to: usize,
        reason: MoveViolation,
    },

    #[error("instance has {size} elements, above the oracle cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("graph is not P4-sparse")]
    NotP4Sparse,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("generation failed: {0}")]
    Generation(String),
}

/// The precondition of a defense move that did not hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveViolation {
    SameVertex,
    OutOfRange,
    NotAdjacent,
    DefenderEmpty,
    TargetOccupied,
}

impl std::fmt::Display for MoveViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MoveViolation::SameVertex => "defender and target coincide",
            MoveViolation::OutOfRange => "vertex out of range",
            MoveViolation::NotAdjacent => "defender is not adjacent to target",
            MoveViolation::DefenderEmpty => "defender holds no legion",
            MoveViolation::TargetOccupied => "target already holds a legion",
        };
        f.write_str(s)
    }
}
