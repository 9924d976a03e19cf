use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations contain a cycle through element {0}")]
    CycleDetected(usize),
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a lattice: elements {0} and {1} have no unique least upper bound or greatest lower bound")]
    NotALattice(usize, usize),
    #[error("elements {0} and {1} are not comparable as an interval")]
    NotComparable(usize, usize),
    #[error("size limit exceeded: {what} would exceed {limit}")]
    SizeLimitExceeded { what: String, limit: usize },
    #[error("element {0} is not join-irreducible")]
    NotJoinIrreducible(usize),
    #[error("element {0} is not meet-irreducible")]
    NotMeetIrreducible(usize),
    #[error("lattice has no pairing")]
    NotPaired,
    #[error("lattice has {0} pairings, not exactly one")]
    NotUniquelyPaired(usize),
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("cover {x} < {y} has {count} candidate labels")]
    NotOverlapping { x: usize, y: usize, count: usize },
    #[error("lattice is not semidistrim")]
    NotSemidistrim,
    #[error("lattice is not meet-semidistributive")]
    NotMeetSemidistributive,
    #[error("rowmotion at {x} has several maximal candidates {maxima:?}")]
    MultipleMaximal { x: usize, maxima: Vec<usize> },
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("subset is not down-closed")]
    NotADownSet,
    #[error("unknown figure id {0:?}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
