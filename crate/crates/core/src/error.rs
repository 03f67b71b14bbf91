use thiserror::Error;

use crate::set::ElementSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("ground set of size {0} exceeds the supported maximum")]
    TooManyElements(usize),

    #[error("element {element} out of range for a ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("bases have inconsistent sizes ({expected} vs {found})")]
    InconsistentBasisSize { expected: usize, found: usize },

    #[error("basis exchange fails for {b1} and {b2} at element {element}")]
    BasisExchangeViolation {
        b1: ElementSet,
        b2: ElementSet,
        element: usize,
    },

    #[error("element {0} is a loop")]
    LoopDetected(usize),

    #[error("rank {rank} out of range for a ground set of size {size}")]
    RankOutOfRange { rank: usize, size: usize },

    #[error("q = {0} is not prime")]
    NonPrimeQ(u64),

    #[error("circuit-hyperplanes {0} and {1} overlap in too many elements")]
    OverlapViolation(ElementSet, ElementSet),

    #[error("circuit-hyperplane {set} has size {found}, expected {expected}")]
    SizeViolation {
        set: ElementSet,
        expected: usize,
        found: usize,
    },

    #[error("{0} is not a flat")]
    NotAFlat(ElementSet),

    #[error("truncation would collapse the matroid to rank 0")]
    RankCollapse,

    #[error("invalid lattice of flats: {0}")]
    InvalidFlats(String),

    #[error("class index vector {0:?} out of range")]
    VOutOfRange(Vec<i64>),

    #[error("composition sums to {found}, expected {expected}")]
    CompositionMismatch { expected: usize, found: usize },

    #[error("composition has {found} entries, expected {expected}")]
    CompositionLength { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("matroid rank {0} is too small for this relation")]
    RankTooSmall(usize),

    #[error("not a perfect matroid design: rank-{rank} flats {a} and {b} differ in size")]
    NotPmd {
        rank: usize,
        a: ElementSet,
        b: ElementSet,
    },

    #[error("perfect matroid design is not simple")]
    NotSimple,

    #[error("composition {0:?} is not lopsided")]
    NotLopsided(Vec<usize>),

    #[error("linear system is singular")]
    SingularSystem,

    #[error("linear system is inconsistent")]
    InconsistentSystem,

    #[error("polynomial division is not exact")]
    DivisionNotExact,

    #[error("lambda exponents sum to {found}, expected {expected}")]
    ExponentMismatch { expected: usize, found: usize },

    #[error("{pointer}: {message}")]
    Json { pointer: String, message: String },
}
