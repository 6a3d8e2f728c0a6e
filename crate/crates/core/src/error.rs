use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot combine affine and non-affine words")]
    AffineMismatch,
    #[error("generator index {index} is invalid on {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("affine generator x1 used in a non-affine word")]
    AffineLetter,
    #[error("word contains a turn-back generator e{0}, which has no inverse or permutation image")]
    NonInvertible(usize),
    #[error("letter position {pos} out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("letter at position {0} is not a crossing")]
    NotACrossing(usize),
    #[error("plat closure needs an even strand count, got {0}")]
    OddStrandCount(usize),
    #[error("closures are not defined for affine words")]
    AffineClosure,
    #[error("{strands} strands exceeds the diagram-algebra limit of {limit}")]
    TooManyStrands { strands: usize, limit: usize },
    #[error("{crossings} crossings exceeds the state-sum limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("summand {index} is the infinity tangle; its sum has no numerator closure")]
    InfinitySummand { index: usize },
    #[error("invalid twist vector: {0}")]
    InvalidTangle(String),
    #[error("invalid affine window: {0}")]
    InvalidWindow(String),
    #[error("invalid genome: {0}")]
    InvalidGenome(String),
    #[error("genomes do not share a region set")]
    RegionMismatch,
    #[error("{regions} regions exceeds the search limit of {limit}")]
    GenomeTooLarge { regions: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("knot table key collision between {0} and {1}")]
    TableCollision(String, String),
    #[error("knot table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;
