use thiserror::Error;

use crate::tableau::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("invalid Grassmannian Gr({r},{n}): need 1 <= r < n")]
    InvalidContext { r: usize, n: usize },

    #[error("partition {partition} does not fit the {height}x{width} rectangle")]
    ShapeDoesNotFit {
        partition: Partition,
        height: usize,
        width: usize,
    },

    #[error("row lengths of a tableau must be weakly decreasing")]
    RaggedRows,

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("tableau is not standard")]
    NotStandard,

    #[error("expected {expected} descents, found {found}")]
    DescentCount { expected: usize, found: usize },

    #[error("tableau contains a 1-strip")]
    NotStripless,

    #[error("size mismatch: |nu| = {nu}, |lambda| + |mu| = {sum}")]
    SizeMismatch { nu: usize, sum: usize },

    #[error("classes live in different Grassmannians: Gr({0},{1}) vs Gr({2},{3})")]
    ContextMismatch(usize, usize, usize, usize),

    #[error("{what} = {value} is out of range (max {max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("invalid gap vector {0:?}: need 1 = a_0 < a_1 < ... < a_r = n")]
    InvalidGapVector(Vec<usize>),

    #[error("invalid split sequence {0:?} for r = {1}")]
    InvalidSplitSequence(Vec<usize>, usize),

    #[error("tableau type {found:?} does not match the required {expected:?}")]
    WrongType {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    #[error("column {column} of block {block} has {len} boxes, expected {tall} or {short}")]
    MissingStripStructure {
        block: usize,
        column: usize,
        len: usize,
        tall: usize,
        short: usize,
    },

    #[error("every entry 1..={0} must appear in the filling")]
    EmptyBlock(usize),
}
