use crate::partition::{Cell, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell {cell} is not in the shape ({shape})")]
    CellOutOfShape { cell: Cell, shape: Partition },

    #[error("({inner}) is not contained in ({outer})")]
    NotContained { outer: Partition, inner: Partition },

    #[error("({shape}) is not a {}-core", k + 1)]
    NotACore { shape: Partition, k: usize },

    #[error("k must be at least 1")]
    ZeroK,

    #[error("partition ({partition}) is not {k}-bounded")]
    NotKBounded { partition: Partition, k: usize },

    #[error("sigma_{residue} has no addable or removable corner on ({shape})")]
    UndefinedAction { residue: usize, shape: Partition },

    #[error("residue {residue} out of range for k = {k}")]
    ResidueOutOfRange { residue: usize, k: usize },

    #[error("residue set of size {size} is not a proper subset of Z_{}", k + 1)]
    ImproperSubset { size: usize, k: usize },

    #[error("cores have different k ({0} vs {1})")]
    MismatchedK(usize, usize),

    #[error("({lower}) is not strongly covered by ({upper})")]
    NotACover { lower: Partition, upper: Partition },

    #[error("the empty core has no main subpartition")]
    EmptyCore,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("ell = {ell} is out of range 1..={k}")]
    EllOutOfRange { ell: usize, k: usize },

    #[error("first part of ({partition}) exceeds r = {r}")]
    FirstPartExceedsR { partition: Partition, r: usize },

    #[error("cannot combine {0} with {1}")]
    BasisMismatch(String, String),

    #[error("operation requires the {expected} basis, got {found}")]
    WrongBasis { expected: String, found: String },

    #[error("pair has no changeable cell")]
    NoChangeableCell,

    #[error("invariant violated: {0}")]
    Invariant(String),
}
