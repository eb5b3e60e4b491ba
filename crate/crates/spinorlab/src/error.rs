use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mode count {0} outside 1..=16")]
    ModeCount(usize),
    #[error("mode {mode} outside 1..={modes}")]
    ModeOutOfRange { mode: usize, modes: usize },
    #[error("gamma index {index} outside 1..={max}")]
    GammaOutOfRange { index: usize, max: usize },
    #[error("mode counts differ: {0} vs {1}")]
    ModeMismatch(usize, usize),
    #[error("matrix is {rows}x{cols}, expected {expected}x{expected}")]
    Dimension {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("{0} matrix is not antisymmetric")]
    NotAntisymmetric(&'static str),
    #[error("determinant must be exactly 1")]
    DeterminantNotOne,
    #[error("state is not homogeneous in particle number")]
    Inhomogeneous,
    #[error("state is not a Weyl spinor (mixed chirality)")]
    MixedChirality,
    #[error("zero state")]
    ZeroState,
    #[error("qubit count {0} outside 1..=4")]
    QubitCount(usize),
    #[error("expected {expected}, got {got}")]
    Shape { expected: String, got: String },
    #[error("state has support outside the pattern subspace: masks {0:?}")]
    Support(Vec<u32>),
    #[error("needs a mode count divisible by {required}, got {modes}")]
    Residue { modes: usize, required: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
