use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid tower generator y_{0}: index must be at least 1")]
    InvalidGenerator(i64),
    #[error("tower generator y_{0} exceeds the supported maximum of 31")]
    GeneratorTooLarge(u32),
    #[error("alpha coefficient is undefined for axial distance 0")]
    UndefinedAxialDistance,
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization at q = {0} hits a pole (non-semisimple)")]
    NonSemisimple(String),
    #[error("malformed word: generator {index} is out of range for S_{n}")]
    MalformedWord { index: usize, n: usize },
    #[error("malformed composition: {0}")]
    MalformedComposition(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("class of cycle type {0} does not lie in the alternating group")]
    OddPermutationClass(String),
    #[error("index {index} out of range for a tableau with {n} entries")]
    BadIndex { index: usize, n: usize },
    #[error("partition {0} is not self-conjugate")]
    NotSymmetric(String),
    #[error("element is not fixed by the # involution")]
    NotAlternating,
    #[error("permutation is odd")]
    OddPermutation,
    #[error("contents {0} and {1} coincide, so a q-bracket vanishes")]
    DegenerateContents(i64, i64),
    #[error("labelling is not semilinear: {0}")]
    NotSemilinear(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("n = {n} exceeds the resource guard of {max}; pass --force to override")]
    ResourceGuard { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
