use thiserror::Error;

use crate::scalar::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index ({i}, {j}) outside 1..={n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("invalid parameters: {0} violated")]
    InvalidParams(String),

    #[error("unknown coefficient key `{0}`")]
    UnknownCoefficientKey(String),

    #[error("missing coefficient key `{0}`")]
    MissingCoefficientKey(String),

    #[error("generating system is empty and does not admit the empty word")]
    EmptySystem,

    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),

    #[error("chain stabilized at dimension {stabilized}, target has dimension {target}")]
    NotGenerating { stabilized: usize, target: usize },

    #[error("subspace is not closed under multiplication")]
    NotASubalgebra,

    #[error("subspace does not contain the identity matrix")]
    MissingIdentity,

    #[error("word enumeration needs {words} words, budget is {budget}")]
    BudgetExceeded { words: u128, budget: u64 },

    #[error("sampling exhausted after {0} rejections")]
    SamplingExhausted(usize),

    #[error("algebra is not of the form F*1 + J: {0}")]
    NotLocalForm(String),

    #[error("powers of the subspace stopped shrinking at dimension {0}")]
    NotNilpotent(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
