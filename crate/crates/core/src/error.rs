use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("root index out of range: ({i},{j}) for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is singular (lies on a wall); regular weights only")]
    SingularWeight(String),
    #[error("modulus c = {c} is smaller than the Coxeter number h = {n}")]
    ModulusTooSmall { c: i64, n: usize },
    #[error("weights {0} and {1} are not linked")]
    Unlinked(String, String),
    #[error("{0} is not below {1} in the up-order")]
    NotBelow(String, String),
    #[error("integer overflow")]
    Overflow,
    #[error("partition {0} has more than {1} parts")]
    TooManyParts(String, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Schur basis conversion left a non-zero remainder: {0}")]
    BasisConversion(String),
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    /// Inputs that are well formed but fall outside what the theorems cover.
    pub fn is_out_of_scope(&self) -> bool {
        matches!(
            self,
            Error::SingularWeight(_)
                | Error::ModulusTooSmall { .. }
                | Error::Unlinked(..)
                | Error::NotBelow(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
