use thiserror::Error;

/// Errors raised by the algebraic operations.
///
/// Contract violations (calling an operation outside its precondition) are
/// reported as ordinary errors; `Internal` marks a failed post-check and
/// always indicates a defect.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket of basis element {0} with itself must be zero")]
    DiagonalBracket(usize),
    #[error("bracket for basis pair ({0}, {1}) given twice")]
    DuplicateBracket(usize, usize),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("Lie algebra fails the Jacobi identity on {0} basis triple(s)")]
    InvalidAlgebra(usize),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subalgebra is not solvable")]
    NotSolvable,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("matrix is not a derivation")]
    NotDerivation,
    #[error("eigenvalue must be nonzero")]
    ZeroEigenvalue,
    #[error("element is outside the root subspace for eigenvalue {0}")]
    OutsideRootSpace(String),
    #[error("matrix is not a surjective homomorphism between the given algebras")]
    NotHomomorphism,
    #[error("representations are over different algebras")]
    AlgebraMismatch,
    #[error("functional does not vanish on the derived algebra")]
    FunctionalNotVanishing,
    #[error("representation violates the homomorphism law on {0} basis pair(s)")]
    InvalidRepresentation(usize),
    #[error("element acts nilpotently in every representation; no witness exists")]
    NoWitness,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogName(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
