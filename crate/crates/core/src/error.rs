use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system has more than one solution")]
    NotUnique,
    #[error("antipode S_{0} is not invertible")]
    AntipodeNotInvertible(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("image leaves the expected codomain: {0}")]
    CodomainViolation(String),
    #[error("not contained in the kernel of the counit: {0}")]
    NotInKernelOfCounit(String),
    #[error("not a right ideal: {0}")]
    NotARightIdeal(String),
    #[error("not a sub-bimodule: {0}")]
    NotASubBimodule(String),
    #[error("not covariant: {0}")]
    NotCovariant(String),
    #[error("not bicovariant: {0}")]
    NotBicovariant(String),
    #[error("two computations of the same map disagree: {0}")]
    InternalMismatch(String),
    #[error("missing coaction: {0}")]
    MissingCoaction(String),
    #[error("no algebra maps psi_alpha were supplied")]
    MissingPsi,
    #[error("structure identity fails: {0}")]
    StructureInconsistent(String),
    #[error("incompatible reconstruction data: {0}")]
    IncompatibleData(String),
    #[error("dimension of the invariant subspace varies across the grading: {0}")]
    DimensionVariesAcrossGrading(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown ideal {0:?}")]
    UnknownIdeal(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
