use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed quaternion literal `{0}`")]
    Quaternion(String),
    #[error("malformed Q(√2) literal `{0}`")]
    R2(String),
    #[error("malformed lattice file: {0}")]
    Lattice(String),
    #[error("malformed vector line: {0}")]
    Vector(String),
    #[error("missing input `{0}`")]
    Missing(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("lattice mismatch")]
    LatticeMismatch,
    #[error("degenerate lattice")]
    DegenerateLattice,
    #[error("gram matrix is not Hermitian with Hurwitz entries")]
    BadGram,
    #[error("enumeration requires definite lattice")]
    IndefiniteEnumeration,
    #[error("not a root")]
    NotARoot,
    #[error("reflection needs a unit other than 1")]
    BadReflectionUnit,
    #[error("reflection not integral")]
    ReflectionNotIntegral,
    #[error("incidence mismatch: {0}")]
    IncidenceMismatch(String),
    #[error("lift failed")]
    LiftFailed,
    #[error("duality lift failed")]
    DualityLiftFailed,
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("not an isomorphism over the Hurwitz order")]
    NotHurwitzIsomorphism,
    #[error("not integral / not isometric")]
    Inadmissible,
    #[error("reduction failed: {0}")]
    ReductionFailed(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
