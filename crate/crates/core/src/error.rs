use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("not a graph automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphism is not admissible: edges {0:?} join vertices of one orbit")]
    NonAdmissible(Vec<(String, String)>),
    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("vector is not invariant under the automorphism: {0}")]
    NotInvariant(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("Cartan datum is not of finite type")]
    NotFiniteType,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("expected a unique highest element, found {0}")]
    HighestNotUnique(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag used in CLI error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidQuiver(_) => "invalid_quiver",
            Error::NotAutomorphism(_) => "not_automorphism",
            Error::NonAdmissible(_) => "non_admissible",
            Error::InvalidCartan(_) => "invalid_cartan",
            Error::Shape(_) => "shape_mismatch",
            Error::NotInvariant(_) => "not_invariant",
            Error::NotDominant(_) => "not_dominant",
            Error::NotFiniteType => "not_finite_type",
            Error::Invariant(_) => "invariant_violation",
            Error::HighestNotUnique(_) => "highest_not_unique",
            Error::Parse(_) => "parse",
            Error::Unsupported(_) => "unsupported",
            Error::Overflow => "overflow",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
