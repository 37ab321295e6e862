use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("relations are not admissible: paths of length {cap} survive")]
    NotAdmissible { cap: usize },
    #[error("generator {generator} is not central")]
    NotCentral { generator: String },
    #[error("generator {generator} does not lie in the radical")]
    NotInRadical { generator: String },
    #[error("complex is not minimal: a differential entry is a unit")]
    NotMinimal,
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("validation failed: {0}")]
    ValidationFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
