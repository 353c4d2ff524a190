use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}: invalid JSON group file: {source}")]
    Json {
        origin: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("{origin}:{line}: {msg}")]
    Parse { origin: String, line: usize, msg: String },
    #[error("{origin}:{line}: duplicate entry ({degree}, {index}), first seen on line {first}")]
    Duplicate { origin: String, line: usize, degree: usize, index: usize, first: usize },
    #[error("{origin}:{line}: entry ({degree}, {index}) is not transitive")]
    Intransitive { origin: String, line: usize, degree: usize, index: usize },
    #[error("{origin}:{line}: entry ({degree}, {index}) has order {found}, annotated {expected}")]
    OrderMismatch { origin: String, line: usize, degree: usize, index: usize, found: u128, expected: u128 },
    #[error("database has no groups of degree {0}")]
    MissingDegree(usize),
    #[error("expectation failed for {name}: {msg}")]
    Expectation { name: String, msg: String },
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("cannot parse group expression {expr:?}: {msg}")]
    Expression { expr: String, msg: String },
    #[error(transparent)]
    Core(#[from] permstar_core::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
