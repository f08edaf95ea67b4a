use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate actor label `{0}`")]
    DuplicateActor(String),
    #[error("unknown actor label `{0}`")]
    UnknownActor(String),
    #[error("duplicate relation name `{0}`")]
    DuplicateRelation(String),
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("network has no relations")]
    NoRelations,
    #[error("label `{0}` has no class in the clustering")]
    MissingClass(String),
    #[error("closure exceeded the cap of {cap} elements ({count} generated so far)")]
    ClosureTooLarge { cap: usize, count: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a partial order: {0}")]
    NotAPoset(String),
    #[error("partition is not compatible with the multiplication: {0}")]
    NotACongruence(String),
    #[error("undefined statistic: {0} is zero")]
    UndefinedStatistic(&'static str),
    #[error("valence `{0}` is outside the carrier of the {1} semiring")]
    ForeignValence(char, &'static str),
    #[error("closure did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("selector `{0}` matches no concept")]
    NoMatch(String),
    #[error("selector `{0}` matches several concepts: {1:?}")]
    AmbiguousMatch(String, Vec<usize>),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors caused by bad input as opposed to a failed computation.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::ClosureTooLarge { .. }
                | Error::NoConvergence(_)
                | Error::Internal(_)
                | Error::UndefinedStatistic(_)
                | Error::ForeignValence(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
