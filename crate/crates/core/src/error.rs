use thiserror::Error;

pub type Result<T> = std::result::Result<T, ArtinError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("invalid Artin type: {0}")]
    InvalidType(String),

    #[error("cannot parse token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("letter budget of {limit} exceeded")]
    BudgetExceeded { limit: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("group {0} has trivial centre")]
    TrivialCenter(String),

    #[error("image {index} has length {length}, not congruent to {target} mod {modulus}")]
    NotLiftable {
        index: usize,
        length: i64,
        target: i64,
        modulus: i64,
    },

    #[error("composition undefined: {0}")]
    UndefinedComposition(String),

    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

impl ArtinError {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        ArtinError::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, ArtinError::BudgetExceeded { .. })
    }

    /// Errors caused by malformed or inconsistent input rather than by the
    /// computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            ArtinError::InvalidType(_)
                | ArtinError::Parse { .. }
                | ArtinError::RankMismatch { .. }
                | ArtinError::TrivialCenter(_)
                | ArtinError::OutOfRange(_)
        )
    }
}
