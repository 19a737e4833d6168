//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while reading or writing CoNLL-U text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConlluError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("invalid node id `{0}`")]
    BadNodeId(String),
    #[error("cannot serialize sentence: {0}")]
    InvalidSentence(String),
}

impl ConlluError {
    pub(crate) fn at(line: usize, reason: impl Into<String>) -> Self {
        ConlluError::Malformed {
            line,
            reason: reason.into(),
        }
    }
}

/// Errors raised while decoding a `label@...` metadata suffix.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtraError {
    #[error("unknown metadata key `{0}`")]
    UnknownKey(String),
    #[error("metadata key `{0}` out of order")]
    BadKeyOrder(String),
    #[error("bad value for metadata key `{0}`: `{1}`")]
    BadValue(String, String),
    #[error("metadata without a src key in `{0}`")]
    MissingSrc(String),
    #[error("empty label in `{0}`")]
    EmptyLabel(String),
}

/// Errors raised by graph construction and mutation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("basic annotation is not a tree: {0}")]
    NotATree(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("edge would form a self-loop at `{0}`")]
    SelfLoop(String),
    #[error("{0}")]
    BadDeps(String),
}

/// Errors raised by the relation-extraction harness.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelexError {
    #[error("instance metadata: {0}")]
    BadInstance(String),
    #[error("missing split `{0}` in the dataset")]
    MissingSplit(String),
    #[error("cannot parse pattern `{0}`: {1}")]
    BadPattern(String, String),
    #[error("cannot parse trigger lexicon line {0}: {1}")]
    BadTriggerLine(usize, String),
}
