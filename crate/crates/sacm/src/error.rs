//! Library error type.

use thiserror::Error;

use crate::gid::Gid;
use crate::validate::Diagnostic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no element with gid '{0}'")]
    MissingElement(Gid),

    #[error("duplicate gid '{0}'")]
    DuplicateGid(Gid),

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("citation cycle through {}", join_gids(.0))]
    CitationCycle(Vec<Gid>),

    #[error("empty multi-language string")]
    EmptyString,

    #[error("element '{0}' may not reference itself")]
    SelfReference(Gid),

    #[error("asset '{0}' has no URI property")]
    NoUriProperty(Gid),

    #[error("unbalanced braces in text of element '{0}'")]
    UnbalancedBraces(Gid),

    #[error("placeholder '{{{label}}}' in expression '{expression}' has no matching element reference")]
    UnboundPlaceholder { expression: Gid, label: String },

    #[error("expression nesting exceeds depth limit {limit} at element '{element}'")]
    DepthExceeded { element: Gid, limit: usize },

    #[error("validation reported {} error(s); first: {}", .0.len(), first_line(.0))]
    PreconditionFailed(Vec<Diagnostic>),

    #[error("strategy '{0}' has no incoming supporting connector")]
    StrategyDangling(Gid),

    #[error("argument '{0}' has no supports connector")]
    ArgumentDangling(Gid),

    #[error("no binding for role '{0}'")]
    MissingBinding(String),

    #[error("decorated connector '{0}' has no entry in the binding table")]
    MissingConnectorDecision(Gid),

    #[error("count mismatch at '{connector}': expected {expected} value(s), got {got}")]
    CountMismatch {
        connector: Gid,
        expected: usize,
        got: usize,
    },

    #[error("choice at '{connector}' selects {got} alternative(s), allowed range is {min}..={max}")]
    ChoiceOutOfRange {
        connector: Gid,
        min: usize,
        max: usize,
        got: usize,
    },

    #[error("JSON parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error at {path}: {message}")]
    SchemaError { path: String, message: String },

    #[error("dangling reference(s): {}", join_gids(.0))]
    DanglingReference(Vec<Gid>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_gids(gids: &[Gid]) -> String {
    gids.iter()
        .map(Gid::as_str)
        .collect::<Vec<_>>()
        .join(", ")
}

fn first_line(diags: &[Diagnostic]) -> String {
    diags
        .first()
        .map(|d| d.to_line())
        .unwrap_or_else(|| "-".to_string())
}
