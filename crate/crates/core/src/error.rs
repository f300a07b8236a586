use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by graph operations and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph contains a directed cycle through `{0}`")]
    Cyclic(String),
    #[error("graph is not X-loop-free: {0}")]
    NotXLoopFree(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Position of a token in diagram source text. Both fields are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    SelfLoop(String),
    Cyclic(String),
    ConflictingRoles {
        vertex: String,
        first: String,
        second: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{span}: {}", describe(.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: Span,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, span: Span) -> Self {
        ParseError { kind, span }
    }

    /// True for errors caused by role attributes rather than graph structure.
    pub fn is_role_violation(&self) -> bool {
        matches!(self.kind, ParseErrorKind::ConflictingRoles { .. })
    }
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Syntax(msg) => format!("syntax error: {msg}"),
        ParseErrorKind::SelfLoop(v) => format!("self-loop on `{v}`"),
        ParseErrorKind::Cyclic(v) => format!("directed cycle through `{v}`"),
        ParseErrorKind::ConflictingRoles { vertex, first, second } => {
            format!("conflicting roles for `{vertex}`: {first} and {second}")
        }
    }
}
