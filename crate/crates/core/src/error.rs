use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("capacity exceeded: {requested} items requested, cap is {cap}")]
    CapacityExceeded { requested: String, cap: u64 },

    #[error("unknown letter {letter:?} at position {position}")]
    UnknownLetter { letter: char, position: usize },

    #[error(transparent)]
    Table(#[from] TableError),
}

/// Where and why a translation table failed to parse. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct TableError {
    pub line: usize,
    pub column: usize,
    pub kind: TableErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableErrorKind {
    #[error("expected `key = value`")]
    MissingSeparator,
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("duplicate key `{0}`")]
    DuplicateKey(String),
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("`{field}` must be exactly 64 characters, found {found}")]
    WrongLength { field: &'static str, found: usize },
    #[error("unknown letter {letter:?} in `{field}`")]
    UnknownLetter { field: &'static str, letter: char },
    #[error("invalid id `{0}`")]
    InvalidId(String),
    #[error("base lines repeat codon {codon} (first seen at column {first})")]
    DuplicateCodon { codon: String, first: usize },
}

impl TableError {
    pub(crate) fn new(line: usize, column: usize, kind: TableErrorKind) -> Self {
        Self { line, column, kind }
    }
}
