use thiserror::Error;

/// Errors raised by parsing, automata operations and the decision procedures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),
    #[error("complement requires a deterministic automaton")]
    NotDeterministic,
    #[error("counter overflow")]
    CounterOverflow,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}
