use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} outside 1..={max}")]
    VertexCount { n: usize, max: usize },
    #[error("self-loop ({0},{0})")]
    SelfLoop(usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("arc ({u},{v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} outside 0..{n}")]
    NoSuchVertex { v: usize, n: usize },
    #[error("({0},{1}) is not an arc of the digraph")]
    NotAnArc(usize, usize),
    #[error("ordering is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("{what} supports at most {cap} vertices, got {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("digraph is not an oriented graph (it has a 2-cycle)")]
    NotOriented,
    #[error("digraph is not a tournament")]
    NotTournament,
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
