use thiserror::Error;

/// Crate-wide error type. Exact-search entry points never return wrong
/// answers: anything outside the configured budgets surfaces as `SizeLimit`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: graph has {n} vertices, exact search is limited to {limit}")]
    SizeLimit {
        op: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("contraction set must be nonempty and induce a connected subgraph")]
    BadContraction,

    #[error("graph6 parse error at byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },

    #[error("DIMACS parse error at line {line}: {msg}")]
    Dimacs { line: usize, msg: String },

    #[error("search budget must be positive")]
    ZeroBudget,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
