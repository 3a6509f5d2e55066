use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("multigraph is not 4-regular; offending vertices (vertex, degree): {offending:?}")]
    NotFourRegular { offending: Vec<(usize, usize)> },

    #[error("multigraph is disconnected; no Eulerian tour exists")]
    Disconnected,

    #[error("isotropic system construction failed: {0}")]
    Construction(String),

    #[error("resource cap exceeded: {what} (cap {cap})")]
    CapExceeded { what: &'static str, cap: u64 },
}

impl Error {
    /// True for errors caused by malformed or invalid input (as opposed to resource caps).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::CapExceeded { .. })
    }
}
