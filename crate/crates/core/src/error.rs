use thiserror::Error;

/// Errors produced by the graph-energy library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid graph6 byte {byte} at position {position}")]
    InvalidChar { position: usize, byte: u8 },
    #[error("graph6 string has {found} adjacency bits, expected at least {expected}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("bad graph6 header: {0}")]
    BadHeader(String),
    #[error("graph with {n} vertices exceeds the supported limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("line {line}: vertex {index} out of range for n = {n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: self loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("exact arithmetic cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("polynomial fails majorization: gap {worst_gap:e} at x = {worst_x}")]
    MajorizationFailed { worst_gap: f64, worst_x: f64 },
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("cutting-plane loop did not converge after {rounds} rounds")]
    LpNoConvergence { rounds: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
