use thiserror::Error;

/// Errors produced by graph construction, parsing, solving and the
/// theorem harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6Unsupported(usize),
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },
    #[error("invalid parameter for family {family}: {reason}")]
    InvalidFamily { family: &'static str, reason: String },
    #[error("a code must be non-empty")]
    EmptyCode,
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("order {n} exceeds the exactness cap {cap}: the search may visit about 2^{n} subsets; raise the cap to force the solve")]
    SearchTooLarge { n: usize, cap: usize },
    #[error("binomial C({n}, {k}) overflows 64 bits")]
    BinomialOverflow { n: u64, k: u64 },
    #[error("argument must be at least {min}, got {got}")]
    BelowMinimum { min: u64, got: u64 },
    #[error("no closed form available for {query}")]
    NoClosedForm { query: String },
    #[error("infeasible realization parameters: {0}")]
    Infeasible(String),
    #[error("report vector does not match the code: {0}")]
    ReportMismatch(String),
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
