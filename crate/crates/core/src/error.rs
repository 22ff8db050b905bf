use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} outside ground set 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("ground set mismatch: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={n}: {reason}")]
    NotPermutation { n: usize, reason: String },

    #[error("not a perfect matching on 1..={n}: {reason}")]
    NotPerfectMatching { n: usize, reason: String },

    #[error("cycle length must be at least 3, got {0}")]
    CycleLengthTooSmall(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("n = {n} must satisfy n = 1 (mod {k})")]
    Congruence { n: usize, k: usize },

    #[error("n = {n} must be even and divisible by 3k = {}", 3 * k)]
    TripleDivisibility { n: usize, k: usize },

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("bipartition classes have sizes {0} and {1}")]
    UnbalancedBipartition(usize, usize),

    #[error("graph is not regular")]
    NotRegular,

    #[error("family is empty")]
    EmptyFamily,

    #[error("associated triples differ")]
    TripleMismatch,

    #[error("path does not contain the shared fixed graph")]
    MissingFixedEdges,

    #[error("paths drop different endpoint pairs ({0:?} vs {1:?})")]
    EndpointMismatch((usize, usize), (usize, usize)),

    #[error("relation {0} is not defined for this object kind")]
    UnsupportedRelation(String),

    #[error("graph fails C{}-free bipartite regular validation", 2 * .0)]
    ValidationFailed(usize),

    #[error("solver witness failed re-verification against the relation")]
    WitnessRejected,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
