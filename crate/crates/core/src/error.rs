use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("sign undecided at the {bits}-bit precision cap")]
    PrecisionLimit { bits: u32 },
    #[error("value {value} coincides exactly with anchor {anchor}")]
    Coincidence { anchor: String, value: String },
    #[error("no (anchor, value) pairs to measure a gap over")]
    EmptyGapSet,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("spec parse error at byte {pos}: {msg}")]
    SpecParse { pos: usize, msg: String },
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("representation has {ranks} ranks but the graph has {vertices} vertices")]
    SizeMismatch { ranks: usize, vertices: usize },
    #[error("thresholds are not strictly increasing at position {0}")]
    ThresholdsNotIncreasing(usize),
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("edge {0:?} has a rank sum in an even region")]
    EvenRegionEdge((usize, usize)),
    #[error("representation fails verification ({0} violating pairs)")]
    VerificationFailed(usize),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("no closed form covers {0}")]
    UncoveredFamily(String),
    #[error("malformed linear system: {0}")]
    MalformedSystem(String),
    #[error("solver witness failed substitution check at constraint {0}")]
    WitnessRejected(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
