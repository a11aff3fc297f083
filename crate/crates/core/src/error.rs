use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6/sparse6 input: {0}")]
    MalformedGraph6(String),
    #[error("malformed cmg input: {0}")]
    MalformedCmg(String),
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("graph is not simple and cannot be written as graph6")]
    NotSimple,
    #[error("vertex {0} out of range")]
    InvalidVertex(Vertex),
    #[error("edge {0} out of range")]
    InvalidEdge(EdgeId),
    #[error("cut side must be a nonempty proper vertex subset")]
    EmptySide,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a bridge (edge {edge})")]
    HasBridge { edge: EdgeId },
    #[error("perfect matching enumeration exceeded cap {cap}")]
    CapExceeded { cap: usize },
    #[error("{what} exceeds the supported limit of {limit}")]
    TooLarge { what: &'static str, limit: usize },
    #[error("required edges do not form a matching")]
    RequiredNotMatching,
    #[error("expected a 6-edge-cut, found {size} edges")]
    NotSixCut { size: usize },
    #[error("colour constraints conflict at edge {edge}")]
    ConstraintConflict { edge: EdgeId },
    #[error("cut edge {edge} is uncoloured")]
    UncolouredEdgeInCut { edge: EdgeId },
    #[error("start edge colour is not one of the chain colours")]
    StartColourMismatch,
    #[error("Kempe chain is not consistent with the colouring")]
    StaleChain,
    #[error("colour vector violates the parity condition: {0}")]
    ParityViolation(String),
    #[error("core structure of a supposedly optimal array is violated: {0}")]
    NotOptimalEvidence(String),
    #[error("no perfect matching covers two uncovered core edges: {0}")]
    NoFourthMatching(String),
    #[error("defect is {found}, expected 3")]
    PreconditionDefectNot3 { found: usize },
    #[error("core path matching failed: {0}")]
    CorePathMatchingFailed(String),
    #[error("outer endpoints u2 and u5 coincide")]
    CoincidentEndpoints,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no perfect matching cover found: {0}")]
    NoCoverFound(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is too small")]
    TooSmall,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
