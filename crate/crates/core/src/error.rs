use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge on line {line}: {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set over {set} vertices used with a graph on {graph} vertices")]
    UniverseMismatch { set: usize, graph: usize },

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("cannot parse integer set {input:?}: {reason}")]
    IntSetParse { input: String, reason: String },

    #[error("neutral vertex {0} is also in the candidate set")]
    NeutralsOverlapSet(usize),
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
    #[error("sigma/rho member {member} exceeds the regular degree {degree}")]
    SigmaRhoOutOfRange { member: u32, degree: u32 },

    #[error("value 0 at vertex {0} is only allowed for minus domination")]
    ZeroValueOutsideMinusMode(usize),
    #[error("function has {values} values but the graph has {n} vertices")]
    FunctionLength { values: usize, n: usize },
    #[error("cannot parse signed function: {0}")]
    SignedFunctionParse(String),
    #[error("bad threshold: {0}")]
    BadThreshold(String),

    #[error("graph on {n} vertices exceeds the exhaustive search cap of {cap}")]
    GraphTooLargeForExhaustive { n: usize, cap: usize },
    #[error("branch and bound requires a global alliance spec")]
    NonGlobalSpecUnsupported,

    #[error("unknown proposition {0:?}")]
    UnknownProposition(String),
    #[error("n_max = {n_max} exceeds the limit of {limit} for this family")]
    FamilyTooLarge { n_max: usize, limit: usize },
}
