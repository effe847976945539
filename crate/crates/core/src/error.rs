use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Decoding failures for the graph6 format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed header: {0}")]
    MalformedHeader(&'static str),
    #[error("truncated bitstream: expected {expected} data bytes, found {found}")]
    TruncatedBitstream { expected: usize, found: usize },
    #[error("character out of range at byte {position}: 0x{byte:02x} (allowed 63..=126)")]
    CharOutOfRange { position: usize, byte: u8 },
    #[error("trailing data: {0} unexpected bytes after bitstream")]
    TrailingData(usize),
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("graph of order {0} is too large for graph6")]
    TooLarge(usize),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("empty graph")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}`: {constraint}")]
    FamilyDomain { family: String, constraint: String },
    #[error("exact limit exceeded: {what} is exact only for n <= {limit}, got n = {n}")]
    ExactLimitExceeded {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("colour cap exceeded: palette {k} is above the cap {cap}")]
    ColourCapExceeded { k: usize, cap: usize },
    #[error("colouring has {got} entries but the graph has {expected} edges")]
    SizeMismatch { expected: usize, got: usize },
    #[error("edge {edge} has colour {colour}, outside 1..={k}")]
    ColourOutOfRange { edge: usize, colour: u32, k: u32 },
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error("invalid construction input: {0}")]
    Construction(String),
    #[error("oracle cap exceeded: {k}^{m} colourings is above {cap}")]
    OracleCap { k: u32, m: usize, cap: u64 },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
