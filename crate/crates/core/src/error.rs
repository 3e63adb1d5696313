use thiserror::Error;

/// Errors raised by graph construction and the invariants computed on graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph of order {0} is too small for this operation")]
    TooSmall(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("order {order} exceeds the capacity {cap} of this operation")]
    TooLarge { order: usize, cap: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// Errors raised while reading graph6 / sparse6 records.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("record length does not match its size field (expected {expected} bytes, found {found})")]
    TruncatedRecord { expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("nonzero padding bits in the last body byte")]
    InvalidPadding,
    #[error("empty record")]
    Empty,
    #[error("unsupported record: {0}")]
    Unsupported(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<CodecError>,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl CodecError {
    pub(crate) fn at_line(self, line: usize) -> CodecError {
        CodecError::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// 1-based line number for errors raised while streaming.
    pub fn line(&self) -> Option<usize> {
        match self {
            CodecError::AtLine { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
