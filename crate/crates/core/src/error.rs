use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// More vertices than fit in a 64-bit adjacency row.
    TooManyVertices(usize),
    /// An edge endpoint outside `0..vertex_count`.
    VertexOutOfRange {
        vertex: usize,
        vertex_count: usize,
    },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    /// The instance exceeds a search guard.
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    /// An argument outside the domain of the operation.
    Domain(&'static str),
    NotConnected,
    NotACycle,
    /// A profile or subset that does not belong to the graph it was used with.
    Stale(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyVertices(n) => write!(f, "graph has {n} vertices, at most 64 supported"),
            Error::VertexOutOfRange {
                vertex,
                vertex_count,
            } => {
                write!(
                    f,
                    "vertex {vertex} out of range for a graph on {vertex_count} vertices"
                )
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Error::InstanceTooLarge { what, size, limit } => {
                write!(f, "instance too large: {what} is {size}, limit {limit}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NotConnected => f.write_str("graph is not connected"),
            Error::NotACycle => f.write_str("graph is not a cycle"),
            Error::Stale(msg) => write!(f, "stale input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
