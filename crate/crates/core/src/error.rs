use thiserror::Error;

/// Errors raised by validation and by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} has a coordinate outside [-2^30, 2^30]")]
    CoordinateOutOfRange(usize),
    #[error("NotSimple({0},{1})")]
    NotSimple(usize, usize),
    #[error("DuplicateVertex({0},{1})")]
    DuplicateVertex(usize, usize),
    #[error("DegenerateSpike({0})")]
    DegenerateSpike(usize),
    #[error("CollinearVertex({0})")]
    CollinearVertex(usize),
    #[error("({0},{1}) is a polygon edge, not a diagonal candidate")]
    AdjacentPair(usize, usize),
    #[error("vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("({0},{1}) does not split the region")]
    NotASplitter(usize, usize),
    #[error("size mismatch: {0} vs {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("MissingBoundaryEdge({0})")]
    MissingBoundaryEdge(usize),
    #[error("block-update needs u < w < v, got u={u} w={w} v={v}")]
    InvalidTriple { u: usize, w: usize, v: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("single-interval visibility violated for vertex {vertex} on chord ({a},{b})")]
    SplitInterval { vertex: usize, a: usize, b: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
