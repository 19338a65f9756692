use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptyPointSet,

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("points {0} and {1} span a line at 0, 60 or 120 degrees")]
    NotGeneralPosition(usize, usize),

    #[error("point {other} does not lie in the requested cone of point {apex}")]
    ConeMismatch { apex: usize, other: usize },

    #[error("graphs are defined on different point sets")]
    MismatchedPointSets,

    #[error("graph is not connected")]
    Disconnected,

    #[error("edges {0:?} and {1:?} cross")]
    EdgesCross((usize, usize), (usize, usize)),

    #[error("no path from {0} to {1} inside their smallest down-triangle")]
    NoPathInTriangle(usize, usize),

    #[error("hexagon growth selected pair ({0}, {1}) which is not an edge of both graphs")]
    HexagonEdgeMissing(usize, usize),

    #[error("{0} degree-one vertices found; at most 3 are possible")]
    TooManyLeaves(usize),

    #[error("augmentation needs a connected graph with at least 3 vertices")]
    AugmentationPrecondition,

    #[error("brute-force matching refuses graphs with {0} > {1} vertices")]
    TooLargeForBruteForce(usize, usize),

    #[error("could not place {requested} points in general position on a {resolution}x{resolution} grid")]
    SamplingBudgetExhausted { requested: usize, resolution: u64 },

    #[error("invalid generator argument: {0}")]
    InvalidArgument(String),

    #[error("family self-check failed: {0}")]
    FamilySelfCheck(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
