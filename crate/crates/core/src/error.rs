use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range ({len} vertices)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vertex {vertex} has {got} coordinates, expected {expected}")]
    DimensionMismatch { vertex: usize, expected: usize, got: usize },

    #[error("vertex {0} has a non-finite coordinate")]
    NonFiniteCoordinate(usize),

    #[error("simplex {0:?} has more than three vertices")]
    SimplexTooLarge(Vec<usize>),

    #[error("empty simplex")]
    EmptySimplex,

    #[error("degenerate simplex {0:?}")]
    DegenerateSimplex(Vec<usize>),

    #[error("face {face:?} of simplex {of:?} is missing")]
    DanglingFace { face: Vec<usize>, of: Vec<usize> },

    #[error("simplex {0:?} listed more than once")]
    DuplicateSimplex(Vec<usize>),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),

    #[error("no simplex {0:?}")]
    NoSuchSimplex(Vec<usize>),

    #[error("vertex {vertex} is not a vertex of {simplex:?}")]
    NotIncident { vertex: usize, simplex: Vec<usize> },

    #[error("complex is not a simplicial surface")]
    NotASurface,

    #[error("every vertex of the surface is flat")]
    AllVerticesFlat,

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("infeasible angle list: {0}")]
    InfeasibleAngles(String),

    #[error("polygon closure failed: {0}")]
    ClosureFailure(String),

    #[error("apex lies in the base plane")]
    ApexInPlane,

    #[error("apices lie on the same side of the base plane")]
    ApicesSameSide,

    #[error("flap angle {angle} at vertex {vertex} is not below 1/4")]
    AngleTooLarge { vertex: usize, angle: f64 },

    #[error("target apex angle sum {target} unreachable (max {max}); increase turns")]
    TargetUnreachable { target: f64, max: f64 },

    #[error("spiral ribbon overlaps itself: {0}")]
    RibbonSelfOverlap(String),

    #[error("point is not in the relative interior of {0:?}")]
    PointNotInRelativeInterior(Vec<usize>),

    #[error("isometry search exceeded {0} nodes")]
    SearchBudgetExceeded(u64),

    #[error("link of vertex {0} is not a polygonal arc")]
    UnsupportedLinkShape(usize),

    #[error("stars are not simplicially isometric: {0}")]
    NotIsometric(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("face at line {line} has {sides} sides; only triangles are accepted")]
    NonTriangularFace { line: usize, sides: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors raised while validating a complex (as opposed to
    /// reading it, or running an operation on a valid one).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::IndexOutOfRange { .. }
                | Error::DimensionMismatch { .. }
                | Error::NonFiniteCoordinate(_)
                | Error::SimplexTooLarge(_)
                | Error::EmptySimplex
                | Error::DegenerateSimplex(_)
                | Error::DanglingFace { .. }
                | Error::DuplicateSimplex(_)
        )
    }
}
