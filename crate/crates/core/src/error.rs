use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("({0}, {1}) is already an edge")]
    AlreadyAnEdge(usize, usize),

    #[error("graph too large: n = {0} exceeds cap {1}")]
    TooLarge(usize, usize),

    #[error("color {0} out of range 1..={1}")]
    ColorOutOfRange(usize, usize),

    #[error("edge ({0}, {1}) is already colored")]
    AlreadyColored(usize, usize),

    #[error("edge ({0}, {1}) is not colored")]
    NotColored(usize, usize),

    #[error("coloring edge ({u}, {v}) with {color} blocked at vertex {blocking}")]
    PropernessViolation {
        u: usize,
        v: usize,
        color: usize,
        blocking: usize,
    },

    #[error("kempe swap requires two distinct colors, got {0} twice")]
    EqualKempeColors(usize),

    #[error("improper coloring: color {color} repeated at vertex {vertex}")]
    ImproperColoring { vertex: usize, color: usize },

    #[error("edge ({0}, {1}) must be uncolored for palette analysis")]
    EdgeStillColored(usize, usize),

    #[error("vertex {0} is not in N(x, B_phi)")]
    NotInNxB(usize),

    #[error("P_x and P_y are distinct (gamma, delta) chains: contradicts delta-criticality")]
    CriticalityViolation,

    #[error("no color missing at both {0} and {1}; recoloring step inapplicable")]
    NoCommonMissingColor(usize, usize),

    #[error("set is not independent: contains edge ({0}, {1})")]
    NotIndependent(usize, usize),

    #[error("unsupported parameter d = {0}: no omega value is defined for 5 <= d <= 18")]
    UnsupportedD(u32),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
