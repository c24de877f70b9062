use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("invalid edge {0:?}")]
    InvalidEdge((usize, usize)),
    #[error("empty graph")]
    EmptyGraph,
    #[error("vertices {0} and {1} lie in different components")]
    DisconnectedPair(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is not a Peano partial cube")]
    NotPeano,
    #[error("U({0},{1}) is not strongly ph-stable")]
    NotStronglyPhStable(usize, usize),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("graph is not a hyper-median partial cube")]
    NotHyperMedian,
    #[error("graph has {0} vertices, above the limit {1}")]
    TooLarge(usize, usize),
    #[error("graph has {0} vertices, above the oracle limit {1}")]
    TooLargeForOracle(usize, usize),
    #[error("depth {0} is below 2")]
    DepthTooSmall(usize),
    #[error("empty factor")]
    EmptyFactor,
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("shared part is not gated in factor {0}")]
    NotGatedInFactor(usize),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("vertex {0} is not a neighbor of the set")]
    NotNeighbor(usize),
    #[error("target set is not cycle-representative")]
    NotCycleRepresentative,
    #[error("empty target set")]
    EmptyTarget,
    #[error("map is not a contraction")]
    NotContraction,
    #[error("set is not convex")]
    NotConvex,
}

impl Error {
    /// Stable identifier used in JSON output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidEdge(_) => "InvalidEdge",
            Error::EmptyGraph => "EmptyGraph",
            Error::DisconnectedPair(..) => "DisconnectedPair",
            Error::Disconnected => "Disconnected",
            Error::NotBipartite => "NotBipartite",
            Error::NotPartialCube => "NotPartialCube",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::NotPeano => "NotPeano",
            Error::NotStronglyPhStable(..) => "NotStronglyPhStable",
            Error::StructureViolation(_) => "StructureViolation",
            Error::NotHyperMedian => "NotHyperMedian",
            Error::TooLarge(..) => "TooLarge",
            Error::TooLargeForOracle(..) => "TooLargeForOracle",
            Error::DepthTooSmall(_) => "DepthTooSmall",
            Error::EmptyFactor => "EmptyFactor",
            Error::InvalidCover(_) => "InvalidCover",
            Error::NotGatedInFactor(_) => "NotGatedInFactor",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::BadParams(_) => "BadParams",
            Error::CertificationFailed(_) => "CertificationFailed",
            Error::NotNeighbor(_) => "NotNeighbor",
            Error::NotCycleRepresentative => "NotCycleRepresentative",
            Error::EmptyTarget => "EmptyTarget",
            Error::NotContraction => "NotContraction",
            Error::NotConvex => "NotConvex",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
