use thiserror::Error;

use crate::hypergraph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex labels must be positive integers, got {0}")]
    InvalidLabel(u32),
    #[error("vertex {0} is listed more than once")]
    DuplicateVertexLabel(VertexId),
    #[error("edge {edge:?} contains vertex {vertex} which is not in the vertex set")]
    EdgeOutsideVertexSet {
        edge: Vec<VertexId>,
        vertex: VertexId,
    },
    #[error("edge {0:?} has fewer than two vertices")]
    EdgeTooSmall(Vec<VertexId>),
    #[error("hypergraphs are defined on different vertex sets")]
    VertexSetMismatch,
    #[error("vertex {0} is not a vertex of this structure")]
    UnknownVertex(VertexId),
    #[error("hypergraph is not 2-uniform, so it is not a graph")]
    NotAGraph,

    #[error("arc ({0}, {1}) is a loop")]
    SelfArc(VertexId, VertexId),
    #[error("arc ({0}, {1}) has an endpoint outside the vertex set")]
    ArcOutsideVertexSet(VertexId, VertexId),

    #[error("hypergraph is not linear")]
    NotLinear,
    #[error("the full vertex set is already an edge")]
    FullVertexSetAlreadyEdge,
    #[error("at least two vertices are required")]
    TooFewVertices,

    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("catalog id T{0} does not name a tree with a determined edge set")]
    UnknownCatalogId(u32),
    #[error("no realization is catalogued for {0}")]
    NotInCatalog(String),
    #[error("tree T{catalog_id} ({name}) is not the EI hypergraph of any 3-uniform hypergraph")]
    KnownUnrealizable { catalog_id: u32, name: String },

    #[error("parameters outside the range covered by the closed form: {0}")]
    OutOfTheoremRange(String),

    #[error("subfamily enumeration limited to {limit} edges, got {edges}")]
    TooManyEdges { edges: usize, limit: usize },

    #[error("graph is not a tree")]
    NotATree,
    #[error("path is not a leg of this tree")]
    NotALegOfThisTree,
    #[error("internal verification failed: {0}")]
    InternalVerificationFailure(String),

    #[error("graph has {vertices} vertices, search is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("search node budget of {budget} exhausted after {explored} nodes")]
    BudgetExhausted { budget: u64, explored: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
