use thiserror::Error;

/// Errors reported by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge #{index} {edge:?} has fewer than 2 distinct vertices")]
    EdgeTooSmall { index: usize, edge: Vec<u32> },

    #[error("edge #{index} {edge:?} uses vertex {vertex}, outside 1..={n}")]
    VertexOutOfRange {
        index: usize,
        edge: Vec<u32>,
        vertex: u32,
        n: usize,
    },

    #[error("{n} vertices exceed the representable maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("enumeration over {n} vertices exceeds the configured bound max_n = {max_n}")]
    BoundExceeded { n: usize, max_n: usize },

    #[error("{what}: {count} candidates exceed the cap of {cap}")]
    TooManyCandidates {
        what: &'static str,
        count: u128,
        cap: u64,
    },

    #[error("not a flat: edge #{edge} lies inside one component but is not selected")]
    NotAFlat { edge: usize },

    #[error("invalid set composition: {0}")]
    InvalidComposition(String),

    #[error("invalid face key: {0}")]
    InvalidFace(String),

    #[error("face key does not belong to this hypergraph: {0}")]
    ForeignKey(String),

    #[error("invalid cone family: {0}")]
    InvalidFamily(String),

    #[error("digraph has a directed cycle")]
    Cyclic,

    #[error("hypergraph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("hypergraph is not a hyperforest")]
    NotHyperforest,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {detail}")]
    Invariant { detail: String, face: Option<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
