//! Labeled simple hypergraphs on `{1..n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Merger, SetPartition};
use crate::vset::VertexSet;

/// A hypergraph on the vertex set `{1..n}`.
///
/// Edges have at least two vertices, are deduplicated, and are kept sorted in
/// lexicographic order of their vertex lists. Edge indices elsewhere in the
/// crate refer to this order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

/// The JSON shape `{"n": <int>, "edges": [[v, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphSpec {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    /// Validates and canonicalizes raw vertex lists.
    pub fn new<E: AsRef<[u32]>>(n: usize, raw_edges: &[E]) -> Result<Self> {
        if n > VertexSet::MAX_ELEMENT {
            return Err(Error::TooManyVertices {
                n,
                max: VertexSet::MAX_ELEMENT,
            });
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (index, raw) in raw_edges.iter().enumerate() {
            let raw = raw.as_ref();
            if let Some(&vertex) = raw.iter().find(|&&v| v == 0 || v as usize > n) {
                return Err(Error::VertexOutOfRange {
                    index,
                    edge: raw.to_vec(),
                    vertex,
                    n,
                });
            }
            let set: VertexSet = raw.iter().collect();
            if set.len() < 2 {
                return Err(Error::EdgeTooSmall {
                    index,
                    edge: raw.to_vec(),
                });
            }
            edges.push(set);
        }
        Ok(Self::canonical(n, edges))
    }

    /// Builds from vertex sets, with the same validation as [`Hypergraph::new`].
    pub fn from_sets(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let lists: Vec<Vec<u32>> = edges.into_iter().map(|e| e.to_vec()).collect();
        Self::new(n, &lists)
    }

    fn canonical(n: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.sort();
        edges.dedup();
        Hypergraph { n, edges }
    }

    /// The edgeless hypergraph on `{1..n}`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= VertexSet::MAX_ELEMENT);
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_spec(spec: &HypergraphSpec) -> Result<Self> {
        Self::new(spec.n, &spec.edges)
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        HypergraphSpec {
            n: self.n,
            edges: self.edges.iter().map(|e| e.to_vec()).collect(),
        }
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, HypergraphParseError> {
        let spec: HypergraphSpec = serde_json::from_str(text)?;
        Ok(Self::from_spec(&spec)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> VertexSet {
        self.edges[index]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Position of `edge` in the canonical order, if present.
    pub fn edge_index(&self, edge: VertexSet) -> Option<usize> {
        self.edges.binary_search(&edge).ok()
    }

    /// `G|_K`: the edges lying inside `k`, on the same label space.
    pub fn restrict(&self, k: VertexSet) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|e| e.is_subset(k)).collect(),
        }
    }

    /// `St(G|_K)`: the restriction relabeled order-preservingly onto `{1..|K|}`.
    pub fn standardize(&self, k: VertexSet) -> Hypergraph {
        let relabel = |e: VertexSet| -> VertexSet {
            e.iter()
                .map(|v| (k & VertexSet::full(v as usize)).len() as u32)
                .collect()
        };
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.is_subset(k))
            .map(relabel)
            .collect();
        Self::canonical(k.len(), edges)
    }

    /// Connected components, isolated vertices included as singletons.
    pub fn components(&self) -> SetPartition {
        let mut merger = Merger::singletons(self.n);
        for &e in &self.edges {
            merger.merge(e);
        }
        merger.into_partition(self.n)
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges.iter()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}} on [{}]", self.n)
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(serializer)
    }
}

/// `make_hypergraph(n, raw_edges)`.
pub fn make_hypergraph<E: AsRef<[u32]>>(n: usize, raw_edges: &[E]) -> Result<Hypergraph> {
    Hypergraph::new(n, raw_edges)
}

/// Failure to read a hypergraph document.
#[derive(Debug, thiserror::Error)]
pub enum HypergraphParseError {
    #[error("malformed hypergraph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}
