//! Orientations of hypergraphs and their quotient digraphs.
//!
//! An orientation picks, for every edge, a nonempty proper head; the rest of the
//! edge is the tail. Heads are glued together (transitively) into blocks, and
//! every tail vertex receives an arc from the block of its edge's head.

use serde::Serialize;

use crate::flat::ContractedHypergraph;
use crate::hypergraph::Hypergraph;
use crate::partition::{Merger, SetPartition};
use crate::vset::VertexSet;

/// Anything whose edges can be oriented: edges are sets of nodes, and each node
/// stands for a nonempty set of original vertices.
///
/// For a [`Hypergraph`], node `i` is vertex `i + 1`. For a
/// [`ContractedHypergraph`], node `i` is block `i` of the flat's partition.
pub trait Orientable {
    /// Size of the original vertex set.
    fn vertex_count(&self) -> usize;
    fn node_count(&self) -> usize;
    /// Edges as node sets (node `i` is bit `i`).
    fn node_edges(&self) -> &[VertexSet];
    fn node_members(&self, node: usize) -> VertexSet;
}

impl Orientable for Hypergraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn node_count(&self) -> usize {
        self.n()
    }
    fn node_edges(&self) -> &[VertexSet] {
        self.edges()
    }
    fn node_members(&self, node: usize) -> VertexSet {
        VertexSet::from_index(node)
    }
}

impl Orientable for ContractedHypergraph {
    fn vertex_count(&self) -> usize {
        self.blocks().n()
    }
    fn node_count(&self) -> usize {
        self.block_count()
    }
    fn node_edges(&self) -> &[VertexSet] {
        self.edges()
    }
    fn node_members(&self, node: usize) -> VertexSet {
        self.blocks().blocks()[node]
    }
}

/// One head per edge, in node terms, parallel to [`Orientable::node_edges`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Orientation {
    heads: Vec<VertexSet>,
}

impl Orientation {
    /// Checks `∅ ≠ head ⊊ edge` for every edge.
    pub fn new<H: Orientable + ?Sized>(h: &H, heads: Vec<VertexSet>) -> Option<Orientation> {
        let edges = h.node_edges();
        let ok = heads.len() == edges.len()
            && heads
                .iter()
                .zip(edges)
                .all(|(&a, &u)| !a.is_empty() && a.is_subset(u) && a != u);
        ok.then_some(Orientation { heads })
    }

    pub fn heads(&self) -> &[VertexSet] {
        &self.heads
    }
}

/// Number of orientations: the product of `2^|U| - 2` over edges.
pub fn orientation_count<H: Orientable + ?Sized>(h: &H) -> u128 {
    h.node_edges().iter().fold(1u128, |acc, e| {
        acc.saturating_mul((1u128 << e.len()) - 2)
    })
}

/// Every orientation exactly once: edges in canonical order (the first edge
/// varies slowest), heads in increasing bitmask order.
pub fn orientations<H: Orientable + ?Sized>(h: &H) -> Orientations {
    let choices: Vec<Vec<VertexSet>> = h
        .node_edges()
        .iter()
        .map(|e| e.proper_subsets().collect())
        .collect();
    let exhausted = choices.iter().any(|c| c.is_empty());
    Orientations {
        cursor: vec![0; choices.len()],
        choices,
        done: exhausted,
    }
}

pub struct Orientations {
    choices: Vec<Vec<VertexSet>>,
    cursor: Vec<usize>,
    done: bool,
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.done {
            return None;
        }
        let heads = self
            .cursor
            .iter()
            .zip(&self.choices)
            .map(|(&i, c)| c[i])
            .collect();
        // advance the odometer, last edge fastest
        let mut k = self.cursor.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.cursor[k] += 1;
            if self.cursor[k] < self.choices[k].len() {
                break;
            }
            self.cursor[k] = 0;
        }
        Some(Orientation { heads })
    }
}

/// A digraph on at most 64 vertices, each vertex a block of original vertices.
///
/// Arcs are deduplicated, sorted, and never self-loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    vertices: Vec<VertexSet>,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn new(vertices: Vec<VertexSet>, mut arcs: Vec<(usize, usize)>) -> Self {
        assert!(vertices.len() <= 64, "digraphs are limited to 64 vertices");
        for &(a, b) in &arcs {
            assert!(a < vertices.len() && b < vertices.len(), "arc endpoint out of range");
            assert_ne!(a, b, "self-loops are not representable");
        }
        arcs.sort_unstable();
        arcs.dedup();
        Digraph { vertices, arcs }
    }

    /// A digraph on vertices `{1}, ..., {n}` from 1-based arcs.
    pub fn on_singletons(n: usize, arcs: &[(u32, u32)]) -> Self {
        let vertices = (1..=n as u32).map(VertexSet::singleton).collect();
        Digraph::new(
            vertices,
            arcs.iter()
                .map(|&(a, b)| ((a - 1) as usize, (b - 1) as usize))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[VertexSet] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Arcs as pairs of blocks.
    pub fn block_arcs(&self) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
        self.arcs
            .iter()
            .map(|&(a, b)| (self.vertices[a], self.vertices[b]))
    }

    pub fn successors(&self) -> Vec<u64> {
        let mut succ = vec![0u64; self.vertices.len()];
        for &(a, b) in &self.arcs {
            succ[a] |= 1 << b;
        }
        succ
    }

    pub fn predecessors(&self) -> Vec<u64> {
        let mut pred = vec![0u64; self.vertices.len()];
        for &(a, b) in &self.arcs {
            pred[b] |= 1 << a;
        }
        pred
    }

    /// Kahn's algorithm, always taking the smallest ready vertex.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let m = self.vertices.len();
        let pred = self.predecessors();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(m);
        while order.len() < m {
            let ready = (0..m).find(|&v| placed & (1 << v) == 0 && pred[v] & !placed == 0)?;
            placed |= 1 << ready;
            order.push(ready);
        }
        Some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// `reach[v]`: vertices reachable from `v` by a path of length at least one.
    pub fn reachability(&self) -> Vec<u64> {
        let m = self.vertices.len();
        let mut reach = self.successors();
        // Warshall on bit rows
        for k in 0..m {
            let bit = 1u64 << k;
            let row_k = reach[k];
            for row in reach.iter_mut() {
                if *row & bit != 0 {
                    *row |= row_k;
                }
            }
        }
        reach
    }

    /// Vertex masks of the strongly connected components that contain a cycle.
    pub fn cyclic_components(&self) -> Vec<u64> {
        let reach = self.reachability();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.vertices.len() {
            if seen & (1 << v) != 0 || reach[v] & (1 << v) == 0 {
                continue;
            }
            let comp = (0..self.vertices.len())
                .filter(|&w| reach[v] & (1 << w) != 0 && reach[w] & (1 << v) != 0)
                .fold(0u64, |acc, w| acc | (1 << w));
            seen |= comp;
            out.push(comp);
        }
        out
    }
}

/// The quotient `H/O`: blocks of original vertices and the arcs between them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quotient {
    pub blocks: SetPartition,
    pub digraph: Digraph,
    /// Edges whose head and some tail vertex fell into one block.
    pub witnesses: Vec<usize>,
}

impl Quotient {
    pub fn is_acyclic(&self) -> bool {
        self.witnesses.is_empty() && self.digraph.is_acyclic()
    }
}

/// Builds the quotient digraph of an orientation.
pub fn orientation_quotient<H: Orientable + ?Sized>(h: &H, o: &Orientation) -> Quotient {
    let nodes = h.node_count();
    let mut merger = Merger::singletons(nodes);
    for &head in o.heads() {
        merger.merge(head);
    }
    let node_classes = merger.into_partition(nodes);
    let class_of = |node: usize| -> usize {
        node_classes
            .block_of(node as u32 + 1)
            .expect("partition covers every node")
    };

    let mut arcs = Vec::new();
    let mut witnesses = Vec::new();
    for (e, (&edge, &head)) in h.node_edges().iter().zip(o.heads()).enumerate() {
        let from = class_of(head.first_index().expect("heads are nonempty"));
        let mut witness = false;
        for t in (edge - head).indices() {
            let to = class_of(t);
            if to == from {
                witness = true;
            } else {
                arcs.push((from, to));
            }
        }
        if witness {
            witnesses.push(e);
        }
    }

    let vertices: Vec<VertexSet> = node_classes
        .blocks()
        .iter()
        .map(|c| c.indices().fold(VertexSet::EMPTY, |acc, i| acc | h.node_members(i)))
        .collect();
    // classes are sorted by their smallest node, which also sorts by smallest vertex
    let blocks = SetPartition::from_blocks_unchecked(h.vertex_count(), vertices.clone());
    debug_assert_eq!(blocks.blocks(), vertices.as_slice());
    Quotient {
        blocks,
        digraph: Digraph::new(vertices, arcs),
        witnesses,
    }
}

/// True iff the quotient digraph has no directed cycle and no edge has a tail
/// vertex glued to its own head.
pub fn is_acyclic<H: Orientable + ?Sized>(h: &H, o: &Orientation) -> bool {
    orientation_quotient(h, o).is_acyclic()
}
