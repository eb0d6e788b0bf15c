//! Flats and contractions.
//!
//! A flat `G|_A` is the set of edges lying inside a single part of some set
//! composition `A`. Its identity is the edge subset alone; the partition it
//! carries is the finest one, namely the connected components of the selected
//! edges with every other vertex a singleton.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::partition::{for_each_set_partition, Merger, SetPartition};
use crate::vset::VertexSet;

/// A set of edge indices of arbitrary size.
///
/// Trailing zero words are trimmed so equality and hashing are structural.
/// Ordering is numeric, reading the set as a binary number whose bit `i` is edge `i`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1u64 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A flat of a hypergraph with its component partition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Flat {
    edges: EdgeSet,
    partition: SetPartition,
}

impl Flat {
    /// Validates that `edges` is a flat of `g`.
    pub fn from_edges(g: &Hypergraph, edges: EdgeSet) -> Result<Flat> {
        if let Some(bad) = edges.iter().find(|&i| i >= g.edge_count()) {
            return Err(Error::ForeignKey(format!("edge index {bad} out of range")));
        }
        let partition = component_partition(g, &edges);
        if let Some(edge) = first_unselected_inner_edge(g, &edges, &partition) {
            return Err(Error::NotAFlat { edge });
        }
        Ok(Flat { edges, partition })
    }

    /// `G|_A` for the parts of a composition (or any partition) of `{1..n}`.
    pub fn induced(g: &Hypergraph, parts: &[VertexSet]) -> Flat {
        let edges = induced_edges(g, parts);
        let partition = component_partition(g, &edges);
        Flat { edges, partition }
    }

    pub(crate) fn from_parts_unchecked(edges: EdgeSet, partition: SetPartition) -> Flat {
        Flat { edges, partition }
    }

    /// The flat of `g` with no edges.
    pub fn empty(g: &Hypergraph) -> Flat {
        Flat {
            edges: EdgeSet::new(),
            partition: SetPartition::singletons(g.n()),
        }
    }

    /// `G` itself, the flat of the one-part composition.
    pub fn full(g: &Hypergraph) -> Flat {
        Flat::induced(g, &[g.vertices()])
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn contains_edge(&self, i: usize) -> bool {
        self.edges.contains(i)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The flat's edges as a hypergraph on the same vertex set.
    pub fn as_hypergraph(&self, g: &Hypergraph) -> Hypergraph {
        Hypergraph::from_sets(g.n(), self.edges.iter().map(|i| g.edge(i)))
            .expect("flat edges come from a valid hypergraph")
    }
}

/// Flats are ordered by their edge sets.
impl Ord for Flat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges.cmp(&other.edges)
    }
}

impl PartialOrd for Flat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn induced_edges(g: &Hypergraph, parts: &[VertexSet]) -> EdgeSet {
    let mut edges = EdgeSet::new();
    for (i, &e) in g.edges().iter().enumerate() {
        if parts.iter().any(|&p| e.is_subset(p)) {
            edges.insert(i);
        }
    }
    edges
}

pub(crate) fn component_partition(g: &Hypergraph, edges: &EdgeSet) -> SetPartition {
    let mut merger = Merger::singletons(g.n());
    for i in edges.iter() {
        merger.merge(g.edge(i));
    }
    merger.into_partition(g.n())
}

fn first_unselected_inner_edge(g: &Hypergraph, edges: &EdgeSet, p: &SetPartition) -> Option<usize> {
    g.edges()
        .iter()
        .enumerate()
        .find(|&(i, &e)| !edges.contains(i) && p.image(e).len() == 1)
        .map(|(i, _)| i)
}

/// All distinct flats of `g`, in increasing edge-set order.
///
/// Enumerates set partitions of `{1..n}` and deduplicates the induced edge sets.
pub fn flats(g: &Hypergraph, limits: &Limits) -> Result<Vec<Flat>> {
    limits.check(g.n())?;
    let mut seen = BTreeSet::new();
    for_each_set_partition(g.n(), |blocks| {
        seen.insert(induced_edges(g, blocks));
    });
    Ok(seen
        .into_iter()
        .map(|edges| {
            let partition = component_partition(g, &edges);
            Flat { edges, partition }
        })
        .collect())
}

/// `G/F`: the hypergraph on the blocks of a flat's partition.
///
/// Contracted edges are block-index sets (block `b` is element `b + 1`), stored
/// deduplicated and sorted. `origin[i]` lists the original edges mapping to edge `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractedHypergraph {
    blocks: SetPartition,
    edges: Vec<VertexSet>,
    origin: Vec<Vec<usize>>,
}

impl ContractedHypergraph {
    pub fn blocks(&self) -> &SetPartition {
        &self.blocks
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn origin(&self) -> &[Vec<usize>] {
        &self.origin
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Union of the original vertices in a block-index set.
    pub fn expand(&self, block_set: VertexSet) -> VertexSet {
        block_set
            .indices()
            .fold(VertexSet::EMPTY, |acc, b| acc | self.blocks.blocks()[b])
    }

    /// Connected components counted over blocks; untouched blocks count individually.
    pub fn component_count(&self) -> usize {
        let mut merger = Merger::singletons(self.block_count());
        for &e in &self.edges {
            merger.merge(e);
        }
        merger.into_partition(self.block_count()).len()
    }

    /// The contracted hypergraph read as an ordinary hypergraph on `{1..block_count}`.
    pub fn as_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_sets(self.block_count(), self.edges.iter().copied())
            .expect("contracted edges have at least two blocks")
    }
}

/// Contracts every edge of `flat`.
pub fn contract(g: &Hypergraph, flat: &Flat) -> Result<ContractedHypergraph> {
    let checked = Flat::from_edges(g, flat.edges().clone())?;
    if checked.partition != flat.partition {
        return Err(Error::InvalidFace(
            "flat partition differs from the components of its edges".into(),
        ));
    }
    let blocks = checked.partition;
    let mut images: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
    for (i, &e) in g.edges().iter().enumerate() {
        if flat.contains_edge(i) {
            continue;
        }
        let image = blocks.image(e);
        debug_assert!(image.len() >= 2, "closure guarantees non-flat edges span two blocks");
        images.entry(image).or_default().push(i);
    }
    let (edges, origin) = images.into_iter().unzip();
    Ok(ContractedHypergraph {
        blocks,
        edges,
        origin,
    })
}
