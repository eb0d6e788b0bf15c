//! Face keys: the canonical combinatorial name of a face of `P_G`.
//!
//! A key is a flat `F` of `G` together with an acyclic orientation of `G/F`,
//! recorded as one head per non-flat edge in original vertex labels. Heads are
//! saturated: a head contains every vertex of its edge that shares a flat block
//! with the head, so two descriptions of the same orientation of `G/F` give the
//! same key.
//!
//! The normal cone of the face is `{x : x constant on blocks, x_a >= x_b along arcs}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flat::{EdgeSet, Flat};
use crate::hypergraph::Hypergraph;
use crate::orient::Digraph;
use crate::partition::{Merger, SetComposition, SetPartition};
use crate::vset::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FaceKey {
    flat: Flat,
    heads: Vec<(usize, VertexSet)>,
    blocks: SetPartition,
    dim: usize,
}

impl FaceKey {
    pub fn flat(&self) -> &Flat {
        &self.flat
    }

    /// `(edge index, head)` for every non-flat edge, by increasing edge index.
    pub fn heads(&self) -> &[(usize, VertexSet)] {
        &self.heads
    }

    pub fn head(&self, edge: usize) -> Option<VertexSet> {
        self.heads
            .binary_search_by_key(&edge, |&(e, _)| e)
            .ok()
            .map(|i| self.heads[i].1)
    }

    /// `[n]/O`: flat components glued along heads.
    pub fn blocks(&self) -> &SetPartition {
        &self.blocks
    }

    /// Dimension of the face, `n - |blocks|`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_vertex(&self) -> bool {
        self.dim == 0
    }

    /// The cone family `K(U)`: `U` itself on flat edges, the head elsewhere.
    pub fn family(&self, g: &Hypergraph) -> Vec<VertexSet> {
        let mut family = g.edges().to_vec();
        for &(e, head) in &self.heads {
            family[e] = head;
        }
        family
    }

    /// Quotient digraph on [`FaceKey::blocks`].
    pub fn digraph(&self, g: &Hypergraph) -> Result<Digraph> {
        let mut arcs = Vec::new();
        for &(e, head) in &self.heads {
            let edge = g.edge(e);
            let from = self.block_index(head, e)?;
            for t in (edge - head).iter() {
                let to = self
                    .blocks
                    .block_of(t)
                    .ok_or_else(|| Error::ForeignKey(format!("vertex {t} outside the key")))?;
                if to == from {
                    return Err(Error::InvalidFace(format!(
                        "edge #{e} has head {head} and tail vertex {t} in one block"
                    )));
                }
                arcs.push((from, to));
            }
        }
        Ok(Digraph::new(self.blocks.blocks().to_vec(), arcs))
    }

    fn block_index(&self, head: VertexSet, e: usize) -> Result<usize> {
        let v = head
            .min_element()
            .ok_or_else(|| Error::InvalidFace(format!("edge #{e} has an empty head")))?;
        self.blocks
            .block_of(v)
            .ok_or_else(|| Error::ForeignKey(format!("vertex {v} outside the key")))
    }

    /// For each vertex `v` (index `v - 1`), the vertices `w` with `x_v >= x_w` on the whole cone.
    pub fn relation(&self, g: &Hypergraph) -> Result<Vec<VertexSet>> {
        let d = self.digraph(g)?;
        let reach = d.reachability();
        let blocks = self.blocks.blocks();
        let mut rel = vec![VertexSet::EMPTY; g.n()];
        for (b, &block) in blocks.iter().enumerate() {
            let below = VertexSet::from_bits(reach[b])
                .indices()
                .fold(block, |acc, c| acc | blocks[c]);
            for v in block.indices() {
                rel[v] = below;
            }
        }
        Ok(rel)
    }

    /// Full structural validation against `g`.
    pub fn check(&self, g: &Hypergraph) -> Result<()> {
        if self.blocks.n() != g.n() || self.flat.partition().n() != g.n() {
            return Err(Error::ForeignKey(format!(
                "key is on {} vertices, hypergraph on {}",
                self.blocks.n(),
                g.n()
            )));
        }
        let flat = Flat::from_edges(g, self.flat.edges().clone())?;
        if flat.partition() != self.flat.partition() {
            return Err(Error::InvalidFace("flat partition is not its component partition".into()));
        }
        let expected: Vec<usize> = (0..g.edge_count()).filter(|&e| !flat.contains_edge(e)).collect();
        let got: Vec<usize> = self.heads.iter().map(|&(e, _)| e).collect();
        if let Some(&bad) = got.iter().find(|&&e| e >= g.edge_count()) {
            return Err(Error::ForeignKey(format!("edge index {bad} out of range")));
        }
        if got != expected {
            return Err(Error::InvalidFace("heads must cover exactly the non-flat edges".into()));
        }
        let p = flat.partition();
        let mut merger = Merger::from_partition(p);
        for &(e, head) in &self.heads {
            let edge = g.edge(e);
            if head.is_empty() || !head.is_subset(edge) {
                return Err(Error::ForeignKey(format!("head {head} is not inside edge #{e} {edge}")));
            }
            if edge & p.saturate(head) != head {
                return Err(Error::InvalidFace(format!("head {head} of edge #{e} is not saturated")));
            }
            if edge.is_subset(head) {
                return Err(Error::InvalidFace(format!("head of edge #{e} is the whole edge")));
            }
            merger.merge(head);
        }
        if merger.into_partition(g.n()) != self.blocks {
            return Err(Error::InvalidFace("blocks are not the head-glued flat components".into()));
        }
        if self.dim != g.n() - self.blocks.len() {
            return Err(Error::InvalidFace("dimension does not match the block count".into()));
        }
        if !self.digraph(g)?.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("face keys serialize")
    }
}

#[derive(Serialize)]
struct FaceKeyRepr {
    flat: Vec<usize>,
    heads: BTreeMap<usize, Vec<u32>>,
    blocks: Vec<Vec<u32>>,
    dim: usize,
}

impl Serialize for FaceKey {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FaceKeyRepr {
            flat: self.flat.edges().to_vec(),
            heads: self.heads.iter().map(|&(e, h)| (e, h.to_vec())).collect(),
            blocks: self.blocks.to_vecs(),
            dim: self.dim,
        }
        .serialize(serializer)
    }
}

/// Keys sort by dimension first, then flat, heads, blocks.
impl Ord for FaceKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.flat.cmp(&other.flat))
            .then_with(|| self.heads.cmp(&other.heads))
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl PartialOrd for FaceKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Glues the flat's blocks along saturated heads.
fn assemble(g: &Hypergraph, flat: Flat, heads: Vec<(usize, VertexSet)>) -> FaceKey {
    let mut merger = Merger::from_partition(flat.partition());
    for &(_, head) in &heads {
        merger.merge(head);
    }
    let blocks = merger.into_partition(g.n());
    let dim = g.n() - blocks.len();
    FaceKey {
        flat,
        heads,
        blocks,
        dim,
    }
}

/// `Ω(A)`: the flat `G|_A`, and on every other edge the head `U ∩ A_i` for the
/// first part `A_i` meeting `U`.
pub fn omega(g: &Hypergraph, a: &SetComposition) -> FaceKey {
    omega_parts(g, a.parts())
}

/// [`omega`] on raw parts; `parts` must be a set composition of `{1..n}`.
pub fn omega_parts(g: &Hypergraph, parts: &[VertexSet]) -> FaceKey {
    let flat = Flat::induced(g, parts);
    let mut heads = Vec::with_capacity(g.edge_count() - flat.len());
    for (e, &edge) in g.edges().iter().enumerate() {
        if flat.contains_edge(e) {
            continue;
        }
        let part = parts
            .iter()
            .find(|p| p.intersects(edge))
            .expect("parts cover every vertex");
        heads.push((e, edge & *part));
    }
    assemble(g, flat, heads)
}

/// `Ψ`: peel off source blocks, always the one whose minimum is largest.
///
/// The parts of the result are exactly the blocks of `key`, and
/// `omega(g, &psi(g, key)?) == *key`.
pub fn psi(g: &Hypergraph, key: &FaceKey) -> Result<SetComposition> {
    let d = key.digraph(g)?;
    let pred = d.predecessors();
    let blocks = key.blocks().blocks();
    let mut remaining: u64 = if blocks.is_empty() {
        0
    } else {
        u64::MAX >> (64 - blocks.len())
    };
    let mut parts = Vec::with_capacity(blocks.len());
    while remaining != 0 {
        let chosen = VertexSet::from_bits(remaining)
            .indices()
            .filter(|&v| pred[v] & remaining == 0)
            .max_by_key(|&v| blocks[v].min_element())
            .ok_or(Error::Cyclic)?;
        parts.push(blocks[chosen]);
        remaining &= !(1u64 << chosen);
    }
    SetComposition::new(g.n(), parts)
}

/// Rewrites a cone `∩_U C_{K(U),U}` into its canonical face key, without changing the cone.
///
/// Repeats until stable: edges with `K(U) = U` form the flat; an edge whose `K(U)`
/// meets every flat block of `U` is promoted to `K(U) = U`; the remaining `K(U)`
/// orient `G/F`; every cyclic strongly connected component `B` of the quotient
/// (including a block holding both head and tail of one edge) is absorbed into
/// each `K(U)` meeting it.
pub fn normalize_cone(g: &Hypergraph, family: &[VertexSet]) -> Result<FaceKey> {
    if family.len() != g.edge_count() {
        return Err(Error::InvalidFamily(format!(
            "{} sets given for {} edges",
            family.len(),
            g.edge_count()
        )));
    }
    for (e, (&k, &edge)) in family.iter().zip(g.edges()).enumerate() {
        if k.is_empty() {
            return Err(Error::InvalidFamily(format!("K of edge #{e} is empty")));
        }
        if !k.is_subset(edge) {
            return Err(Error::InvalidFamily(format!("K = {k} is not inside edge #{e} {edge}")));
        }
    }

    let n = g.n();
    let edges = g.edges();
    let mut k = family.to_vec();
    loop {
        let flat_partition = loop {
            let mut merger = Merger::singletons(n);
            for (e, &edge) in edges.iter().enumerate() {
                if k[e] == edge {
                    merger.merge(edge);
                }
            }
            let p = merger.into_partition(n);
            let mut promoted = false;
            for (e, &edge) in edges.iter().enumerate() {
                if k[e] != edge && edge.is_subset(p.saturate(k[e])) {
                    k[e] = edge;
                    promoted = true;
                }
            }
            if !promoted {
                break p;
            }
        };

        let mut merger = Merger::from_partition(&flat_partition);
        for (e, &edge) in edges.iter().enumerate() {
            if k[e] != edge {
                k[e] = edge & flat_partition.saturate(k[e]);
                merger.merge(k[e]);
            }
        }
        let blocks = merger.into_partition(n);

        let mut arcs = Vec::new();
        let mut cyclic: Vec<VertexSet> = Vec::new();
        for (e, &edge) in edges.iter().enumerate() {
            if k[e] == edge {
                continue;
            }
            let from = blocks.block_of(k[e].min_element().unwrap()).unwrap();
            for t in (edge - k[e]).iter() {
                let to = blocks.block_of(t).unwrap();
                if to == from {
                    cyclic.push(blocks.blocks()[from]);
                } else {
                    arcs.push((from, to));
                }
            }
        }
        let d = Digraph::new(blocks.blocks().to_vec(), arcs);
        for comp in d.cyclic_components() {
            let b = VertexSet::from_bits(comp)
                .indices()
                .fold(VertexSet::EMPTY, |acc, i| acc | blocks.blocks()[i]);
            cyclic.push(b);
        }

        if cyclic.is_empty() {
            let flat_edges: EdgeSet = (0..edges.len()).filter(|&e| k[e] == edges[e]).collect();
            let flat = Flat::from_parts_unchecked(flat_edges, flat_partition);
            let heads = (0..edges.len())
                .filter(|&e| k[e] != edges[e])
                .map(|e| (e, k[e]))
                .collect();
            let key = assemble(g, flat, heads);
            debug_assert_eq!(key.blocks, blocks);
            return Ok(key);
        }

        let before = k.clone();
        for b in cyclic {
            for (e, &edge) in edges.iter().enumerate() {
                if before[e].intersects(b) {
                    k[e] |= b & edge;
                }
            }
        }
        debug_assert_ne!(before, k, "absorbing a cycle must grow some K(U)");
    }
}

/// Face containment: `face(key1) ⊆ face(key2)`, i.e. every cone inequality of
/// `key1` is implied by those of `key2`.
pub fn is_subface(g: &Hypergraph, key1: &FaceKey, key2: &FaceKey) -> Result<bool> {
    key1.check(g)?;
    key2.check(g)?;
    let r1 = key1.relation(g)?;
    let r2 = key2.relation(g)?;
    Ok(r1.iter().zip(&r2).all(|(a, b)| a.is_subset(*b)))
}

/// The vertex of `P_G` for a 0-dimensional key: coordinate `i` counts edges with head `{i}`.
pub fn vertex_coordinates(g: &Hypergraph, key: &FaceKey) -> Result<Vec<u64>> {
    key.check(g)?;
    if !key.is_vertex() {
        return Err(Error::InvalidFace(format!(
            "key has dimension {}, not a vertex",
            key.dim()
        )));
    }
    let mut coords = vec![0u64; g.n()];
    for &(_, head) in key.heads() {
        let v = head.min_element().expect("heads are nonempty");
        debug_assert_eq!(head.len(), 1);
        coords[(v - 1) as usize] += 1;
    }
    Ok(coords)
}
