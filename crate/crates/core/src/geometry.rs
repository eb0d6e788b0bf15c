//! Faces of `P_G` through the surjection `Ω`, plus f-vectors, simplicity and volume.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{normalize_cone, omega_parts, FaceKey};
use crate::flat::{flats, EdgeSet};
use crate::hopf::AntipodeResult;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::orient::Digraph;
use crate::partition::{composition_chunks, for_each_composition_in_chunk, Merger};
use crate::vset::VertexSet;

pub use crate::face::vertex_coordinates;

/// Face counts `f_0, ..., f_d` by dimension.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        FVector(counts)
    }

    /// The `(r - 1)`-simplex: `f_j = C(r, j + 1)`.
    pub fn simplex(r: usize) -> Self {
        FVector((0..r).map(|j| binomial(r as u64, j as u64 + 1)).collect())
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, j: usize) -> u64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    /// `d`, the top dimension; `None` for an empty vector.
    pub fn dim(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `Σ_j (-1)^j f_j`.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &f)| if j % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// f-vector of the product polytope: the f-polynomials multiply.
    pub fn product(&self, other: &FVector) -> FVector {
        if self.0.is_empty() || other.0.is_empty() {
            return FVector(Vec::new());
        }
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        FVector(out)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim P_G = n - (components of G)`, isolated vertices counted as components.
pub fn polytope_dim(g: &Hypergraph) -> usize {
    g.n() - g.component_count()
}

/// `{Ω(A) : A ⊨ [n]}`, sorted by `(dim, key)`.
pub fn enumerate_faces(g: &Hypergraph, limits: &Limits) -> Result<Vec<FaceKey>> {
    limits.check(g.n())?;
    let faces = composition_chunks(g.n())
        .into_par_iter()
        .map(|first| {
            let mut local = HashSet::new();
            for_each_composition_in_chunk(g.n(), first, |parts| {
                local.insert(omega_parts(g, parts));
            });
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return union(b, a);
            }
            a.extend(b);
            a
        });
    let mut faces: Vec<FaceKey> = faces.into_iter().collect();
    faces.sort();
    Ok(faces)
}

fn union(mut big: HashSet<FaceKey>, small: HashSet<FaceKey>) -> HashSet<FaceKey> {
    big.extend(small);
    big
}

pub fn f_vector(g: &Hypergraph, limits: &Limits) -> Result<FVector> {
    Ok(f_vector_of(g, &enumerate_faces(g, limits)?))
}

/// Histogram of face dimensions for an already enumerated face list.
pub fn f_vector_of(g: &Hypergraph, faces: &[FaceKey]) -> FVector {
    let mut counts = vec![0u64; polytope_dim(g) + 1];
    for key in faces {
        counts[key.dim()] += 1;
    }
    FVector(counts)
}

/// Transitive reduction of an acyclic digraph.
pub fn hasse_diagram(d: &Digraph) -> Result<Digraph> {
    if !d.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let reach = d.reachability();
    let succ = d.successors();
    let arcs = d
        .arcs()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !VertexSet::from_bits(succ[a])
                .indices()
                .any(|c| c != b && reach[c] & (1u64 << b) != 0)
        })
        .collect();
    Ok(Digraph::new(d.vertices().to_vec(), arcs))
}

/// True iff the underlying undirected graph has no cycle.
pub fn is_forest(d: &Digraph) -> bool {
    let nodes = d.vertex_count();
    let mut merger = Merger::singletons(nodes);
    for &(a, b) in d.arcs() {
        merger.merge(VertexSet::from_index(a) | VertexSet::from_index(b));
    }
    d.arcs().len() + merger.into_partition(nodes).len() == nodes
}

/// `P_G` is simple iff the Hasse diagram of every vertex orientation is a forest.
pub fn is_simple(g: &Hypergraph, limits: &Limits) -> Result<bool> {
    is_simple_of(g, &enumerate_faces(g, limits)?)
}

pub fn is_simple_of(g: &Hypergraph, faces: &[FaceKey]) -> Result<bool> {
    for key in faces.iter().filter(|k| k.is_vertex()) {
        if !is_forest(&hasse_diagram(&key.digraph(g)?)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Faces one dimension up that contain `key`, one for each Hasse arc of its quotient.
///
/// The two blocks of the arc are merged into every head meeting them and the
/// resulting cone is normalized. The top face has no covers.
pub fn covering_faces(g: &Hypergraph, key: &FaceKey) -> Result<Vec<FaceKey>> {
    key.check(g)?;
    let hasse = hasse_diagram(&key.digraph(g)?)?;
    let blocks = key.blocks().blocks();
    let edges = g.edges();
    let mut covers = Vec::with_capacity(hasse.arcs().len());
    for &(b1, b2) in hasse.arcs() {
        let merged = blocks[b1] | blocks[b2];
        let mut family = key.family(g);
        for (e, k) in family.iter_mut().enumerate() {
            if k.intersects(merged) {
                *k |= merged & edges[e];
            }
        }
        let cover = normalize_cone(g, &family)?;
        if cover.dim() != key.dim() + 1 {
            return Err(Error::Invariant {
                detail: format!(
                    "cover through blocks {} and {} has dimension {}",
                    blocks[b1],
                    blocks[b2],
                    cover.dim()
                ),
                face: Some(key.to_json().to_string()),
            });
        }
        covers.push(cover);
    }
    covers.sort();
    covers.dedup();
    Ok(covers)
}

/// The graph of vertices and edges of `P_G`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Skeleton {
    pub vertices: Vec<FaceKey>,
    /// Pairs of indices into `vertices`, one per 1-dimensional face.
    pub edges: Vec<(usize, usize)>,
}

impl Skeleton {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }
}

pub fn one_skeleton(g: &Hypergraph, limits: &Limits) -> Result<Skeleton> {
    one_skeleton_of(g, &enumerate_faces(g, limits)?)
}

/// Joins each 1-face to the two vertices it contains under face containment.
pub fn one_skeleton_of(g: &Hypergraph, faces: &[FaceKey]) -> Result<Skeleton> {
    let vertices: Vec<FaceKey> = faces.iter().filter(|k| k.dim() == 0).cloned().collect();
    let vertex_rel = vertices
        .iter()
        .map(|v| v.relation(g))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for face in faces.iter().filter(|k| k.dim() == 1) {
        let rel = face.relation(g)?;
        let ends: Vec<usize> = vertex_rel
            .iter()
            .enumerate()
            .filter(|(_, r)| r.iter().zip(&rel).all(|(a, b)| a.is_subset(*b)))
            .map(|(i, _)| i)
            .collect();
        match ends[..] {
            [a, b] => edges.push((a, b)),
            _ => {
                return Err(Error::Invariant {
                    detail: format!("1-face contains {} vertices", ends.len()),
                    face: Some(face.to_json().to_string()),
                })
            }
        }
    }
    edges.sort();
    Ok(Skeleton { vertices, edges })
}

/// `(-1)^n Σ (-1)^dim` over the faces of each flat.
pub fn antipode_from_faces(g: &Hypergraph, limits: &Limits) -> Result<AntipodeResult> {
    let faces = enumerate_faces(g, limits)?;
    let mut sums: BTreeMap<EdgeSet, i64> = BTreeMap::new();
    for key in &faces {
        let s = if (g.n() + key.dim()).is_multiple_of(2) { 1 } else { -1 };
        *sums.entry(key.flat().edges().clone()).or_insert(0) += s;
    }
    let all = flats(g, limits)?;
    Ok(AntipodeResult::from_flats(all, |f| {
        sums.get(f.edges()).copied().unwrap_or(0)
    }))
}

/// Normalized volume of `P_G`, by counting draconian sequences.
///
/// A length `n - 1` sequence of edges is draconian when every `k` of its
/// entries cover at least `k + 1` vertices. Sequences are grouped by their
/// multiset of edges; a multiset with multiplicities `m_U` qualifies iff every
/// nonempty set `T` of its distinct edges has `|∪T| ≥ Σ_{U∈T} m_U + 1`, and
/// contributes `(n - 1)! / Π m_U!` orderings.
pub fn normalized_volume(g: &Hypergraph) -> Result<u64> {
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    if g.n() <= 1 {
        return Ok(1);
    }
    let mut edges = g.edges().to_vec();
    // larger edges first, so the union grows fast and pruning bites early
    edges.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let len = g.n() - 1;
    let mut search = Draconian {
        edges: &edges,
        chosen: Vec::new(),
        facts: (0..=len as u128).scan(1u128, |f, i| {
            if i > 0 {
                *f *= i;
            }
            Some(*f)
        })
        .collect(),
        total: 0,
    };
    search.run(0, len)?;
    u64::try_from(search.total).map_err(|_| Error::Overflow("normalized volume"))
}

struct Draconian<'a> {
    edges: &'a [VertexSet],
    /// `(edge, multiplicity)` of the current partial multiset.
    chosen: Vec<(VertexSet, usize)>,
    facts: Vec<u128>,
    total: u128,
}

impl Draconian<'_> {
    fn run(&mut self, from: usize, remaining: usize) -> Result<()> {
        if remaining == 0 {
            let len = self.facts.len() - 1;
            let denom: u128 = self.chosen.iter().map(|&(_, m)| self.facts[m]).product();
            self.total = self
                .total
                .checked_add(self.facts[len] / denom)
                .ok_or(Error::Overflow("normalized volume"))?;
            return Ok(());
        }
        for i in from..self.edges.len() {
            let e = self.edges[i];
            for m in 1..=remaining {
                // any sub-multiset containing m copies of e needs a union of size > its count
                if e.len() < m + 1 {
                    break;
                }
                self.chosen.push((e, m));
                if self.last_is_feasible() {
                    self.run(i + 1, remaining - m)?;
                }
                self.chosen.pop();
            }
        }
        Ok(())
    }

    /// Checks the condition for every subset containing the newest edge.
    fn last_is_feasible(&self) -> bool {
        let (last, m_last) = *self.chosen.last().unwrap();
        let rest = &self.chosen[..self.chosen.len() - 1];
        (0u64..1 << rest.len()).all(|mask| {
            let (union, count) = VertexSet::from_bits(mask)
                .indices()
                .fold((last, m_last), |(u, c), i| (u | rest[i].0, c + rest[i].1));
            union.len() > count
        })
    }
}
