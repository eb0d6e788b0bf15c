//! Product, coproduct and the antipode of the hypergraph Hopf algebra.
//!
//! The antipode of `G` is a signed sum of its flats. Three independent engines
//! compute it: the signed composition sum, a signed count of acyclic
//! orientations of each contraction `G/F`, and an Euler characteristic over
//! faces (in [`crate::geometry::antipode_from_faces`]).

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flat::{contract, flats, induced_edges, ContractedHypergraph, EdgeSet, Flat};
use crate::geometry::enumerate_faces;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::orient::{orientation_count, orientation_quotient, orientations};
use crate::partition::{composition_chunks, for_each_composition_in_chunk};
use crate::vset::VertexSet;

/// `S(G) = Σ_F a(G/F) F` over all flats, zero coefficients included.
///
/// Terms are listed from the largest flat (as a binary number over edge
/// indices) down to the empty flat.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntipodeResult {
    terms: Vec<(Flat, i64)>,
}

#[derive(Serialize)]
struct TermRepr<'a> {
    flat: &'a EdgeSet,
    coefficient: i64,
}

impl AntipodeResult {
    pub(crate) fn from_flats(mut flats: Vec<Flat>, coefficients: impl Fn(&Flat) -> i64) -> Self {
        flats.sort_by(|a, b| b.cmp(a));
        let terms = flats
            .into_iter()
            .map(|f| {
                let c = coefficients(&f);
                (f, c)
            })
            .collect();
        AntipodeResult { terms }
    }

    pub fn terms(&self) -> &[(Flat, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, flat: &EdgeSet) -> Option<i64> {
        self.terms
            .iter()
            .find(|(f, _)| f.edges() == flat)
            .map(|&(_, c)| c)
    }

    pub fn coefficients(&self) -> Vec<i64> {
        self.terms.iter().map(|&(_, c)| c).collect()
    }

    /// `Σ_F a(G/F)`, which is `(-1)^n` for every `G` on `n` vertices.
    pub fn total(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("antipodes serialize")
    }
}

impl Serialize for AntipodeResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(f, c)| TermRepr {
            flat: f.edges(),
            coefficient: *c,
        }))
    }
}

/// Which orientation count backs [`orientation_antipode_with`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum AntipodeMethod {
    /// Group the distinct `Ω(A)` over all compositions by flat.
    #[default]
    OmegaImage,
    /// Enumerate every orientation of every `G/F` and keep the acyclic ones.
    PerFlat,
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `μ(G1 ⊗ G2)`: `G2` shifted up past the vertices of `G1`.
pub fn hopf_product(g1: &Hypergraph, g2: &Hypergraph) -> Result<Hypergraph> {
    let shift = g1.n() as u32;
    let mut edges: Vec<Vec<u32>> = g1.edges().iter().map(|e| e.to_vec()).collect();
    edges.extend(
        g2.edges()
            .iter()
            .map(|e| e.iter().map(|v| v + shift).collect::<Vec<u32>>()),
    );
    Hypergraph::new(g1.n() + g2.n(), &edges)
}

/// `Δ(G) = Σ St(G|_K) ⊗ St(G|_L)` over ordered complementary pairs `(K, L)`.
///
/// Terms come in increasing bitmask order of `K`.
pub fn coproduct_terms(g: &Hypergraph, limits: &Limits) -> Result<Vec<(Hypergraph, Hypergraph)>> {
    limits.check(g.n())?;
    let full = g.vertices();
    let mut terms = Vec::with_capacity(1 << g.n());
    let mut k = VertexSet::EMPTY;
    loop {
        terms.push((g.standardize(k), g.standardize(full - k)));
        if k == full {
            break;
        }
        k = VertexSet::from_bits(((k.bits() | !full.bits()).wrapping_add(1)) & full.bits());
    }
    Ok(terms)
}

/// `Σ S(left) · right` over the coproduct, as a combination of hypergraphs on `{1..n}`.
///
/// For an antipode this is the counit: `∅_0` with coefficient 1 when `n = 0`,
/// and the zero combination otherwise.
pub fn antipode_convolution(g: &Hypergraph, limits: &Limits) -> Result<BTreeMap<Hypergraph, i64>> {
    let mut sum: BTreeMap<Hypergraph, i64> = BTreeMap::new();
    for (left, right) in coproduct_terms(g, limits)? {
        let s = takeuchi_antipode(&left, limits)?;
        for (flat, c) in s.terms() {
            if *c == 0 {
                continue;
            }
            let term = hopf_product(&flat.as_hypergraph(&left), &right)?;
            *sum.entry(term).or_insert(0) += c;
        }
    }
    sum.retain(|_, c| *c != 0);
    Ok(sum)
}

/// `S(G) = Σ_{A ⊨ [n]} (-1)^ℓ(A) G|_A`, summed over every set composition.
pub fn takeuchi_antipode(g: &Hypergraph, limits: &Limits) -> Result<AntipodeResult> {
    limits.check(g.n())?;
    let all = flats(g, limits)?;
    let index: HashMap<EdgeSet, usize> = all
        .iter()
        .enumerate()
        .map(|(i, f)| (f.edges().clone(), i))
        .collect();
    let sums = composition_chunks(g.n())
        .into_par_iter()
        .map(|first| {
            let mut local = vec![0i64; all.len()];
            for_each_composition_in_chunk(g.n(), first, |parts| {
                let flat = induced_edges(g, parts);
                local[index[&flat]] += sign(parts.len());
            });
            local
        })
        .reduce(
            || vec![0i64; all.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(AntipodeResult::from_flats(all, |f| sums[index[f.edges()]]))
}

/// `a(G/F) = Σ_O (-1)^{|[n]/O|}` over acyclic orientations `O` of each `G/F`.
pub fn orientation_antipode(g: &Hypergraph, limits: &Limits) -> Result<AntipodeResult> {
    orientation_antipode_with(g, AntipodeMethod::OmegaImage, limits)
}

pub fn orientation_antipode_with(
    g: &Hypergraph,
    method: AntipodeMethod,
    limits: &Limits,
) -> Result<AntipodeResult> {
    limits.check(g.n())?;
    let all = flats(g, limits)?;
    let mut sums: HashMap<EdgeSet, i64> = all.iter().map(|f| (f.edges().clone(), 0)).collect();
    match method {
        AntipodeMethod::OmegaImage => {
            for key in enumerate_faces(g, limits)? {
                *sums.get_mut(key.flat().edges()).expect("face flats are flats") += sign(key.blocks().len());
            }
        }
        AntipodeMethod::PerFlat => {
            for f in &all {
                let h = contract(g, f)?;
                sums.insert(f.edges().clone(), signed_acyclic_count(&h, limits)?);
            }
        }
    }
    Ok(AntipodeResult::from_flats(all, |f| sums[f.edges()]))
}

/// `Σ (-1)^{|blocks|}` over acyclic orientations of a contraction, by brute force.
pub fn signed_acyclic_count(h: &ContractedHypergraph, limits: &Limits) -> Result<i64> {
    let count = orientation_count(h);
    if count > limits.max_orientations as u128 {
        return Err(Error::TooManyCandidates {
            what: "orientations",
            count,
            cap: limits.max_orientations,
        });
    }
    Ok(orientations(h)
        .map(|o| orientation_quotient(h, &o))
        .filter(|q| q.is_acyclic())
        .map(|q| sign(q.blocks.len()))
        .sum())
}

/// No proper cycle: the vertex-edge incidence graph is a forest.
pub fn is_hyperforest(g: &Hypergraph) -> bool {
    let incidences: usize = g.edges().iter().map(|e| e.len()).sum();
    incidences + g.component_count() == g.n() + g.edge_count()
}

/// `(-1)^ℓ (-2)^k` when every contracted edge has an even number of blocks, else 0.
///
/// `k` counts the edges of `h` and `ℓ` its components, untouched blocks included.
/// `h` must come from a hyperforest; a contraction that is not itself a
/// hyperforest, or that merged two edges, cannot.
pub fn hyperforest_coefficient(h: &ContractedHypergraph) -> Result<i64> {
    if h.origin().iter().any(|o| o.len() > 1) || !is_hyperforest(&h.as_hypergraph()) {
        return Err(Error::NotHyperforest);
    }
    if h.edges().iter().any(|e| e.len() % 2 == 1) {
        return Ok(0);
    }
    let k = h.edge_count() as u32;
    let l = h.component_count();
    Ok(sign(l) * (-2i64).pow(k))
}

/// [`hyperforest_coefficient`] of `G/F`, checking that `G` itself is a hyperforest.
pub fn hyperforest_flat_coefficient(g: &Hypergraph, flat: &Flat) -> Result<i64> {
    if !is_hyperforest(g) {
        return Err(Error::NotHyperforest);
    }
    hyperforest_coefficient(&contract(g, flat)?)
}
