//! Set partitions and set compositions of `{1..n}`, with their enumerators.
//!
//! The composition enumerator is splittable: the index space is partitioned by
//! the first part, so [`composition_chunks`] plus [`for_each_composition_in_chunk`]
//! visit every composition exactly once, in the same global order as
//! [`for_each_composition`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::vset::VertexSet;

/// An unordered partition of `{1..n}` into nonempty blocks, stored sorted by minimum element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SetPartition {
    #[serde(skip)]
    n: usize,
    blocks: Vec<VertexSet>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<VertexSet>) -> Result<Self> {
        check_cover(n, &blocks)?;
        blocks.sort_by_key(|b| b.min_element());
        Ok(SetPartition { n, blocks })
    }

    /// All singletons `{1}, ..., {n}`.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n as u32).map(VertexSet::singleton).collect(),
        }
    }

    /// Caller guarantees the blocks cover `{1..n}` disjointly.
    pub(crate) fn from_blocks_unchecked(n: usize, mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort_unstable_by_key(|b| b.bits().trailing_zeros());
        debug_assert!(check_cover(n, &blocks).is_ok());
        SetPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding vertex `v`.
    pub fn block_of(&self, v: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// Indices of the blocks meeting `set`, as a block-index set.
    pub fn image(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for (i, b) in self.blocks.iter().enumerate() {
            if b.intersects(set) {
                out |= VertexSet::from_index(i);
            }
        }
        out
    }

    /// Union of the blocks meeting `set`.
    pub fn saturate(&self, set: VertexSet) -> VertexSet {
        self.blocks
            .iter()
            .filter(|b| b.intersects(set))
            .fold(VertexSet::EMPTY, |acc, b| acc | *b)
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.is_subset(*c)))
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

/// An ordered sequence of nonempty disjoint parts covering `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SetComposition {
    #[serde(skip)]
    n: usize,
    parts: Vec<VertexSet>,
}

impl SetComposition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        check_cover(n, &parts)?;
        Ok(SetComposition { n, parts })
    }

    pub fn from_lists(n: usize, parts: &[&[u32]]) -> Result<Self> {
        Self::new(n, parts.iter().map(|p| p.iter().collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_partition(&self) -> SetPartition {
        SetPartition::from_blocks_unchecked(self.n, self.parts.clone())
    }
}

fn check_cover(n: usize, parts: &[VertexSet]) -> Result<()> {
    if n > VertexSet::MAX_ELEMENT {
        return Err(Error::TooManyVertices {
            n,
            max: VertexSet::MAX_ELEMENT,
        });
    }
    let mut seen = VertexSet::EMPTY;
    for p in parts {
        if p.is_empty() {
            return Err(Error::InvalidComposition("empty part".into()));
        }
        if p.intersects(seen) {
            return Err(Error::InvalidComposition(format!("part {p} overlaps an earlier part")));
        }
        seen |= *p;
    }
    if seen != VertexSet::full(n) {
        return Err(Error::InvalidComposition(format!(
            "parts cover {seen}, expected 1..={n}"
        )));
    }
    Ok(())
}

/// Incremental merging of classes, starting from singletons.
#[derive(Clone, Debug)]
pub(crate) struct Merger {
    classes: Vec<VertexSet>,
}

impl Merger {
    pub fn singletons(n: usize) -> Self {
        Merger {
            classes: (1..=n as u32).map(VertexSet::singleton).collect(),
        }
    }

    pub fn from_partition(p: &SetPartition) -> Self {
        Merger {
            classes: p.blocks().to_vec(),
        }
    }

    /// Merges every class meeting `set` into one. `set` must lie in the ground set.
    pub fn merge(&mut self, set: VertexSet) {
        if set.len() < 2 {
            return;
        }
        let mut merged = set;
        self.classes.retain(|c| {
            if c.intersects(set) {
                merged |= *c;
                false
            } else {
                true
            }
        });
        self.classes.push(merged);
    }

    pub fn into_partition(self, n: usize) -> SetPartition {
        SetPartition::from_blocks_unchecked(n, self.classes)
    }
}

/// Ordered Bell (Fubini) number: the count of set compositions of an `n`-set.
pub fn fubini(n: usize) -> u128 {
    let mut fub = vec![1u128; n + 1];
    for m in 1..=n {
        let mut binom = 1u128;
        let mut acc = 0u128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            acc += binom * fub[m - k];
        }
        fub[m] = acc;
    }
    fub[n]
}

/// Visits every set composition of `{1..n}` in deterministic order.
///
/// Parts are chosen left to right; each part ranges over the nonempty subsets of
/// the remaining vertices in increasing bitmask order.
pub fn for_each_composition<F: FnMut(&[VertexSet])>(n: usize, mut f: F) {
    let mut prefix = Vec::with_capacity(n);
    recurse_compositions(VertexSet::full(n), &mut prefix, &mut f);
}

/// First parts that split the composition space into disjoint chunks.
///
/// For `n = 0` there is a single chunk, the empty set, holding the empty composition.
pub fn composition_chunks(n: usize) -> Vec<VertexSet> {
    if n == 0 {
        return vec![VertexSet::EMPTY];
    }
    VertexSet::full(n).nonempty_subsets().collect()
}

/// Visits the compositions whose first part is `first`.
pub fn for_each_composition_in_chunk<F: FnMut(&[VertexSet])>(n: usize, first: VertexSet, mut f: F) {
    let full = VertexSet::full(n);
    if first.is_empty() {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    if !first.is_subset(full) {
        return;
    }
    let mut prefix = Vec::with_capacity(n);
    prefix.push(first);
    recurse_compositions(full - first, &mut prefix, &mut f);
}

fn recurse_compositions<F: FnMut(&[VertexSet])>(
    remaining: VertexSet,
    prefix: &mut Vec<VertexSet>,
    f: &mut F,
) {
    if remaining.is_empty() {
        f(prefix);
        return;
    }
    for part in remaining.nonempty_subsets() {
        prefix.push(part);
        recurse_compositions(remaining - part, prefix, f);
        prefix.pop();
    }
}

/// All set compositions of `{1..n}`; there are `fubini(n)` of them.
pub fn set_compositions(n: usize, limits: &Limits) -> Result<Vec<SetComposition>> {
    limits.check(n)?;
    let mut out = Vec::with_capacity(fubini(n).min(1 << 24) as usize);
    for_each_composition(n, |parts| {
        out.push(SetComposition {
            n,
            parts: parts.to_vec(),
        })
    });
    Ok(out)
}

/// Visits every set partition of `{1..n}` (blocks sorted by minimum), via restricted growth strings.
pub fn for_each_set_partition<F: FnMut(&[VertexSet])>(n: usize, mut f: F) {
    let mut blocks: Vec<VertexSet> = Vec::with_capacity(n);
    recurse_partitions(1, n as u32, &mut blocks, &mut f);
}

fn recurse_partitions<F: FnMut(&[VertexSet])>(
    next: u32,
    n: u32,
    blocks: &mut Vec<VertexSet>,
    f: &mut F,
) {
    if next > n {
        f(blocks);
        return;
    }
    for i in 0..blocks.len() {
        blocks[i].insert(next);
        recurse_partitions(next + 1, n, blocks, f);
        blocks[i] = blocks[i] - VertexSet::singleton(next);
    }
    blocks.push(VertexSet::singleton(next));
    recurse_partitions(next + 1, n, blocks, f);
    blocks.pop();
}

pub fn set_partitions(n: usize, limits: &Limits) -> Result<Vec<SetPartition>> {
    limits.check(n)?;
    let mut out = Vec::new();
    for_each_set_partition(n, |blocks| {
        out.push(SetPartition {
            n,
            blocks: blocks.to_vec(),
        })
    });
    Ok(out)
}
