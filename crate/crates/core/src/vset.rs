//! Small-universe bitsets.
//!
//! Element `i` (1-based) lives at bit `i - 1`. The same type is used for vertex
//! sets of a hypergraph and for sets of block indices of a contracted
//! hypergraph, where block `b` (0-based) is element `b + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// A subset of `{1, ..., 64}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// Largest representable element.
    pub const MAX_ELEMENT: usize = 64;
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::MAX_ELEMENT);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=64).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// The set holding the 0-based index `i` (element `i + 1`).
    #[inline]
    pub fn from_index(i: usize) -> Self {
        VertexSet(1u64 << i)
    }

    #[inline]
    pub fn contains(self, v: u32) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub fn contains_index(self, i: usize) -> bool {
        self.0 & (1u64 << i) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        self.0 |= 1u64 << (v - 1);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn min_element(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    #[inline]
    pub fn max_element(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Smallest 0-based index in the set.
    #[inline]
    pub fn first_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// 0-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        self.iter().map(|v| (v - 1) as usize)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Nonempty proper subsets, in increasing order of their bitmask value.
    pub fn proper_subsets(self) -> ProperSubsets {
        ProperSubsets {
            mask: self.0,
            current: 0,
        }
    }

    /// Nonempty subsets (including `self`), in increasing bitmask order.
    pub fn nonempty_subsets(self) -> NonemptySubsets {
        NonemptySubsets {
            mask: self.0,
            current: 0,
            done: self.0 == 0,
        }
    }
}

/// Iterator over the elements of a [`VertexSet`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct ProperSubsets {
    mask: u64,
    current: u64,
}

impl Iterator for ProperSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        // next submask in increasing order: (s - mask) & mask
        let next = self.current.wrapping_sub(self.mask) & self.mask;
        if next == 0 || next == self.mask {
            return None;
        }
        self.current = next;
        Some(VertexSet(next))
    }
}

pub struct NonemptySubsets {
    mask: u64,
    current: u64,
    done: bool,
}

impl Iterator for NonemptySubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let next = self.current.wrapping_sub(self.mask) & self.mask;
        if next == self.mask {
            self.done = true;
        }
        self.current = next;
        Some(VertexSet(next))
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a u32>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// Lexicographic order on the increasing element lists, so `{1,2} < {1,2,3} < {1,3} < {2}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}
