//! Vertex sets as fixed-width bit masks.

use std::fmt;

/// A set of vertices of a graph on at most 32 vertices, stored as a bit mask.
///
/// Bit `i` is vertex `i`. All solver and detector code trades in these masks;
/// set algebra is plain word arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// The full set `{0, .., order-1}`.
    #[inline]
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= 32);
        if order == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << order) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 32);
        VertexSet(1 << v)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < 32);
        self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 32);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 32);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within `{0, .., order-1}`.
    #[inline]
    pub fn complement_within(self, order: usize) -> Self {
        VertexSet(!self.0 & Self::full(order).0)
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending order.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{self}")
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

/// Ascending iterator over the members of a bit mask.
pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterates all subsets of the given size over `{0, .., order-1}` in
/// ascending numeric mask order (Gosper's hack). The first subset yielded
/// is therefore the numerically least mask of that cardinality.
pub fn subsets_of_size(order: usize, size: usize) -> SubsetIter {
    debug_assert!(order <= 32);
    if size > order {
        return SubsetIter { cur: 0, limit: 0, done: true };
    }
    if size == 0 {
        // The empty set once.
        return SubsetIter { cur: 0, limit: 0, done: false };
    }
    let first = if size == 32 { u32::MAX } else { (1u32 << size) - 1 };
    SubsetIter {
        cur: first,
        limit: VertexSet::full(order).bits(),
        done: false,
    }
}

pub struct SubsetIter {
    cur: u32,
    limit: u32,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            // Empty-set case: yield once.
            self.done = true;
            return Some(VertexSet::EMPTY);
        }
        if out & !self.limit != 0 {
            self.done = true;
            return None;
        }
        // Gosper's hack: next larger mask with the same popcount.
        let c = out & out.wrapping_neg();
        let r = out.wrapping_add(c);
        if c == 0 || r == 0 {
            self.done = true;
        } else {
            self.cur = (((out ^ r) >> 2) / c) | r;
        }
        Some(VertexSet(out))
    }
}
