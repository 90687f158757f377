//! Vertex sets with a single-word fast path.
//!
//! Sets whose members are all below 64 live in a `u64` bitmask; anything
//! larger falls back to an ordered set. The representation is canonical, so
//! two sets with equal members always compare equal.

use std::collections::BTreeSet;
use std::fmt;

/// Dense 0-based vertex id.
pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum VertexSet {
    /// Members are exactly the set bits. Used whenever every member is < 64.
    Mask(u64),
    /// Members at or above 64 are present.
    Sparse(BTreeSet<Vertex>),
}

impl Default for VertexSet {
    fn default() -> Self {
        VertexSet::Mask(0)
    }
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet::Mask(mask)
    }

    /// `{0, 1, ..., n - 1}`
    pub fn full(n: usize) -> Self {
        if n <= 64 {
            VertexSet::Mask(low_bits(n))
        } else {
            VertexSet::Sparse((0..n).collect())
        }
    }

    /// The bitmask value, if every member is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self {
            VertexSet::Mask(m) => Some(*m),
            VertexSet::Sparse(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            VertexSet::Mask(m) => m.count_ones() as usize,
            VertexSet::Sparse(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            VertexSet::Mask(m) => *m == 0,
            VertexSet::Sparse(s) => s.is_empty(),
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match self {
            VertexSet::Mask(m) => v < 64 && m >> v & 1 == 1,
            VertexSet::Sparse(s) => s.contains(&v),
        }
    }

    /// Returns true if `v` was not already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        match self {
            VertexSet::Mask(m) if v < 64 => {
                let fresh = *m >> v & 1 == 0;
                *m |= 1 << v;
                fresh
            }
            VertexSet::Mask(m) => {
                let mut s: BTreeSet<Vertex> = mask_members(*m).collect();
                s.insert(v);
                *self = VertexSet::Sparse(s);
                true
            }
            VertexSet::Sparse(s) => s.insert(v),
        }
    }

    /// Returns true if `v` was present.
    pub fn remove(&mut self, v: Vertex) -> bool {
        let removed = match self {
            VertexSet::Mask(m) => {
                let present = v < 64 && *m >> v & 1 == 1;
                if present {
                    *m &= !(1 << v);
                }
                present
            }
            VertexSet::Sparse(s) => s.remove(&v),
        };
        if removed {
            self.normalize();
        }
        removed
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<Vertex> {
        match self {
            VertexSet::Mask(0) => None,
            VertexSet::Mask(m) => Some(63 - m.leading_zeros() as usize),
            VertexSet::Sparse(s) => s.last().copied(),
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        match self {
            VertexSet::Mask(m) => Iter::Mask(*m),
            VertexSet::Sparse(s) => Iter::Sparse(s.iter()),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        match (self, other) {
            (VertexSet::Mask(a), VertexSet::Mask(b)) => a & !b == 0,
            _ => self.iter().all(|v| other.contains(v)),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        match (self, other) {
            (VertexSet::Mask(a), VertexSet::Mask(b)) => VertexSet::Mask(a & !b),
            _ => self.iter().filter(|&v| !other.contains(v)).collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        match (self, other) {
            (VertexSet::Mask(a), VertexSet::Mask(b)) => VertexSet::Mask(a | b),
            _ => self.iter().chain(other.iter()).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    fn normalize(&mut self) {
        if let VertexSet::Sparse(s) = self {
            if s.last().is_none_or(|&v| v < 64) {
                let mask = s.iter().fold(0u64, |m, &v| m | 1 << v);
                *self = VertexSet::Mask(mask);
            }
        }
    }
}

/// Orders sets by their bitmask value (`sum of 2^v`), at any size.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (VertexSet::Mask(a), VertexSet::Mask(b)) => a.cmp(b),
            _ => self.to_vec().into_iter().rev().cmp(other.to_vec().into_iter().rev()),
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
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

pub enum Iter<'a> {
    Mask(u64),
    Sparse(std::collections::btree_set::Iter<'a, Vertex>),
}

impl Iterator for Iter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        match self {
            Iter::Mask(0) => None,
            Iter::Mask(m) => {
                let v = m.trailing_zeros() as usize;
                *m &= *m - 1;
                Some(v)
            }
            Iter::Sparse(it) => it.next().copied(),
        }
    }
}

/// Mask with the lowest `n` bits set; `n` may be 64.
pub(crate) fn low_bits(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_members(mut m: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}
