//! Kernels of induced subgraphs and the hereditary kernel property.
//!
//! A kernel of `S` is an independent `S' ⊆ S` such that every vertex of
//! `S - S'` has an out-edge into `S'`. Only edges with both endpoints in `S`
//! count; `S' = S` is allowed when `S` itself is independent.
//!
//! Two independent searches live here: an exhaustive scan in increasing
//! bitmask order ([`find_kernel_bruteforce`]) and a pruned backtracking
//! search ([`find_kernel_search`]) used for the property-X audit.

use rayon::prelude::*;
use thiserror::Error;

use crate::digraph::{Digraph, GraphError};
use crate::vertex_set::{low_bits, mask_members, Vertex, VertexSet};

pub const DEFAULT_KERNEL_CAP: usize = 24;
pub const DEFAULT_PROPERTY_X_CAP: usize = 20;

/// Bitmask enumeration needs the subset to fit in a machine word.
const MAX_MASK_BITS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("candidate kernel {candidate} is not contained in {set}")]
    NotSubset { candidate: VertexSet, set: VertexSet },
    #[error("{size} vertices exceed the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyXReport {
    pub holds: bool,
    /// First subset, in increasing bitmask order, that has no kernel.
    pub witness: Option<VertexSet>,
    /// Subsets examined, up to and including the witness.
    pub subsets_checked: u64,
}

pub fn is_kernel(g: &Digraph, s: &VertexSet, s_prime: &VertexSet) -> Result<bool, KernelError> {
    g.check_set(s)?;
    if !s_prime.is_subset(s) {
        return Err(KernelError::NotSubset { candidate: s_prime.clone(), set: s.clone() });
    }
    Ok(is_kernel_unchecked(g, s, s_prime))
}

pub(crate) fn is_kernel_unchecked(g: &Digraph, s: &VertexSet, s_prime: &VertexSet) -> bool {
    s.iter().all(|v| {
        let mut into_kernel = g.out_neighbors(v).iter().filter(|&&w| s_prime.contains(w));
        if s_prime.contains(v) {
            into_kernel.next().is_none()
        } else {
            into_kernel.next().is_some()
        }
    })
}

/// `s` as a dense index space: bit `i` stands for the `i`-th smallest member.
/// The relabeling is order preserving, so local and global bitmask orders agree.
struct Compact {
    members: Vec<Vertex>,
    out: Vec<u64>,
    adj: Vec<u64>,
}

impl Compact {
    fn new(g: &Digraph, s: &VertexSet) -> Self {
        let members = s.to_vec();
        debug_assert!(members.len() <= 64);
        let mut out = vec![0u64; members.len()];
        let mut adj = vec![0u64; members.len()];
        for (i, &v) in members.iter().enumerate() {
            for w in g.out_neighbors(v) {
                if let Ok(j) = members.binary_search(w) {
                    out[i] |= 1 << j;
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Compact { members, out, adj }
    }

    fn full(&self) -> u64 {
        low_bits(self.members.len())
    }

    fn lift(&self, local: u64) -> VertexSet {
        mask_members(local).map(|i| self.members[i]).collect()
    }
}

fn is_kernel_mask(out: &[u64], s: u64, t: u64) -> bool {
    mask_members(s).all(|i| {
        let hits = out[i] & t;
        if t >> i & 1 == 1 {
            hits == 0
        } else {
            hits != 0
        }
    })
}

/// Smallest kernel of `s` by bitmask value, or `None` if `s` has none.
pub fn find_kernel_bruteforce(g: &Digraph, s: &VertexSet) -> Result<Option<VertexSet>, KernelError> {
    find_kernel_bruteforce_with_cap(g, s, DEFAULT_KERNEL_CAP)
}

pub fn find_kernel_bruteforce_with_cap(
    g: &Digraph,
    s: &VertexSet,
    cap: usize,
) -> Result<Option<VertexSet>, KernelError> {
    let c = compact_within_cap(g, s, cap)?;
    let full = c.full();
    let found = (0..=full).find(|&t| is_kernel_mask(&c.out, full, t));
    Ok(found.map(|t| c.lift(t)))
}

/// Every kernel of `s`, in increasing bitmask order.
pub fn enumerate_kernels_bruteforce(
    g: &Digraph,
    s: &VertexSet,
    cap: usize,
) -> Result<Vec<VertexSet>, KernelError> {
    let c = compact_within_cap(g, s, cap)?;
    let full = c.full();
    Ok((0..=full)
        .filter(|&t| is_kernel_mask(&c.out, full, t))
        .map(|t| c.lift(t))
        .collect())
}

fn compact_within_cap(g: &Digraph, s: &VertexSet, cap: usize) -> Result<Compact, KernelError> {
    g.check_set(s)?;
    let size = s.len();
    if size > cap.min(MAX_MASK_BITS) {
        return Err(KernelError::CapExceeded { size, cap: cap.min(MAX_MASK_BITS) });
    }
    Ok(Compact::new(g, s))
}

/// Some kernel of `s` via pruned backtracking; not necessarily the smallest.
/// Handles up to 64 members.
pub fn find_kernel_search(g: &Digraph, s: &VertexSet) -> Result<Option<VertexSet>, KernelError> {
    g.check_set(s)?;
    if s.len() > 64 {
        return Err(KernelError::CapExceeded { size: s.len(), cap: 64 });
    }
    let c = Compact::new(g, s);
    Ok(search(&c.out, &c.adj, c.full(), 0, 0).map(|t| c.lift(t)))
}

/// Backtracking over "in kernel" / "excluded" decisions.
///
/// Neighbors of kernel members are excluded eagerly, so the kernel stays
/// independent. An excluded vertex is hopeless once none of its out-neighbors
/// is in the kernel or still undecided.
fn search(out: &[u64], adj: &[u64], s: u64, kernel: u64, excluded: u64) -> Option<u64> {
    let undecided = s & !kernel & !excluded;
    if mask_members(excluded).any(|x| out[x] & s & (kernel | undecided) == 0) {
        return None;
    }
    if undecided == 0 {
        return Some(kernel);
    }
    let v = undecided.trailing_zeros() as usize;
    let bit = 1u64 << v;
    search(out, adj, s, kernel | bit, excluded | (adj[v] & undecided & !bit))
        .or_else(|| search(out, adj, s, kernel, excluded | bit))
}

/// Checks that every vertex subset of `g` has a kernel, scanning subsets in
/// increasing bitmask order. The scan is split across threads; the reported
/// witness is always the smallest failing subset.
pub fn has_property_x(g: &Digraph, cap: usize) -> Result<PropertyXReport, KernelError> {
    let n = g.num_vertices();
    if n > cap.min(MAX_MASK_BITS) {
        return Err(KernelError::CapExceeded { size: n, cap: cap.min(MAX_MASK_BITS) });
    }
    let mut out = vec![0u64; n];
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        out[u] |= 1 << v;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = low_bits(n);
    let witness = (0..=full)
        .into_par_iter()
        .find_first(|&s| search(&out, &adj, s, 0, 0).is_none());
    Ok(match witness {
        Some(s) => PropertyXReport {
            holds: false,
            witness: Some(VertexSet::from_mask(s)),
            subsets_checked: s + 1,
        },
        None => PropertyXReport { holds: true, witness: None, subsets_checked: full + 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Digraph {
        Digraph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn kernel_definition() {
        let g = cycle(3);
        assert_eq!(is_kernel(&g, &set(&[1]), &set(&[1])), Ok(true));
        assert_eq!(is_kernel(&g, &VertexSet::full(3), &set(&[0])), Ok(false));
        assert!(matches!(
            is_kernel(&g, &set(&[0]), &set(&[1])),
            Err(KernelError::NotSubset { .. })
        ));
        // the n = 2 square: (0,0)->(0,1)->(1,1)->(1,0)->(0,0) as ids 0->1->3->2->0
        let sq = Digraph::new(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(is_kernel(&sq, &VertexSet::full(4), &set(&[0, 3])), Ok(true));
        assert_eq!(is_kernel(&sq, &VertexSet::full(4), &set(&[1, 2])), Ok(true));
    }

    #[test]
    fn bruteforce_examples() {
        let g = cycle(3);
        assert_eq!(find_kernel_bruteforce(&g, &VertexSet::new()), Ok(Some(VertexSet::new())));
        let edge = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(find_kernel_bruteforce(&edge, &VertexSet::full(2)), Ok(Some(set(&[1]))));
        assert_eq!(find_kernel_bruteforce(&g, &VertexSet::full(3)), Ok(None));
        assert_eq!(find_kernel_search(&g, &VertexSet::full(3)), Ok(None));
    }

    #[test]
    fn caps_are_errors() {
        let g = Digraph::new(30, []).unwrap();
        assert_eq!(
            find_kernel_bruteforce(&g, &VertexSet::full(25)),
            Err(KernelError::CapExceeded { size: 25, cap: 24 })
        );
        assert!(find_kernel_bruteforce_with_cap(&g, &VertexSet::full(25), 25).is_ok());
        assert!(matches!(has_property_x(&g, 20), Err(KernelError::CapExceeded { .. })));
    }

    #[test]
    fn cycles() {
        for k in 3..=10 {
            let kernels = enumerate_kernels_bruteforce(&cycle(k), &VertexSet::full(k), 24).unwrap();
            if k % 2 == 1 {
                assert!(kernels.is_empty(), "C{k}");
            } else {
                let evens: VertexSet = (0..k).step_by(2).collect();
                let odds: VertexSet = (1..k).step_by(2).collect();
                assert_eq!(kernels, vec![evens, odds], "C{k}");
            }
        }
    }

    #[test]
    fn property_x_examples() {
        let single = Digraph::new(1, []).unwrap();
        let r = has_property_x(&single, 20).unwrap();
        assert!(r.holds && r.witness.is_none());
        assert_eq!(r.subsets_checked, 2);

        let r = has_property_x(&cycle(3), 20).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(VertexSet::full(3)));
        assert_eq!(r.subsets_checked, 8);

        let sq = Digraph::new(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        let r = has_property_x(&sq, 20).unwrap();
        assert!(r.holds);
        assert_eq!(r.subsets_checked, 16);
    }

    #[test]
    fn large_ids_compact() {
        // members above 64 go through the sparse path
        let g = Digraph::new(100, [(70, 90), (90, 99)]).unwrap();
        let s = set(&[70, 90, 99]);
        assert_eq!(find_kernel_bruteforce(&g, &s), Ok(Some(set(&[70, 99]))));
        let k = find_kernel_search(&g, &s).unwrap().unwrap();
        assert_eq!(is_kernel(&g, &s, &k), Ok(true));
    }
}
