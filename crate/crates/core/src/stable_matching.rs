//! Deferred acceptance over incomplete preference lists.
//!
//! Rows propose, columns accept or hold. A pair that is not allowed never
//! matches and never blocks. Ranks are compared only relative to each other:
//! lower means more preferred.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub type Rank = i64;

pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("pair ({row}, {col}) outside a {num_rows}x{num_cols} profile")]
    PairOutOfRange { row: usize, col: usize, num_rows: usize, num_cols: usize },
    #[error("pair ({row}, {col}) listed twice")]
    DuplicatePair { row: usize, col: usize },
    #[error("row {row} gives rank {rank} to two columns")]
    RowRankCollision { row: usize, rank: Rank },
    #[error("column {col} gives rank {rank} to two rows")]
    ColRankCollision { col: usize, rank: Rank },
    #[error("matching uses pair ({row}, {col}), which is not allowed")]
    PairNotAllowed { row: usize, col: usize },
    #[error("row {0} is matched twice")]
    RowMatchedTwice(usize),
    #[error("column {0} is matched twice")]
    ColMatchedTwice(usize),
    #[error("{size} allowed pairs exceed the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
}

/// An allowed pair together with how each side ranks the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankedPair {
    pub row: usize,
    pub col: usize,
    pub row_rank: Rank,
    pub col_rank: Rank,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceProfile {
    num_rows: usize,
    num_cols: usize,
    /// Allowed pairs keyed row-major, valued `(row_rank, col_rank)`.
    ranks: BTreeMap<(usize, usize), (Rank, Rank)>,
}

impl PreferenceProfile {
    pub fn new(
        num_rows: usize,
        num_cols: usize,
        pairs: impl IntoIterator<Item = RankedPair>,
    ) -> Result<Self, MatchingError> {
        let mut ranks = BTreeMap::new();
        let mut row_seen = BTreeSet::new();
        let mut col_seen = BTreeSet::new();
        for RankedPair { row, col, row_rank, col_rank } in pairs {
            if row >= num_rows || col >= num_cols {
                return Err(MatchingError::PairOutOfRange { row, col, num_rows, num_cols });
            }
            if ranks.insert((row, col), (row_rank, col_rank)).is_some() {
                return Err(MatchingError::DuplicatePair { row, col });
            }
            if !row_seen.insert((row, row_rank)) {
                return Err(MatchingError::RowRankCollision { row, rank: row_rank });
            }
            if !col_seen.insert((col, col_rank)) {
                return Err(MatchingError::ColRankCollision { col, rank: col_rank });
            }
        }
        Ok(PreferenceProfile { num_rows, num_cols, ranks })
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn num_allowed(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_allowed(&self, row: usize, col: usize) -> bool {
        self.ranks.contains_key(&(row, col))
    }

    /// Allowed pairs in row-major order.
    pub fn allowed(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ranks.keys().copied()
    }

    pub fn row_rank(&self, row: usize, col: usize) -> Option<Rank> {
        self.ranks.get(&(row, col)).map(|r| r.0)
    }

    pub fn col_rank(&self, row: usize, col: usize) -> Option<Rank> {
        self.ranks.get(&(row, col)).map(|r| r.1)
    }

    /// Each row's allowed columns, most preferred first.
    fn row_preferences(&self) -> Vec<Vec<usize>> {
        let mut prefs = vec![Vec::new(); self.num_rows];
        for (&(row, col), &(rank, _)) in &self.ranks {
            prefs[row].push((rank, col));
        }
        prefs
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p.into_iter().map(|(_, col)| col).collect()
            })
            .collect()
    }
}

/// A set of pairs using each row and each column at most once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching {
    pairs: BTreeSet<(usize, usize)>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.pairs.contains(&(row, col))
    }

    pub fn partner_of_row(&self, row: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == row).map(|p| p.1)
    }

    pub fn partner_of_col(&self, col: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 == col).map(|p| p.0)
    }

    /// Checks the matching invariants against `p`.
    pub fn validate(&self, p: &PreferenceProfile) -> Result<(), MatchingError> {
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        for &(row, col) in &self.pairs {
            if !p.is_allowed(row, col) {
                return Err(MatchingError::PairNotAllowed { row, col });
            }
            if !rows.insert(row) {
                return Err(MatchingError::RowMatchedTwice(row));
            }
            if !cols.insert(col) {
                return Err(MatchingError::ColMatchedTwice(col));
            }
        }
        Ok(())
    }
}

impl FromIterator<(usize, usize)> for Matching {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Matching { pairs: iter.into_iter().collect() }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (r, c)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r},{c})")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeferredAcceptance {
    pub matching: Matching,
    pub proposals: usize,
}

/// Row-proposing deferred acceptance. The result is the row-optimal stable matching.
pub fn deferred_acceptance(p: &PreferenceProfile) -> Matching {
    deferred_acceptance_traced(p).matching
}

/// Same as [`deferred_acceptance`], also reporting the number of proposals made.
///
/// The lowest-numbered free row with an untried partner always proposes next.
pub fn deferred_acceptance_traced(p: &PreferenceProfile) -> DeferredAcceptance {
    let prefs = p.row_preferences();
    let mut next = vec![0usize; p.num_rows];
    let mut holder: Vec<Option<usize>> = vec![None; p.num_cols];
    let mut free: BTreeSet<usize> = (0..p.num_rows).filter(|&r| !prefs[r].is_empty()).collect();
    let mut proposals = 0;

    while let Some(row) = free.pop_first() {
        let col = prefs[row][next[row]];
        next[row] += 1;
        proposals += 1;
        let rejected = match holder[col] {
            None => {
                holder[col] = Some(row);
                None
            }
            Some(current) => {
                let rank = |r: usize| p.col_rank(r, col).expect("allowed pair");
                if rank(row) < rank(current) {
                    holder[col] = Some(row);
                    Some(current)
                } else {
                    Some(row)
                }
            }
        };
        if let Some(r) = rejected {
            if next[r] < prefs[r].len() {
                free.insert(r);
            }
        }
    }

    let matching = holder
        .iter()
        .enumerate()
        .filter_map(|(col, row)| row.map(|row| (row, col)))
        .collect();
    DeferredAcceptance { matching, proposals }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    /// First blocking pair in row-major order, if any.
    pub blocking_pair: Option<(usize, usize)>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.blocking_pair.is_none()
    }
}

pub fn is_stable(p: &PreferenceProfile, m: &Matching) -> Result<StabilityReport, MatchingError> {
    m.validate(p)?;
    let mut row_partner = vec![None; p.num_rows];
    let mut col_partner = vec![None; p.num_cols];
    for &(r, c) in m.pairs() {
        row_partner[r] = Some(c);
        col_partner[c] = Some(r);
    }
    Ok(StabilityReport { blocking_pair: first_blocking_pair(p, &row_partner, &col_partner) })
}

fn first_blocking_pair(
    p: &PreferenceProfile,
    row_partner: &[Option<usize>],
    col_partner: &[Option<usize>],
) -> Option<(usize, usize)> {
    p.ranks.iter().find_map(|(&(r, c), &(row_rank, col_rank))| {
        if row_partner[r] == Some(c) {
            return None;
        }
        let row_wants = row_partner[r].is_none_or(|c2| row_rank < p.ranks[&(r, c2)].0);
        let col_wants = col_partner[c].is_none_or(|r2| col_rank < p.ranks[&(r2, c)].1);
        (row_wants && col_wants).then_some((r, c))
    })
}

/// Every stable matching, found by scanning all subsets of allowed pairs.
///
/// Subsets are visited in increasing bitmask order, bit `i` standing for the
/// `i`-th allowed pair in row-major order.
pub fn enumerate_stable_matchings(
    p: &PreferenceProfile,
    cap: usize,
) -> Result<Vec<Matching>, MatchingError> {
    let pairs: Vec<(usize, usize)> = p.allowed().collect();
    if pairs.len() > cap.min(63) {
        return Err(MatchingError::CapExceeded { size: pairs.len(), cap: cap.min(63) });
    }
    let mut found = Vec::new();
    let mut row_partner = vec![None; p.num_rows];
    let mut col_partner = vec![None; p.num_cols];
    'subsets: for mask in 0u64..1 << pairs.len() {
        row_partner.iter_mut().for_each(|x| *x = None);
        col_partner.iter_mut().for_each(|x| *x = None);
        for (i, &(r, c)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if row_partner[r].is_some() || col_partner[c].is_some() {
                    continue 'subsets;
                }
                row_partner[r] = Some(c);
                col_partner[c] = Some(r);
            }
        }
        if first_blocking_pair(p, &row_partner, &col_partner).is_none() {
            found.push(
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &pair)| pair)
                    .collect(),
            );
        }
    }
    Ok(found)
}
