//! Dinitz instances: an `n x n` grid of color lists, each of size at least `n`,
//! from which we pick a generalized Latin square.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::digraph::{ColorId, ListAssignment};

use super::coloring::{list_color_with_kernels_traced, ColoringError, ColoringOptions, ColoringTrace};
use super::latin::{build_square_orientation, CellIndexMap};
use super::oracle::SquareKernelOracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DinitzError {
    #[error("expected {expected} cell lists, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("cell ({row}, {col}) has an empty list")]
    EmptyList { row: usize, col: usize },
    #[error("cell ({row}, {col}) has {size} colors, fewer than n = {n}")]
    UndersizedList { row: usize, col: usize, size: usize, n: usize },
    #[error("grid is {grid}x{grid} but the instance is {instance}x{instance}")]
    DimensionMismatch { instance: usize, grid: usize },
    #[error("solver defect: {0}")]
    Solver(#[from] ColoringError),
}

/// Label `label` appeared more than once in the list of cell `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateLabel {
    pub row: usize,
    pub col: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DinitzInstance {
    n: usize,
    lists: Vec<BTreeSet<ColorId>>,
    /// Label of color id `i` is `labels[i]`.
    labels: Vec<String>,
}

impl DinitzInstance {
    /// Interns string labels in first-appearance row-major order. Repeated
    /// labels within a cell are dropped and reported.
    pub fn from_labels(
        n: usize,
        lists: Vec<Vec<String>>,
    ) -> Result<(Self, Vec<DuplicateLabel>), DinitzError> {
        check_shape(n, lists.len())?;
        let mut ids: HashMap<String, ColorId> = HashMap::new();
        let mut labels = Vec::new();
        let mut duplicates = Vec::new();
        let mut interned = Vec::with_capacity(lists.len());
        for (cell, list) in lists.into_iter().enumerate() {
            let mut set = BTreeSet::new();
            for label in list {
                let id = *ids.entry(label.clone()).or_insert_with(|| {
                    labels.push(label.clone());
                    (labels.len() - 1) as ColorId
                });
                if !set.insert(id) {
                    duplicates.push(DuplicateLabel { row: cell / n, col: cell % n, label });
                }
            }
            interned.push(set);
        }
        let inst = DinitzInstance { n, lists: interned, labels };
        inst.check_nonempty()?;
        Ok((inst, duplicates))
    }

    /// Uses the ids themselves as colors; each id is labeled by its decimal form.
    pub fn from_color_ids(n: usize, lists: Vec<BTreeSet<ColorId>>) -> Result<Self, DinitzError> {
        check_shape(n, lists.len())?;
        let top = lists.iter().filter_map(|l| l.last()).max().map_or(0, |&m| m as usize + 1);
        let labels = (0..top).map(|i| i.to_string()).collect();
        let inst = DinitzInstance { n, lists, labels };
        inst.check_nonempty()?;
        Ok(inst)
    }

    fn check_nonempty(&self) -> Result<(), DinitzError> {
        match self.lists.iter().position(BTreeSet::is_empty) {
            Some(cell) => Err(DinitzError::EmptyList { row: cell / self.n, col: cell % self.n }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn list(&self, row: usize, col: usize) -> &BTreeSet<ColorId> {
        &self.lists[row * self.n + col]
    }

    /// Cell lists in row-major order.
    pub fn lists(&self) -> &[BTreeSet<ColorId>] {
        &self.lists
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, color: ColorId) -> Option<&str> {
        self.labels.get(color as usize).map(String::as_str)
    }

    pub fn color_id(&self, label: &str) -> Option<ColorId> {
        self.labels.iter().position(|l| l == label).map(|i| i as ColorId)
    }

    /// Lists as labels, row-major.
    pub fn label_lists(&self) -> Vec<Vec<String>> {
        self.lists
            .iter()
            .map(|l| l.iter().map(|&c| self.labels[c as usize].clone()).collect())
            .collect()
    }

    /// First cell, row-major, whose list is shorter than `n`.
    pub fn first_undersized(&self) -> Option<(usize, usize, usize)> {
        self.lists
            .iter()
            .position(|l| l.len() < self.n)
            .map(|cell| (cell / self.n, cell % self.n, self.lists[cell].len()))
    }
}

fn check_shape(n: usize, found: usize) -> Result<(), DinitzError> {
    if found == n * n {
        Ok(())
    } else {
        Err(DinitzError::ShapeMismatch { expected: n * n, found })
    }
}

/// Chosen color ids, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    n: usize,
    cells: Vec<ColorId>,
}

impl Grid {
    pub fn new(n: usize, cells: Vec<ColorId>) -> Result<Self, DinitzError> {
        check_shape(n, cells.len())?;
        Ok(Grid { n, cells })
    }

    pub fn from_rows(rows: &[Vec<ColorId>]) -> Result<Self, DinitzError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(DinitzError::ShapeMismatch { expected: n, found: bad.len() });
        }
        Ok(Grid { n, cells: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> ColorId {
        self.cells[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<ColorId>> {
        if self.n == 0 {
            return Vec::new();
        }
        self.cells.chunks(self.n).map(<[ColorId]>::to_vec).collect()
    }

    /// Grid entries mapped back to the instance's labels.
    pub fn label_rows(&self, inst: &DinitzInstance) -> Vec<Vec<String>> {
        self.rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| inst.label(c).map_or_else(|| format!("#{c}"), str::to_string))
                    .collect()
            })
            .collect()
    }
}

/// Outcome of [`verify_generalized_latin`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatinReport {
    Valid,
    RowRepeat { row: usize, cols: (usize, usize), color: ColorId },
    ColumnRepeat { col: usize, rows: (usize, usize), color: ColorId },
    NotInList { row: usize, col: usize, color: ColorId },
}

impl LatinReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, LatinReport::Valid)
    }
}

/// Checks rows, then columns, then list membership; reports the first failure.
pub fn verify_generalized_latin(inst: &DinitzInstance, grid: &Grid) -> Result<LatinReport, DinitzError> {
    let n = inst.n;
    if grid.n != n {
        return Err(DinitzError::DimensionMismatch { instance: n, grid: grid.n });
    }
    for row in 0..n {
        if let Some((a, b)) = first_repeat((0..n).map(|c| grid.get(row, c))) {
            return Ok(LatinReport::RowRepeat { row, cols: (a, b), color: grid.get(row, a) });
        }
    }
    for col in 0..n {
        if let Some((a, b)) = first_repeat((0..n).map(|r| grid.get(r, col))) {
            return Ok(LatinReport::ColumnRepeat { col, rows: (a, b), color: grid.get(a, col) });
        }
    }
    for row in 0..n {
        for col in 0..n {
            let color = grid.get(row, col);
            if !inst.list(row, col).contains(&color) {
                return Ok(LatinReport::NotInList { row, col, color });
            }
        }
    }
    Ok(LatinReport::Valid)
}

/// Positions of the earliest second occurrence and its first occurrence.
fn first_repeat(values: impl Iterator<Item = ColorId>) -> Option<(usize, usize)> {
    let mut seen = HashMap::new();
    values.enumerate().find_map(|(i, v)| seen.insert(v, i).map(|first| (first, i)))
}

pub fn solve_dinitz(inst: &DinitzInstance) -> Result<Grid, DinitzError> {
    solve_dinitz_traced(inst, ColoringOptions::default()).map(|(grid, _)| grid)
}

/// Colors the Latin-square orientation of the grid with the stable-matching
/// kernel oracle. Lists shorter than `n` are rejected up front.
pub fn solve_dinitz_traced(
    inst: &DinitzInstance,
    options: ColoringOptions,
) -> Result<(Grid, ColoringTrace), DinitzError> {
    let n = inst.n;
    if let Some((row, col, size)) = inst.first_undersized() {
        return Err(DinitzError::UndersizedList { row, col, size, n });
    }
    let g = build_square_orientation(n);
    let lists = ListAssignment::new(inst.lists.clone());
    let (coloring, trace) = list_color_with_kernels_traced(&g, &lists, &SquareKernelOracle { n }, options)?;
    let cells = CellIndexMap::new(n);
    let cells = (0..cells.num_cells())
        .map(|v| coloring.get(v).expect("engine returns a complete coloring"))
        .collect();
    Ok((Grid { n, cells }, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(n: usize, colors: &[ColorId]) -> DinitzInstance {
        let list: BTreeSet<ColorId> = colors.iter().copied().collect();
        DinitzInstance::from_color_ids(n, vec![list; n * n]).unwrap()
    }

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn n1() {
        let (inst, dups) = DinitzInstance::from_labels(1, vec![strings(&["x"])]).unwrap();
        assert!(dups.is_empty());
        let grid = solve_dinitz(&inst).unwrap();
        assert_eq!(grid.label_rows(&inst), vec![strings(&["x"])]);
    }

    #[test]
    fn n2_trace() {
        let inst = ids(2, &[1, 2]);
        let grid = solve_dinitz(&inst).unwrap();
        assert_eq!(grid.rows(), vec![vec![2, 1], vec![1, 2]]);
        assert_eq!(grid.label_rows(&inst), vec![strings(&["2", "1"]), strings(&["1", "2"])]);
        assert_eq!(verify_generalized_latin(&inst, &grid), Ok(LatinReport::Valid));
    }

    #[test]
    fn n3_is_latin() {
        let inst = ids(3, &[0, 1, 2]);
        let grid = solve_dinitz(&inst).unwrap();
        assert!(verify_generalized_latin(&inst, &grid).unwrap().is_valid());
        for i in 0..3 {
            let row: BTreeSet<_> = (0..3).map(|c| grid.get(i, c)).collect();
            let col: BTreeSet<_> = (0..3).map(|r| grid.get(r, i)).collect();
            assert_eq!(row.len(), 3);
            assert_eq!(col.len(), 3);
        }
    }

    #[test]
    fn n0_is_empty() {
        let inst = DinitzInstance::from_color_ids(0, vec![]).unwrap();
        let grid = solve_dinitz(&inst).unwrap();
        assert_eq!(grid.n(), 0);
        assert!(grid.rows().is_empty());
        assert!(verify_generalized_latin(&inst, &grid).unwrap().is_valid());
    }

    #[test]
    fn interning_is_first_appearance() {
        let lists = vec![strings(&["b", "a", "b"]), strings(&["c", "a"]), strings(&["a"]), strings(&["d"])];
        let (inst, dups) = DinitzInstance::from_labels(2, lists).unwrap();
        assert_eq!(inst.labels(), &strings(&["b", "a", "c", "d"])[..]);
        assert_eq!(dups, vec![DuplicateLabel { row: 0, col: 0, label: "b".into() }]);
        assert_eq!(inst.color_id("c"), Some(2));
        assert_eq!(inst.label_lists()[0], strings(&["b", "a"]));

        let (inst, _) = DinitzInstance::from_labels(2, vec![strings(&["a", "b"]); 4]).unwrap();
        let grid = solve_dinitz(&inst).unwrap();
        assert_eq!(grid.label_rows(&inst), vec![strings(&["b", "a"]), strings(&["a", "b"])]);
    }

    #[test]
    fn instance_errors() {
        assert_eq!(
            DinitzInstance::from_color_ids(2, vec![BTreeSet::from([1]); 3]),
            Err(DinitzError::ShapeMismatch { expected: 4, found: 3 })
        );
        let mut lists = vec![BTreeSet::from([1, 2]); 4];
        lists[3].clear();
        assert_eq!(
            DinitzInstance::from_color_ids(2, lists),
            Err(DinitzError::EmptyList { row: 1, col: 1 })
        );
        let mut lists = vec![BTreeSet::from([1, 2, 3]); 9];
        lists[5] = BTreeSet::from([1, 2]);
        let inst = DinitzInstance::from_color_ids(3, lists).unwrap();
        assert_eq!(
            solve_dinitz(&inst),
            Err(DinitzError::UndersizedList { row: 1, col: 2, size: 2, n: 3 })
        );
    }

    #[test]
    fn oversized_lists_are_fine() {
        let inst = ids(3, &[0, 1, 2, 3, 4]);
        let grid = solve_dinitz(&inst).unwrap();
        assert!(verify_generalized_latin(&inst, &grid).unwrap().is_valid());
    }

    #[test]
    fn verifier_reports() {
        let inst = ids(2, &[1, 2]);
        let g = |rows: &[Vec<ColorId>]| Grid::from_rows(rows).unwrap();
        assert_eq!(
            verify_generalized_latin(&inst, &g(&[vec![1, 1], vec![2, 2]])),
            Ok(LatinReport::RowRepeat { row: 0, cols: (0, 1), color: 1 })
        );
        assert_eq!(
            verify_generalized_latin(&inst, &g(&[vec![1, 2], vec![1, 2]])),
            Ok(LatinReport::ColumnRepeat { col: 0, rows: (0, 1), color: 1 })
        );
        assert_eq!(
            verify_generalized_latin(&inst, &g(&[vec![9, 1], vec![1, 2]])),
            Ok(LatinReport::NotInList { row: 0, col: 0, color: 9 })
        );
        assert_eq!(
            verify_generalized_latin(&inst, &g(&[vec![1]])),
            Err(DinitzError::DimensionMismatch { instance: 2, grid: 1 })
        );
        assert!(Grid::from_rows(&[vec![1, 2], vec![1]]).is_err());
    }
}
