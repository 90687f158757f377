//! JSON instance/solution files and the seeded instance generator.
//!
//! ```json
//! {"n":2,"lists":[[["a","b"],["a","b"]],[["a","b"],["a","b"]]]}
//! {"n":2,"grid":[["b","a"],["a","b"]]}
//! ```

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::ColorId;
use crate::galvin::{DinitzError, DinitzInstance, DuplicateLabel, Grid};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{what}: expected {expected} entries, found {found}")]
    Shape { what: String, expected: usize, found: usize },
    #[error(transparent)]
    Instance(#[from] DinitzError),
    #[error("cannot draw {list_size} distinct colors from a universe of {universe_size}")]
    Unsatisfiable { universe_size: usize, list_size: usize },
    #[error("list size {list_size} is below n = {n}")]
    Undersized { n: usize, list_size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorMeta {
    pub seed: u64,
    pub universe_size: usize,
    pub list_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub lists: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<GeneratorMeta>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub n: usize,
    pub grid: Vec<Vec<String>>,
}

fn check_square<T>(what: &str, n: usize, rows: &[Vec<T>]) -> Result<(), FormatError> {
    if rows.len() != n {
        return Err(FormatError::Shape { what: what.to_string(), expected: n, found: rows.len() });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(FormatError::Shape { what: format!("{what} row {r}"), expected: n, found: row.len() });
        }
    }
    Ok(())
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let file: InstanceFile = serde_json::from_str(text)?;
        check_square("lists", file.n, &file.lists)?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string(self).expect("instance serializes");
        text.push('\n');
        text
    }

    /// Interns the labels; in-cell duplicates are dropped and returned.
    pub fn to_instance(&self) -> Result<(DinitzInstance, Vec<DuplicateLabel>), FormatError> {
        check_square("lists", self.n, &self.lists)?;
        let lists = self.lists.iter().flatten().cloned().collect();
        Ok(DinitzInstance::from_labels(self.n, lists)?)
    }

    pub fn from_instance(inst: &DinitzInstance) -> Self {
        let n = inst.n();
        let flat = inst.label_lists();
        let lists = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[_]>::to_vec).collect() };
        InstanceFile { n, lists, meta: None }
    }
}

impl SolutionFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let file: SolutionFile = serde_json::from_str(text)?;
        check_square("grid", file.n, &file.grid)?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string(self).expect("solution serializes");
        text.push('\n');
        text
    }

    pub fn from_grid(inst: &DinitzInstance, grid: &Grid) -> Self {
        SolutionFile { n: grid.n(), grid: grid.label_rows(inst) }
    }

    /// Maps labels to the instance's color ids. Labels the instance has never
    /// seen get fresh ids past its table, so they fail membership checks.
    /// Returns the grid and the extended label table.
    pub fn to_grid(&self, inst: &DinitzInstance) -> Result<(Grid, Vec<String>), FormatError> {
        check_square("grid", self.n, &self.grid)?;
        let mut labels = inst.labels().to_vec();
        let mut cells = Vec::with_capacity(self.n * self.n);
        for label in self.grid.iter().flatten() {
            let id = match labels.iter().position(|l| l == label) {
                Some(i) => i,
                None => {
                    labels.push(label.clone());
                    labels.len() - 1
                }
            };
            cells.push(id as ColorId);
        }
        Ok((Grid::new(self.n, cells)?, labels))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    pub n: usize,
    pub universe_size: usize,
    pub list_size: usize,
    pub seed: u64,
    pub allow_undersized: bool,
}

pub fn color_label(i: usize) -> String {
    format!("c{i}")
}

/// Each cell gets a uniformly random `list_size`-subset of `c0..c{universe-1}`,
/// sorted by index. The stream is ChaCha8 seeded from `seed`, so output is
/// reproducible across platforms.
pub fn generate_instance(params: GeneratorParams) -> Result<InstanceFile, FormatError> {
    let GeneratorParams { n, universe_size, list_size, seed, allow_undersized } = params;
    if list_size > universe_size || (list_size == 0 && n > 0) {
        return Err(FormatError::Unsatisfiable { universe_size, list_size });
    }
    if list_size < n && !allow_undersized {
        return Err(FormatError::Undersized { n, list_size });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let mut picked = sample(&mut rng, universe_size, list_size).into_vec();
                    picked.sort_unstable();
                    picked.into_iter().map(color_label).collect()
                })
                .collect()
        })
        .collect();
    Ok(InstanceFile { n, lists, meta: Some(GeneratorMeta { seed, universe_size, list_size }) })
}
