//! Labelings of diagrams and per-cell move counts along chains.
//!
//! The standard labeling of a descendant `D` of `D0` gives each column of `D`
//! the rows that column occupies in `D0`, assigned bottom to top. A cell of
//! `D0` at `(r, c)` is then followed through a chain as "the cell of column
//! `c` labelled `r`".

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{Cell, Chain, Diagram};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("column weights differ, so no column-equivalent labeling exists")]
    ColumnWeightMismatch,
    #[error("labeling is missing cell {0}")]
    MissingLabel(Cell),
    #[error("labeling has cell {0} that is not in the diagram")]
    ExtraLabel(Cell),
    #[error("label of cell {0} must be positive")]
    ZeroLabel(Cell),
}

/// A diagram with a positive label on every cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    diagram: Diagram,
    labels: BTreeMap<Cell, u32>,
}

impl Tableau {
    pub fn new(diagram: Diagram, labels: BTreeMap<Cell, u32>) -> Result<Self, LabelingError> {
        if let Some(&cell) = labels.keys().find(|c| !diagram.contains(**c)) {
            return Err(LabelingError::ExtraLabel(cell));
        }
        if let Some(&cell) = diagram.cells().iter().find(|c| !labels.contains_key(c)) {
            return Err(LabelingError::MissingLabel(cell));
        }
        if let Some((&cell, _)) = labels.iter().find(|(_, &l)| l == 0) {
            return Err(LabelingError::ZeroLabel(cell));
        }
        Ok(Self { diagram, labels })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn labels(&self) -> &BTreeMap<Cell, u32> {
        &self.labels
    }

    pub fn label(&self, cell: Cell) -> Option<u32> {
        self.labels.get(&cell).copied()
    }

    /// Labels of column `col`, bottom to top.
    pub fn column_labels(&self, col: u32) -> Vec<u32> {
        self.diagram.column(col).iter().map(|c| self.labels[c]).collect()
    }

    /// Labels strictly increase up every column.
    pub fn is_strict(&self) -> bool {
        self.diagram.columns().all(|(_, column)| {
            column.windows(2).all(|w| self.labels[&w[0]] < self.labels[&w[1]])
        })
    }

    /// Every label is at least its cell's row.
    pub fn is_flagged(&self) -> bool {
        self.labels.iter().all(|(c, &l)| l >= c.row)
    }
}

/// Each cell labelled by its own row.
pub fn super_standard(d: &Diagram) -> Tableau {
    Tableau {
        diagram: d.clone(),
        labels: d.cells().iter().map(|&c| (c, c.row)).collect(),
    }
}

/// The unique strict labeling of `d` column-equivalent to the super-standard
/// labeling of `origin`.
pub fn standard_labeling(d: &Diagram, origin: &Diagram) -> Result<Tableau, LabelingError> {
    if d.column_weight() != origin.column_weight() {
        return Err(LabelingError::ColumnWeightMismatch);
    }
    let mut labels = BTreeMap::new();
    for (col, column) in d.columns() {
        for (cell, src) in column.iter().zip(origin.column(col)) {
            labels.insert(*cell, src.row);
        }
    }
    Ok(Tableau {
        diagram: d.clone(),
        labels,
    })
}

/// Standard labels carried forward one move at a time.
///
/// A move from `(r, c)` to `(r', c)` jumps over the occupied run
/// `r'+1 ..= r-1`; keeping the column strict shifts the labels of that run
/// and of the moved cell down by one row each. The moved cell's label thus
/// ends at row `r - 1`.
#[derive(Clone, Debug)]
pub struct LabelTracker {
    current: Tableau,
}

impl LabelTracker {
    pub fn new(origin: &Diagram) -> Self {
        Self {
            current: super_standard(origin),
        }
    }

    pub fn tableau(&self) -> &Tableau {
        &self.current
    }

    /// Applies the move at `row`; returns the label of the moved cell, or
    /// `None` for a trivial move.
    pub fn apply(&mut self, row: u32) -> Option<u32> {
        let (next, record) = self.current.diagram.kohnert_move(row);
        let (source, target) = (record.source()?, record.target()?);
        let col = source.col;
        let labels = &mut self.current.labels;
        let moved = labels[&source];
        let run: Vec<u32> = (target.row + 1..=source.row)
            .map(|r| labels.remove(&Cell::new(r, col)).expect("run is occupied"))
            .collect();
        for (offset, label) in run.into_iter().enumerate() {
            labels.insert(Cell::new(target.row + offset as u32, col), label);
        }
        self.current.diagram = next;
        Some(moved)
    }

    /// Where the cell of the origin at `original` currently sits.
    pub fn position_of(&self, original: Cell) -> Option<Cell> {
        self.current
            .diagram
            .column(original.col)
            .iter()
            .find(|c| self.current.labels[c] == original.row)
            .copied()
    }
}

/// Standard labelings of every diagram of `chain`, obtained by tracking.
pub fn tracked_labelings(chain: &Chain) -> Vec<Tableau> {
    let mut tracker = LabelTracker::new(chain.start());
    let mut out = vec![tracker.tableau().clone()];
    for m in chain.moves() {
        tracker.apply(m.row()).expect("chain moves are nontrivial");
        out.push(tracker.tableau().clone());
    }
    out
}

/// For each cell of `chain.start()`, how many moves of the chain displaced
/// that cell's standard label. The counts sum to the chain length.
pub fn move_counts(chain: &Chain) -> BTreeMap<Cell, usize> {
    let mut counts: BTreeMap<Cell, usize> = chain.start().cells().iter().map(|&c| (c, 0)).collect();
    let mut tracker = LabelTracker::new(chain.start());
    for m in chain.moves() {
        let label = tracker.apply(m.row()).expect("chain moves are nontrivial");
        let col = m.source().expect("nontrivial").col;
        *counts.get_mut(&Cell::new(label, col)).expect("labels come from the start") += 1;
    }
    counts
}
