//! Diagrams, Kohnert moves, and chains of nontrivial moves.
//!
//! A [`Diagram`] is a finite set of cells at positive `(row, col)` positions,
//! rows numbered bottom-up. Cells are kept in one canonical order (ascending
//! column, then ascending row), so each column is a contiguous run of the
//! cell vector and equality/hashing are plain slice comparisons.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::SplitMix64;

/// A unit cell. Both coordinates are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    /// Panics on a zero coordinate; use [`Diagram::from_cells`] for
    /// untrusted input.
    pub fn new(row: u32, col: u32) -> Self {
        assert!(
            row >= 1 && col >= 1,
            "cell coordinates are 1-based, got ({row}, {col})"
        );
        Self { row, col }
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.col, self.row).cmp(&(other.col, other.row))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("cell ({row}, {col}) has a zero coordinate")]
    ZeroCoordinate { row: u32, col: u32 },
    #[error("duplicate cell {0}")]
    DuplicateCell(Cell),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ChainError {
    /// The move at position `index` of the row sequence did nothing, so the
    /// sequence is not a sequence of nontrivial moves.
    #[error("move {index} at row {row} is trivial")]
    NontrivialityViolation { index: usize, row: u32 },
}

/// One application of a Kohnert move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MoveRecord {
    row: u32,
    source: Option<Cell>,
    target: Option<Cell>,
    trivial: bool,
}

impl MoveRecord {
    fn trivial(row: u32) -> Self {
        Self {
            row,
            source: None,
            target: None,
            trivial: true,
        }
    }

    fn nontrivial(row: u32, source: Cell, target: Cell) -> Self {
        debug_assert!(source.col == target.col && source.row > target.row);
        Self {
            row,
            source: Some(source),
            target: Some(target),
            trivial: false,
        }
    }

    pub fn row(&self) -> u32 {
        self.row
    }

    pub fn source(&self) -> Option<Cell> {
        self.source
    }

    pub fn target(&self) -> Option<Cell> {
        self.target
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }
}

/// A finite set of cells in canonical `(col, row)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct Diagram {
    cells: Vec<Cell>,
}

/// JSON shape: `{"cells": [[row, col], ...]}`.
#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    cells: Vec<[u32; 2]>,
}

impl TryFrom<DiagramRepr> for Diagram {
    type Error = DiagramError;

    fn try_from(repr: DiagramRepr) -> Result<Self, Self::Error> {
        Diagram::from_pairs(repr.cells.into_iter().map(|[r, c]| (r, c)))
    }
}

impl From<Diagram> for DiagramRepr {
    fn from(d: Diagram) -> Self {
        DiagramRepr {
            cells: d.cells.iter().map(|c| [c.row, c.col]).collect(),
        }
    }
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self, DiagramError> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if let Some(c) = cells.iter().find(|c| c.row == 0 || c.col == 0) {
            return Err(DiagramError::ZeroCoordinate {
                row: c.row,
                col: c.col,
            });
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(DiagramError::DuplicateCell(w[0]));
        }
        Ok(Self { cells })
    }

    /// Builds a diagram from `(row, col)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self, DiagramError> {
        Self::from_cells(pairs.into_iter().map(|(row, col)| Cell { row, col }))
    }

    /// Cells in canonical order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// The cells of column `col`, bottom to top.
    pub fn column(&self, col: u32) -> &[Cell] {
        let lo = self.cells.partition_point(|c| c.col < col);
        let hi = self.cells.partition_point(|c| c.col <= col);
        &self.cells[lo..hi]
    }

    /// Nonempty columns in ascending order, each with its cells bottom to top.
    pub fn columns(&self) -> impl Iterator<Item = (u32, &[Cell])> + '_ {
        self.cells.chunk_by(|a, b| a.col == b.col).map(|run| (run[0].col, run))
    }

    /// The topmost nonempty row, or 0 for the empty diagram.
    pub fn top_row(&self) -> u32 {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    /// The rightmost nonempty column, or 0 for the empty diagram.
    pub fn rightmost_col(&self) -> u32 {
        self.cells.last().map_or(0, |c| c.col)
    }

    /// Sum of the row indices of all cells. Every nontrivial move lowers it.
    pub fn row_sum(&self) -> u64 {
        self.cells.iter().map(|c| u64::from(c.row)).sum()
    }

    pub fn rightmost_in_row(&self, row: u32) -> Option<Cell> {
        self.cells.iter().rev().find(|c| c.row == row).copied()
    }

    /// The rightmost cell of every nonempty row, keyed by row.
    fn rightmost_cells(&self) -> BTreeMap<u32, Cell> {
        let mut out = BTreeMap::new();
        // canonical order visits columns left to right, so later cells win
        for &c in &self.cells {
            out.insert(c.row, c);
        }
        out
    }

    /// Highest empty row strictly below `cell` in its column.
    fn landing_row(&self, cell: Cell) -> Option<u32> {
        let column = self.column(cell.col);
        let mut idx = column.partition_point(|c| c.row < cell.row);
        let mut row = cell.row - 1;
        while row >= 1 {
            if idx > 0 && column[idx - 1].row == row {
                idx -= 1;
                row -= 1;
            } else {
                return Some(row);
            }
        }
        None
    }

    /// Applies the Kohnert move at `row`: the rightmost cell of that row drops
    /// to the highest empty position below it in its column. Moves at empty
    /// rows, or whose cell has nothing empty below, are trivial.
    pub fn kohnert_move(&self, row: u32) -> (Diagram, MoveRecord) {
        let Some(source) = self.rightmost_in_row(row) else {
            return (self.clone(), MoveRecord::trivial(row));
        };
        match self.landing_row(source) {
            Some(r) => {
                let target = Cell::new(r, source.col);
                (self.relocated(source, target), MoveRecord::nontrivial(row, source, target))
            }
            None => (self.clone(), MoveRecord::trivial(row)),
        }
    }

    fn relocated(&self, source: Cell, target: Cell) -> Diagram {
        let mut cells = self.cells.clone();
        let from = cells.binary_search(&source).expect("source cell present");
        cells.remove(from);
        let to = cells.partition_point(|c| *c < target);
        cells.insert(to, target);
        Diagram { cells }
    }

    /// Rows at which a Kohnert move is nontrivial, ascending.
    pub fn live_rows(&self) -> Vec<u32> {
        self.rightmost_cells()
            .into_iter()
            .filter(|&(_, cell)| self.landing_row(cell).is_some())
            .map(|(row, _)| row)
            .collect()
    }

    /// True when every Kohnert move fixes the diagram.
    pub fn is_minimal(&self) -> bool {
        self.rightmost_cells()
            .values()
            .all(|&cell| self.landing_row(cell).is_none())
    }

    /// Positions without a cell that lie below some cell of their column,
    /// in canonical order.
    pub fn empty_positions(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (col, column) in self.columns() {
            let top = column[column.len() - 1].row;
            let mut next = column.iter().peekable();
            for row in 1..top {
                if next.peek().is_some_and(|c| c.row == row) {
                    next.next();
                } else {
                    out.push(Cell::new(row, col));
                }
            }
        }
        out
    }

    pub fn empty_count(&self) -> usize {
        self.columns()
            .map(|(_, column)| column[column.len() - 1].row as usize - column.len())
            .sum()
    }

    /// Cells per row, rows `1..=top_row`.
    pub fn row_weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.top_row() as usize];
        for c in &self.cells {
            w[c.row as usize - 1] += 1;
        }
        w
    }

    /// Cells per column, columns `1..=rightmost_col`.
    pub fn column_weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.rightmost_col() as usize];
        for c in &self.cells {
            w[c.col as usize - 1] += 1;
        }
        w
    }

    /// Applies a move at each row in turn, requiring every move to be nontrivial.
    pub fn apply_chain(&self, rows: &[u32]) -> Result<Chain, ChainError> {
        let mut chain = Chain::new(self.clone());
        for &row in rows {
            chain.push(row)?;
        }
        Ok(chain)
    }

    /// ASCII grid, top row first: `X` for a cell, `.` otherwise.
    pub fn render_grid(&self) -> String {
        let (rows, cols) = (self.top_row(), self.rightmost_col());
        let mut out = String::with_capacity((rows as usize) * (cols as usize + 1));
        for row in (1..=rows).rev() {
            for col in 1..=cols {
                out.push(if self.contains(Cell { row, col }) { 'X' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// One `"<row> <col>"` line per cell, canonical order.
    pub fn to_cell_list(&self) -> String {
        self.cells
            .iter()
            .map(|c| format!("{} {}\n", c.row, c.col))
            .collect()
    }

    /// Parses the cell-list format: one `"<row> <col>"` per line, `#` comment
    /// lines and blank lines ignored, any order, no duplicates.
    pub fn parse_cell_list(text: &str) -> Result<Diagram, ParseError> {
        let mut cells = Vec::new();
        let mut seen = std::collections::HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| ParseError {
                line: line_no,
                reason,
            };
            let mut parts = line.split_whitespace();
            let (Some(r), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(format!("expected \"<row> <col>\", got {line:?}")));
            };
            let parse = |s: &str, what: &str| -> Result<u32, ParseError> {
                match s.parse::<u32>() {
                    Ok(0) => Err(err(format!("{what} must be at least 1"))),
                    Ok(v) => Ok(v),
                    Err(_) => Err(err(format!("invalid {what} {s:?}"))),
                }
            };
            let cell = Cell {
                row: parse(r, "row")?,
                col: parse(c, "column")?,
            };
            if let Some(prev) = seen.insert(cell, line_no) {
                return Err(err(format!("duplicate cell {cell}, first seen on line {prev}")));
            }
            cells.push(cell);
        }
        cells.sort_unstable();
        Ok(Diagram { cells })
    }
}

impl FromStr for Diagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Diagram::parse_cell_list(s)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_grid())
    }
}

/// Includes each position of `[1, max_row] x [1, max_col]` independently with
/// probability `density`. Positions are visited in canonical order, one
/// SplitMix64 draw each, so the result depends only on the arguments.
pub fn random_diagram(max_row: u32, max_col: u32, density: f64, seed: u64) -> Diagram {
    assert!(
        (0.0..=1.0).contains(&density),
        "density must lie in [0, 1], got {density}"
    );
    let mut rng = SplitMix64::new(seed);
    let mut cells = Vec::new();
    for col in 1..=max_col {
        for row in 1..=max_row {
            if rng.next_f64() < density {
                cells.push(Cell { row, col });
            }
        }
    }
    Diagram { cells }
}

/// A start diagram and a sequence of nontrivial moves applied to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    start: Diagram,
    moves: Vec<MoveRecord>,
    diagrams: Vec<Diagram>,
}

impl Chain {
    pub fn new(start: Diagram) -> Self {
        Self {
            diagrams: vec![start.clone()],
            start,
            moves: Vec::new(),
        }
    }

    /// Extends the chain by the move at `row`; a trivial move is rejected and
    /// leaves the chain unchanged.
    pub fn push(&mut self, row: u32) -> Result<&MoveRecord, ChainError> {
        let (next, record) = self.end().kohnert_move(row);
        if record.is_trivial() {
            return Err(ChainError::NontrivialityViolation {
                index: self.moves.len(),
                row,
            });
        }
        debug_assert!(next.row_sum() < self.end().row_sum());
        self.diagrams.push(next);
        self.moves.push(record);
        Ok(self.moves.last().expect("just pushed"))
    }

    pub fn pop(&mut self) -> Option<MoveRecord> {
        let record = self.moves.pop()?;
        self.diagrams.pop();
        Some(record)
    }

    pub fn start(&self) -> &Diagram {
        &self.start
    }

    pub fn end(&self) -> &Diagram {
        self.diagrams.last().expect("chain holds its start diagram")
    }

    pub fn moves(&self) -> &[MoveRecord] {
        &self.moves
    }

    /// The start diagram followed by one diagram per move.
    pub fn diagrams(&self) -> &[Diagram] {
        &self.diagrams
    }

    pub fn rows(&self) -> Vec<u32> {
        self.moves.iter().map(MoveRecord::row).collect()
    }

    /// Number of moves.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(pairs: &[(u32, u32)]) -> Diagram {
        Diagram::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn d0() -> Diagram {
        d(&[(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)])
    }

    fn d2() -> Diagram {
        d(&[(1, 1), (2, 1), (2, 2), (2, 3), (1, 3)])
    }

    #[test]
    fn move_row_three_gives_d2() {
        let (next, rec) = d0().kohnert_move(3);
        assert_eq!(next, d2());
        assert_eq!(rec.source(), Some(Cell::new(3, 3)));
        assert_eq!(rec.target(), Some(Cell::new(1, 3)));
        assert!(!rec.is_trivial());
    }

    #[test]
    fn move_row_two_gives_d1() {
        let (next, rec) = d0().kohnert_move(2);
        assert_eq!(next, d(&[(1, 1), (2, 1), (2, 2), (1, 3), (3, 3)]));
        assert_eq!(rec.source(), Some(Cell::new(2, 3)));
    }

    #[test]
    fn d2_is_fixed() {
        for r in 1..=5 {
            let (next, rec) = d2().kohnert_move(r);
            assert_eq!(next, d2());
            assert!(rec.is_trivial());
            assert_eq!((rec.source(), rec.target()), (None, None));
        }
    }

    #[test]
    fn empty_diagram_moves_are_trivial() {
        let (next, rec) = Diagram::new().kohnert_move(5);
        assert!(next.is_empty());
        assert!(rec.is_trivial());
    }

    #[test]
    fn empty_positions_examples() {
        assert_eq!(d0().empty_positions(), vec![Cell::new(1, 2), Cell::new(1, 3)]);
        assert!(Diagram::new().empty_positions().is_empty());
        assert!(d(&[(1, 1), (2, 1)]).empty_positions().is_empty());
        assert_eq!(d0().empty_count(), 2);
    }

    #[test]
    fn weights() {
        assert_eq!(d0().row_weight(), vec![1, 3, 1]);
        assert_eq!(d0().column_weight(), vec![2, 1, 2]);
        assert!(Diagram::new().row_weight().is_empty());
        assert!(Diagram::new().column_weight().is_empty());
        let single = d(&[(3, 1)]);
        assert_eq!(single.row_weight(), vec![0, 0, 1]);
        assert_eq!(single.column_weight(), vec![1]);
    }

    #[test]
    fn minimality() {
        assert!(d2().is_minimal());
        assert!(!d0().is_minimal());
        assert!(Diagram::new().is_minimal());
        assert_eq!(d0().live_rows(), vec![2, 3]);
        assert!(d2().live_rows().is_empty());
    }

    #[test]
    fn apply_chain_examples() {
        let chain = d0().apply_chain(&[2, 2, 3]).unwrap();
        assert_eq!(chain.end(), &d(&[(1, 1), (2, 1), (1, 2), (2, 3), (1, 3)]));
        assert_eq!(chain.len(), 3);
        assert_eq!(chain.diagrams().len(), 4);
        assert_eq!(d0().apply_chain(&[3]).unwrap().end(), &d2());
        assert_eq!(
            d2().apply_chain(&[1]),
            Err(ChainError::NontrivialityViolation { index: 0, row: 1 })
        );
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Diagram::parse_cell_list("1 1\n2 1\n2 2\n2 3\n3 3\n").unwrap(), d0());
        assert_eq!(Diagram::parse_cell_list("").unwrap(), Diagram::new());
        assert_eq!(Diagram::parse_cell_list("0 3").unwrap_err().line, 1);
        let with_comments = "# D0\n\n3 3\n1 1\n  2 1\n2 3\n2 2\n";
        assert_eq!(with_comments.parse::<Diagram>().unwrap(), d0());
    }

    #[test]
    fn parse_errors() {
        let dup = Diagram::parse_cell_list("1 1\n1 1\n").unwrap_err();
        assert_eq!(dup.line, 2);
        assert!(dup.reason.contains("duplicate"));
        assert_eq!(Diagram::parse_cell_list("1\n").unwrap_err().line, 1);
        assert_eq!(Diagram::parse_cell_list("1 1\n1 2 3\n").unwrap_err().line, 2);
        assert_eq!(Diagram::parse_cell_list("-1 2").unwrap_err().line, 1);
        assert_eq!(Diagram::parse_cell_list("a b").unwrap_err().line, 1);
        assert_eq!(Diagram::parse_cell_list("2 0").unwrap_err().line, 1);
    }

    #[test]
    fn from_cells_rejects_bad_input() {
        assert_eq!(
            Diagram::from_pairs([(1, 1), (1, 1)]),
            Err(DiagramError::DuplicateCell(Cell::new(1, 1)))
        );
        assert_eq!(
            Diagram::from_pairs([(0, 1)]),
            Err(DiagramError::ZeroCoordinate { row: 0, col: 1 })
        );
    }

    #[test]
    fn grid_rendering() {
        assert_eq!(d0().render_grid(), "..X\nXXX\nX..\n");
        assert_eq!(Diagram::new().render_grid(), "");
    }

    #[test]
    fn json_schema() {
        let json = serde_json::to_string(&d0()).unwrap();
        assert_eq!(json, r#"{"cells":[[1,1],[2,1],[2,2],[2,3],[3,3]]}"#);
        let back: Diagram = serde_json::from_str(r#"{"cells":[[3,3],[1,1],[2,1],[2,2],[2,3]]}"#).unwrap();
        assert_eq!(back, d0());
        assert!(serde_json::from_str::<Diagram>(r#"{"cells":[[1,1],[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<Diagram>(r#"{"cells":[[0,1]]}"#).is_err());
    }

    #[test]
    fn random_extremes() {
        assert!(random_diagram(5, 5, 0.0, 99).is_empty());
        let full = random_diagram(5, 5, 1.0, 99);
        assert_eq!(full.len(), 25);
        assert!(full.empty_positions().is_empty());
        assert!(random_diagram(0, 5, 1.0, 1).is_empty());
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_diagram(5, 5, 0.4, 12345);
        let b = random_diagram(5, 5, 0.4, 12345);
        assert_eq!(a.to_cell_list(), b.to_cell_list());
        assert_ne!(a, random_diagram(5, 5, 0.4, 12346));
    }

    #[test]
    fn random_matches_independent_generator() {
        // Re-derive the diagram with an inline generator to pin the draw order.
        fn mix(state: &mut u64) -> u64 {
            *state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = *state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }
        let mut state = 12345u64;
        let mut expected = Vec::new();
        for col in 1..=5 {
            for row in 1..=5 {
                let u = (mix(&mut state) >> 11) as f64 / 9007199254740992.0;
                if u < 0.4 {
                    expected.push((row, col));
                }
            }
        }
        assert_eq!(random_diagram(5, 5, 0.4, 12345), d(&expected));
    }

    fn arb_diagram() -> impl Strategy<Value = Diagram> {
        (0u32..7, 0u32..7, 0.0f64..=1.0, any::<u64>())
            .prop_map(|(r, c, p, seed)| random_diagram(r, c, p, seed))
    }

    /// Independent reference: scan downward from the source one row at a time.
    fn naive_move(d: &Diagram, row: u32) -> Diagram {
        let Some(src) = d.cells().iter().filter(|c| c.row == row).max_by_key(|c| c.col).copied() else {
            return d.clone();
        };
        for r in (1..row).rev() {
            if !d.cells().contains(&Cell::new(r, src.col)) {
                let cells = d
                    .cells()
                    .iter()
                    .map(|&c| if c == src { Cell::new(r, src.col) } else { c });
                return Diagram::from_cells(cells).unwrap();
            }
        }
        d.clone()
    }

    proptest! {
        #[test]
        fn move_matches_naive(d in arb_diagram(), row in 1u32..9) {
            let (next, rec) = d.kohnert_move(row);
            prop_assert_eq!(&next, &naive_move(&d, row));
            prop_assert_eq!(next == d, rec.is_trivial());
            prop_assert_eq!(next.len(), d.len());
            prop_assert_eq!(next.column_weight(), d.column_weight());
        }

        #[test]
        fn minimal_formulations_agree(d in arb_diagram()) {
            let by_moves = (1..=d.top_row()).all(|r| d.kohnert_move(r).1.is_trivial());
            prop_assert_eq!(d.is_minimal(), by_moves);
            prop_assert_eq!(d.is_minimal(), d.live_rows().is_empty());
        }

        #[test]
        fn empty_count_changes_per_move(d in arb_diagram(), row in 1u32..9) {
            let (next, rec) = d.kohnert_move(row);
            if let Some(src) = rec.source() {
                let topmost = d.column(src.col).last() == Some(&src);
                let expected = if topmost { d.empty_count() - 1 } else { d.empty_count() };
                prop_assert_eq!(next.empty_count(), expected);
                prop_assert_eq!(next.empty_positions().len(), expected);
            }
        }

        #[test]
        fn text_round_trip(d in arb_diagram()) {
            prop_assert_eq!(Diagram::parse_cell_list(&d.to_cell_list()).unwrap(), d.clone());
            let json = serde_json::to_string(&d).unwrap();
            prop_assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), d);
        }

        #[test]
        fn weights_sum_to_size(d in arb_diagram()) {
            prop_assert_eq!(d.row_weight().iter().sum::<usize>(), d.len());
            prop_assert_eq!(d.column_weight().iter().sum::<usize>(), d.len());
        }
    }
}
