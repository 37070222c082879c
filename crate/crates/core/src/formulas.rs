//! Closed forms for the maximum and minimum number of moves.
//!
//! `max_moves` sums the room of every cell. `min_moves` sums, over nonempty
//! columns, how far the topmost cell sits above its ceiling `h(D, c)`, the
//! highest row that cell can occupy in any minimal descendant.

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Cell, Diagram};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("cell {0} is not in the diagram")]
    CellNotInDiagram(Cell),
}

/// Number of cells of `col` weakly below `cell`'s row.
pub fn blockers_count(d: &Diagram, cell: Cell, col: u32) -> Result<usize, FormulaError> {
    if !d.contains(cell) {
        return Err(FormulaError::CellNotInDiagram(cell));
    }
    Ok(blockers_unchecked(d, cell.row, col))
}

fn blockers_unchecked(d: &Diagram, row: u32, col: u32) -> usize {
    d.column(col).partition_point(|c| c.row <= row)
}

/// `row - max_{c' >= col} blockers(c')`: how many moves the cell can absorb.
pub fn room(d: &Diagram, cell: Cell) -> Result<usize, FormulaError> {
    if !d.contains(cell) {
        return Err(FormulaError::CellNotInDiagram(cell));
    }
    Ok(room_unchecked(d, cell))
}

pub(crate) fn room_unchecked(d: &Diagram, cell: Cell) -> usize {
    let blocked = d
        .columns()
        .filter(|&(c, _)| c >= cell.col)
        .map(|(_, column)| column.partition_point(|x| x.row <= cell.row))
        .max()
        .unwrap_or(0);
    // the cell's own column contributes at least 1 and at most `row`
    cell.row as usize - blocked
}

/// The maximum number of nontrivial moves from `d` to a minimal diagram.
pub fn max_moves(d: &Diagram) -> usize {
    d.cells().iter().map(|&c| room_unchecked(d, c)).sum()
}

/// Per-column statistics feeding the minimum-moves formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnProfile {
    pub col: u32,
    /// Cells in the column.
    pub count: usize,
    /// Row of the topmost cell, 0 for an empty column.
    pub top_row: u32,
    /// Largest cell count among columns strictly to the right.
    pub right_max: usize,
    /// Ceiling of the topmost cell; `None` for an empty column.
    pub h: Option<u32>,
}

fn ceiling(count: usize, top_row: u32, right_max: usize) -> u32 {
    let (m, r, big_m) = (count as u64, u64::from(top_row), right_max as u64);
    debug_assert!(m <= r);
    // M == r > m falls between the strict cases; there r and M coincide
    let h = if big_m >= r {
        r
    } else if m >= big_m {
        m
    } else if r > big_m && big_m > m {
        big_m
    } else {
        unreachable!("ceiling cases are exhaustive when count <= top_row ({m}, {r}, {big_m})")
    };
    h as u32
}

/// One profile per column `1..=rightmost_col`.
pub fn column_profiles(d: &Diagram) -> Vec<ColumnProfile> {
    let weights = d.column_weight();
    let mut profiles = Vec::with_capacity(weights.len());
    let mut right_max = 0;
    for (idx, &count) in weights.iter().enumerate().rev() {
        let col = idx as u32 + 1;
        let top_row = d.column(col).last().map_or(0, |c| c.row);
        let h = (count > 0).then(|| ceiling(count, top_row, right_max));
        profiles.push(ColumnProfile {
            col,
            count,
            top_row,
            right_max,
            h,
        });
        right_max = right_max.max(count);
    }
    profiles.reverse();
    profiles
}

/// `h(D, c)`, or `None` when column `c` is empty.
pub fn column_ceiling(d: &Diagram, col: u32) -> Option<u32> {
    column_profiles(d)
        .get(col.checked_sub(1)? as usize)
        .and_then(|p| p.h)
}

/// The minimum number of nontrivial moves from `d` to a minimal diagram.
pub fn min_moves(d: &Diagram) -> usize {
    column_profiles(d)
        .iter()
        .filter_map(|p| p.h.map(|h| (p.top_row - h) as usize))
        .sum()
}

/// The largest number of empty positions over the minimal descendants of `d`.
pub fn max_min_empty(d: &Diagram) -> usize {
    column_profiles(d)
        .iter()
        .filter_map(|p| p.h.map(|h| h as usize - p.count))
        .sum()
}
