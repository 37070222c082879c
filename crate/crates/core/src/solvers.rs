//! Constructive solutions to the two puzzles.
//!
//! The maximum puzzle is solved greedily: always play the lowest row that
//! admits a nontrivial move. The minimum puzzle lowers the topmost cell of
//! each column as far as its ceiling allows, sweeping columns right to left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Chain, Diagram};
use crate::formulas::{self, column_profiles};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Max,
    Min,
}

impl Mode {
    /// The closed-form optimum for this mode.
    pub fn optimum(self, d: &Diagram) -> usize {
        match self {
            Mode::Max => formulas::max_moves(d),
            Mode::Min => formulas::min_moves(d),
        }
    }

    /// The next row the optimal strategy plays from `d`, if any.
    pub fn next_row(self, d: &Diagram) -> Option<u32> {
        match self {
            Mode::Max => greedy_row(d),
            Mode::Min => min_schedule(d).first().copied(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Max => "max",
            Mode::Min => "min",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max" => Ok(Mode::Max),
            "min" => Ok(Mode::Min),
            other => Err(format!("unknown mode {other:?}, expected max or min")),
        }
    }
}

/// A solver's chain together with the formula value it must attain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    mode: Mode,
    chain: Chain,
    predicted: usize,
    achieved: usize,
}

impl SolveReport {
    fn new(mode: Mode, chain: Chain) -> Self {
        let predicted = mode.optimum(chain.start());
        let achieved = chain.len();
        assert_eq!(
            predicted,
            achieved,
            "{mode} solver disagrees with the closed form on\n{}",
            chain.start().to_cell_list()
        );
        assert!(chain.end().is_minimal(), "{mode} solver stopped early");
        Self {
            mode,
            chain,
            predicted,
            achieved,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn into_chain(self) -> Chain {
        self.chain
    }

    pub fn predicted(&self) -> usize {
        self.predicted
    }

    pub fn achieved(&self) -> usize {
        self.achieved
    }

    pub fn rows(&self) -> Vec<u32> {
        self.chain.rows()
    }
}

/// Smallest row admitting a nontrivial move.
pub fn greedy_row(d: &Diagram) -> Option<u32> {
    d.live_rows().first().copied()
}

/// Plays [`greedy_row`] until the diagram is minimal. The chain has
/// `max_moves(d)` moves.
pub fn solve_max(d: &Diagram) -> SolveReport {
    let mut chain = Chain::new(d.clone());
    while let Some(row) = greedy_row(chain.end()) {
        chain.push(row).expect("greedy row is live");
    }
    SolveReport::new(Mode::Max, chain)
}

/// Rows played by the minimum solver from `d`, in order. For each nonempty
/// column right to left with top row `r`, count `n` and right-hand maximum
/// `M`, rows `r` down to `max(n, M) + 1` each lower that column's top cell.
pub fn min_schedule(d: &Diagram) -> Vec<u32> {
    let mut rows = Vec::new();
    for p in column_profiles(d).iter().rev().filter(|p| p.count > 0) {
        let floor = p.count.max(p.right_max) as u32;
        if p.top_row > floor {
            rows.extend((floor + 1..=p.top_row).rev());
        }
    }
    rows
}

/// Plays [`min_schedule`]. The chain has `min_moves(d)` moves and every move
/// lowers the topmost cell of some column.
pub fn solve_min(d: &Diagram) -> SolveReport {
    let mut chain = Chain::new(d.clone());
    for row in min_schedule(d) {
        let before = chain.end().clone();
        let record = *chain.push(row).expect("scheduled moves are nontrivial");
        debug_assert!({
            let src = record.source().expect("nontrivial");
            before.column(src.col).last() == Some(&src)
        });
    }
    SolveReport::new(Mode::Min, chain)
}

/// Right-to-left justification down to column `col`: for each nonempty
/// column `c >= col` from the rightmost leftwards, with `r` its top row in
/// the original `d`, apply one move at each of rows `r, r-1, ..., 1`.
/// Trivial moves are part of the construction and simply do nothing.
pub fn dhat(d: &Diagram, col: u32) -> Diagram {
    let tops: Vec<u32> = d
        .columns()
        .filter(|&(c, _)| c >= col)
        .map(|(_, column)| column[column.len() - 1].row)
        .collect();
    let mut current = d.clone();
    for &top in tops.iter().rev() {
        for row in (1..=top).rev() {
            current = current.kohnert_move(row).0;
        }
    }
    current
}
