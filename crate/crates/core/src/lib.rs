//! Kohnert diagrams and the minimum/maximum Kohnert move puzzles.
//!
//! Start from a diagram of unit cells and apply Kohnert moves until every
//! move is trivial. [`formulas`] gives the fewest and most moves that can
//! take; [`solvers`] produces chains attaining both; [`poset`] enumerates
//! every reachable diagram as an independent oracle.

pub mod check;
pub mod diagram;
pub mod formulas;
pub mod labeling;
pub mod poset;
pub mod presets;
pub mod rng;
pub mod solvers;

pub use diagram::{random_diagram, Cell, Chain, ChainError, Diagram, DiagramError, MoveRecord, ParseError};
pub use formulas::{column_profiles, max_min_empty, max_moves, min_moves, ColumnProfile};
pub use poset::{enumerate, PosetError, PosetGraph, DEFAULT_NODE_LIMIT};
pub use solvers::{dhat, solve_max, solve_min, Mode, SolveReport};
