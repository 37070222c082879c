//! Formula-versus-oracle checks over seeded random corpora.

use serde::Serialize;

use crate::diagram::{random_diagram, Diagram};
use crate::formulas::{self, column_profiles};
use crate::poset::{enumerate, PosetError, PosetGraph};
use crate::rng::SplitMix64;
use crate::solvers::{solve_max, solve_min};

/// Shape of a random corpus.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CorpusSpec {
    pub count: usize,
    pub rows: u32,
    pub cols: u32,
    pub density: f64,
    pub seed: u64,
}

impl CorpusSpec {
    /// Per-instance seeds are successive draws of a generator seeded with
    /// `seed`, so instance `i` does not depend on `count`.
    pub fn seeds(&self) -> Vec<u64> {
        let mut rng = SplitMix64::new(self.seed);
        (0..self.count).map(|_| rng.next_u64()).collect()
    }

    pub fn diagrams(&self) -> Vec<Diagram> {
        self.seeds()
            .into_iter()
            .map(|s| random_diagram(self.rows, self.cols, self.density, s))
            .collect()
    }
}

/// Outcome of checking one diagram against its enumerated poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceCheck {
    pub nodes: usize,
    pub edges: usize,
    pub violations: Vec<String>,
}

impl InstanceCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates the poset of `d` and checks every closed form and structural
/// property against it.
pub fn check_instance(d: &Diagram, node_limit: usize) -> Result<InstanceCheck, PosetError> {
    let g = enumerate(d, node_limit)?;
    Ok(InstanceCheck {
        nodes: g.len(),
        edges: g.edges().len(),
        violations: violations(d, &g),
    })
}

fn violations(d: &Diagram, g: &PosetGraph) -> Vec<String> {
    let mut out = Vec::new();
    let mut expect = |name: &str, formula: usize, oracle: usize| {
        if formula != oracle {
            out.push(format!("{name}: formula {formula}, oracle {oracle}"));
        }
    };

    let (longest, longest_chain) = g.longest_chain();
    let (shortest, shortest_chain) = g.shortest_to_minimal();
    expect("max_moves", formulas::max_moves(d), longest);
    expect("min_moves", formulas::min_moves(d), shortest);
    expect("max_min_empty", formulas::max_min_empty(d), g.max_empty_over_minimal());
    expect("solve_max", solve_max(d).achieved(), longest);
    expect("solve_min", solve_min(d).achieved(), shortest);

    let minimal: Vec<&Diagram> = g.minimal().iter().map(|&i| &g.nodes()[i]).collect();
    for p in column_profiles(d) {
        let Some(h) = p.h else { continue };
        let highest = minimal
            .iter()
            .filter_map(|m| m.column(p.col).last().map(|c| c.row))
            .max()
            .unwrap_or(0);
        expect(&format!("ceiling of column {}", p.col), h as usize, highest as usize);
    }

    if !longest_chain.end().is_minimal() || !shortest_chain.end().is_minimal() {
        out.push("witness chain does not end at a minimal diagram".into());
    }

    for e in g.edges() {
        let parent = &g.nodes()[e.parent];
        let child = &g.nodes()[e.child];
        let (moved, record) = parent.kohnert_move(e.row);
        if record.is_trivial() || &moved != child {
            out.push(format!("edge d{} -> d{} is not the move at row {}", e.parent, e.child, e.row));
            continue;
        }
        let src = record.source().expect("nontrivial");
        let topmost = parent.column(src.col).last() == Some(&src);
        let want = parent.empty_count() - usize::from(topmost);
        if child.empty_count() != want {
            out.push(format!(
                "edge d{} -> d{}: empty count {} -> {}, topmost moved: {topmost}",
                e.parent,
                e.child,
                parent.empty_count(),
                child.empty_count()
            ));
        }
    }

    // cells of columns >= j of any minimal diagram stay weakly below the
    // tallest column count among columns >= j of the root
    let weights = d.column_weight();
    for m in &minimal {
        let mut bound = 0;
        for col in (1..=weights.len()).rev() {
            bound = bound.max(weights[col - 1]);
            if let Some(top) = m.column(col as u32).last() {
                if top.row as usize > bound {
                    out.push(format!("minimal diagram has cell {top} above {bound}"));
                }
            }
        }
    }
    out
}
