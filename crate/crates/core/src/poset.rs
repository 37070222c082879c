//! Brute-force Kohnert poset: every diagram reachable from a root, joined by
//! cover edges (single nontrivial moves).
//!
//! Only the cover DAG is stored. Rank and distances are path computations on
//! that DAG, so the transitive closure is never built.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Chain, Diagram};

pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset has more than {0} diagrams")]
    LimitExceeded(usize),
}

/// `child` is `parent` after the Kohnert move at `row`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoverEdge {
    pub parent: usize,
    pub child: usize,
    pub row: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetGraph {
    nodes: Vec<Diagram>,
    edges: Vec<CoverEdge>,
    /// `edges[offsets[i]..offsets[i + 1]]` leave node `i`.
    offsets: Vec<usize>,
    minimal: Vec<usize>,
}

/// Breadth-first closure of `root` under nontrivial moves. Nodes are numbered
/// in discovery order (layer by layer, children in ascending row order), so
/// equal inputs give identical graphs.
pub fn enumerate(root: &Diagram, node_limit: usize) -> Result<PosetGraph, PosetError> {
    if node_limit == 0 {
        return Err(PosetError::LimitExceeded(0));
    }
    let mut index: HashMap<Diagram, usize> = HashMap::new();
    let mut nodes = vec![root.clone()];
    index.insert(root.clone(), 0);
    let mut edges = Vec::new();
    let mut offsets = vec![0];
    let mut minimal = Vec::new();

    let mut head = 0;
    while head < nodes.len() {
        let rows = nodes[head].live_rows();
        if rows.is_empty() {
            minimal.push(head);
        }
        let first_edge = edges.len();
        for row in rows {
            let (child, _) = nodes[head].kohnert_move(row);
            let child_idx = match index.get(&child) {
                Some(&i) => i,
                None => {
                    if nodes.len() >= node_limit {
                        return Err(PosetError::LimitExceeded(node_limit));
                    }
                    let i = nodes.len();
                    index.insert(child.clone(), i);
                    nodes.push(child);
                    i
                }
            };
            // rows ascend, so a repeated child keeps its smallest witnessing row
            if !edges[first_edge..].iter().any(|e: &CoverEdge| e.child == child_idx) {
                edges.push(CoverEdge {
                    parent: head,
                    child: child_idx,
                    row,
                });
            }
        }
        offsets.push(edges.len());
        head += 1;
    }

    Ok(PosetGraph {
        nodes,
        edges,
        offsets,
        minimal,
    })
}

impl PosetGraph {
    pub const ROOT: usize = 0;

    pub fn root(&self) -> &Diagram {
        &self.nodes[Self::ROOT]
    }

    pub fn nodes(&self) -> &[Diagram] {
        &self.nodes
    }

    pub fn edges(&self) -> &[CoverEdge] {
        &self.edges
    }

    /// Indices of the minimal diagrams, ascending.
    pub fn minimal(&self) -> &[usize] {
        &self.minimal
    }

    pub fn children(&self, node: usize) -> &[CoverEdge] {
        &self.edges[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn chain_from_rows(&self, rows: &[u32]) -> Chain {
        self.root()
            .apply_chain(rows)
            .expect("cover edges are nontrivial moves")
    }

    /// Length of the longest chain from the root (the rank of the poset) and
    /// a chain realizing it.
    pub fn longest_chain(&self) -> (usize, Chain) {
        // every move lowers the row sum, so ascending row sum is a reverse
        // topological order of the cover DAG
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.nodes[i].row_sum());

        let mut depth = vec![0usize; self.len()];
        let mut best: Vec<Option<CoverEdge>> = vec![None; self.len()];
        for &v in &order {
            for e in self.children(v) {
                if best[v].is_none() || depth[e.child] + 1 > depth[v] {
                    depth[v] = depth[e.child] + 1;
                    best[v] = Some(*e);
                }
            }
        }

        let mut rows = Vec::with_capacity(depth[Self::ROOT]);
        let mut at = Self::ROOT;
        while let Some(e) = best[at] {
            rows.push(e.row);
            at = e.child;
        }
        (depth[Self::ROOT], self.chain_from_rows(&rows))
    }

    /// BFS parent edge of each node, from the root.
    fn bfs_parents(&self) -> (Vec<Option<CoverEdge>>, Vec<usize>) {
        let mut parent = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        let mut visit_order = Vec::with_capacity(self.len());
        let mut queue = VecDeque::from([Self::ROOT]);
        seen[Self::ROOT] = true;
        while let Some(v) = queue.pop_front() {
            visit_order.push(v);
            for e in self.children(v) {
                if !seen[e.child] {
                    seen[e.child] = true;
                    parent[e.child] = Some(*e);
                    queue.push_back(e.child);
                }
            }
        }
        (parent, visit_order)
    }

    fn rows_to(parent: &[Option<CoverEdge>], node: usize) -> Vec<u32> {
        let mut rows = Vec::new();
        let mut at = node;
        while let Some(e) = parent[at] {
            rows.push(e.row);
            at = e.parent;
        }
        rows.reverse();
        rows
    }

    /// Row sequence of a shortest path from the root to `node`.
    pub fn path_to(&self, node: usize) -> Vec<u32> {
        let (parent, _) = self.bfs_parents();
        Self::rows_to(&parent, node)
    }

    /// Fewest moves from the root to a minimal diagram, with a witness chain.
    pub fn shortest_to_minimal(&self) -> (usize, Chain) {
        let (parent, visit_order) = self.bfs_parents();
        let target = visit_order
            .into_iter()
            .find(|&v| self.nodes[v].is_minimal())
            .expect("a finite poset has a minimal element");
        let rows = Self::rows_to(&parent, target);
        (rows.len(), self.chain_from_rows(&rows))
    }

    /// Largest empty-position count over the minimal diagrams.
    pub fn max_empty_over_minimal(&self) -> usize {
        self.minimal
            .iter()
            .map(|&i| self.nodes[i].empty_count())
            .max()
            .unwrap_or(0)
    }

    /// Graphviz DOT: node `d<i>` labelled with its ASCII grid, one edge per
    /// cover relation labelled with the move row.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph kohnert {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, d) in self.nodes.iter().enumerate() {
            let label = d.render_grid().replace('\n', "\\n");
            let _ = writeln!(out, "  d{i} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  d{} -> d{} [label=\"{}\"];", e.parent, e.child, e.row);
        }
        out.push_str("}\n");
        out
    }
}
