//! Covering relations of the inclusion order on a bounded ideal family,
//! exported as DOT or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{params_includes, IdealFamily, IdealParams};

/// Packed rows of a boolean relation.
#[derive(Debug, Clone)]
pub(crate) struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            words,
            bits: vec![0; n * words],
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Is row `i` contained in row `j`?
    pub(crate) fn row_subset(&self, i: usize, j: usize) -> bool {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .all(|(a, b)| a & !b == 0)
    }
}

/// Inclusion relation `rel[i][j] ⇔ items[i] ⊂ items[j]`.
pub(crate) fn inclusion_matrix(items: &[IdealParams]) -> BitMatrix {
    let mut m = BitMatrix::new(items.len());
    for (i, a) in items.iter().enumerate() {
        for (j, b) in items.iter().enumerate() {
            if i == j || params_includes(a, b) {
                m.set(i, j);
            }
        }
    }
    m
}

/// The Hasse diagram: nodes in lexicographic order on `(x, y, Y_l, Y_r)` and
/// edges `(smaller, larger)` for each covering pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub nodes: Vec<IdealParams>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn build(family: &IdealFamily) -> Result<Self> {
        let nodes = family.integrable();
        if nodes.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let up = inclusion_matrix(&nodes);
        let n = nodes.len();
        let mut down = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if up.get(i, j) {
                    down.set(j, i);
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !up.get(i, j) {
                    continue;
                }
                // i ⊂ j is a cover when only i and j lie in [i, j]
                let between: u32 = up
                    .row(i)
                    .iter()
                    .zip(down.row(j))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if between == 2 {
                    edges.push((i, j));
                }
            }
        }
        Ok(HasseDiagram { nodes, edges })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{node}\"];");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency lists: each node with the indices of the ideals covering it.
    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, node)| {
                let covers: Vec<usize> = self
                    .edges
                    .iter()
                    .filter(|(a, _)| *a == i)
                    .map(|(_, b)| *b)
                    .collect();
                serde_json::json!({
                    "id": i,
                    "label": node.to_string(),
                    "ideal": node,
                    "covered_by": covers,
                })
            })
            .collect();
        serde_json::json!({ "nodes": nodes })
    }
}
