//! Qubit-line adjacency graph.
//!
//! Vertices are circuit lines. Every control/target pair of a gate adds one
//! unit of weight to the edge between the two lines, so a CNOT contributes
//! one edge, a Toffoli two (one per control), and a NOT none.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::circuit::{Circuit, GateKind};
use crate::layout::LineOrdering;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("MCT gate at index {gate} must be decomposed before building the adjacency graph")]
    MustDecompose { gate: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    adjacency: Vec<BTreeMap<usize, u64>>,
}

impl AdjacencyGraph {
    pub fn new(num_vertices: usize) -> Self {
        AdjacencyGraph { adjacency: vec![BTreeMap::new(); num_vertices] }
    }

    /// Builds a graph from `(u, v, weight)` triples; repeated pairs accumulate.
    pub fn from_edges(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize, u64)>) -> Self {
        let mut g = Self::new(num_vertices);
        for (u, v, w) in edges {
            g.add_weight(u, v, w);
        }
        g
    }

    /// Adds `w` to edge `{u, v}`. Self-loops and zero weights are ignored.
    pub fn add_weight(&mut self, u: usize, v: usize, w: u64) {
        if u == v || w == 0 {
            return;
        }
        *self.adjacency[u].entry(v).or_insert(0) += w;
        *self.adjacency[v].entry(u).or_insert(0) += w;
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn weight(&self, u: usize, v: usize) -> u64 {
        self.adjacency[u].get(&v).copied().unwrap_or(0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.adjacency[v].iter().map(|(&u, &w)| (u, w))
    }

    /// Every edge once, as `(u, v, w)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |(&v, &w)| (u, v, w)))
    }

    pub fn total_weight(&self) -> u64 {
        self.edges().map(|(_, _, w)| w).sum()
    }

    /// Same edges with every weight set to 1.
    pub fn unweighted(&self) -> Self {
        AdjacencyGraph { adjacency: self.adjacency.iter().map(|nbrs| nbrs.keys().map(|&k| (k, 1)).collect()).collect() }
    }

    /// `sum w(u,v) * |pos(u) - pos(v)|` over all edges.
    pub fn arrangement_cost(&self, ord: &LineOrdering) -> u64 {
        self.edges().map(|(u, v, w)| w * ord.position(u).abs_diff(ord.position(v)) as u64).sum()
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (u, _) in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Plain-text dump: one line per vertex, `v: n1:w1 n2:w2 ...`.
    pub fn to_adjacency_list(&self) -> String {
        let mut out = String::new();
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for (u, w) in nbrs {
                let _ = write!(out, " {u}:{w}");
            }
            out.push('\n');
        }
        out
    }
}

pub fn build_graph(c: &Circuit) -> Result<AdjacencyGraph, GraphError> {
    let mut g = AdjacencyGraph::new(c.num_lines());
    for (i, gate) in c.gates().iter().enumerate() {
        match gate.kind() {
            GateKind::Not => {}
            GateKind::Mct => return Err(GraphError::MustDecompose { gate: i }),
            _ => {
                for &ctrl in gate.controls() {
                    g.add_weight(ctrl, gate.target(), 1);
                }
            }
        }
    }
    Ok(g)
}
