//! Qubit-line reordering.
//!
//! The main heuristic lists the leaves of a recursive balanced bisection of
//! the adjacency graph, left to right. When a subset is split, the half with
//! more edge weight toward lines already placed on its left goes first.

use thiserror::Error;

use crate::circuit::{apply_ordering, Circuit, GateKind};
use crate::graph::{build_graph, AdjacencyGraph, GraphError};
use crate::layout::LineOrdering;
use crate::lnn::{circuit_swap_pairs, toffoli_pairs, LnnError, SwapCount};
use crate::partition::{split, PartitionOptions};

/// Largest circuit accepted by [`best_ordering_exhaustive`].
pub const EXHAUSTIVE_MAX_LINES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("circuit contains MCT gates; decompose it first")]
    MustDecompose,
    #[error("exhaustive search is limited to {limit} lines, circuit has {lines}")]
    TooManyLines { lines: usize, limit: usize },
    #[error("label {label} is out of range for {num_parts} parts")]
    InvalidLabel { label: usize, num_parts: usize },
}

impl From<GraphError> for OrderingError {
    fn from(_: GraphError) -> Self {
        OrderingError::MustDecompose
    }
}

impl From<LnnError> for OrderingError {
    fn from(_: LnnError) -> Self {
        OrderingError::MustDecompose
    }
}

/// Part id per line, as produced by a k-way partitioner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionLabels {
    labels: Vec<usize>,
    num_parts: usize,
}

impl PartitionLabels {
    pub fn new(labels: Vec<usize>, num_parts: usize) -> Result<Self, OrderingError> {
        if let Some(&label) = labels.iter().find(|&&l| l >= num_parts) {
            return Err(OrderingError::InvalidLabel { label, num_parts });
        }
        Ok(PartitionLabels { labels, num_parts })
    }

    /// Labels with `num_parts` set to one past the largest label.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        let num_parts = labels.iter().max().map_or(0, |m| m + 1);
        PartitionLabels { labels, num_parts }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn num_parts(&self) -> usize {
        self.num_parts
    }

    /// Number of distinct labels actually used.
    pub fn non_empty_parts(&self) -> usize {
        let mut used = vec![false; self.num_parts];
        self.labels.iter().for_each(|&l| used[l] = true);
        used.into_iter().filter(|&u| u).count()
    }
}

/// Lines sorted by label, ties by line index; line `i` goes to its rank.
pub fn order_from_labels(labels: &PartitionLabels) -> LineOrdering {
    let mut lines: Vec<usize> = (0..labels.labels.len()).collect();
    lines.sort_by_key(|&i| (labels.labels[i], i));
    LineOrdering::from_sequence(&lines).expect("sorted indices form a permutation")
}

struct Arranger<'a> {
    graph: &'a AdjacencyGraph,
    opts: &'a PartitionOptions,
    /// -1: placed left of the current subset, 1: still to the right, 0: inside.
    side: Vec<i8>,
    sequence: Vec<usize>,
    labels: Vec<usize>,
    next_label: usize,
}

impl<'a> Arranger<'a> {
    fn new(graph: &'a AdjacencyGraph, opts: &'a PartitionOptions) -> Self {
        let n = graph.num_vertices();
        Arranger { graph, opts, side: vec![1; n], sequence: Vec::with_capacity(n), labels: vec![0; n], next_label: 0 }
    }

    /// Weight toward placed lines minus weight toward pending lines.
    fn pull_left(&self, half: &[usize]) -> i64 {
        half.iter()
            .flat_map(|&v| self.graph.neighbors(v))
            .map(|(u, w)| {
                let w = if self.opts.weighted { w as i64 } else { 1 };
                w * -(self.side[u] as i64)
            })
            .sum()
    }

    fn arrange(&mut self, subset: Vec<usize>, parts: usize) {
        if parts <= 1 || subset.len() <= 1 {
            let mut group = subset;
            group.sort_unstable();
            for v in group {
                self.side[v] = -1;
                self.labels[v] = self.next_label;
                self.sequence.push(v);
            }
            self.next_label += 1;
            return;
        }
        let n = subset.len();
        let left_parts = parts.div_ceil(2);
        let left_size = ((n * left_parts + parts / 2) / parts).clamp(1, n - 1);
        let b = split(self.graph, &subset, left_size, self.opts);
        let (a_parts, b_parts) = (left_parts, parts - left_parts);

        let (pa, pb) = (self.pull_left(&b.left), self.pull_left(&b.right));
        let a_first = pa > pb || (pa == pb && b.left[0] < b.right[0]);
        let (first, first_parts, second, second_parts) =
            if a_first { (b.left, a_parts, b.right, b_parts) } else { (b.right, b_parts, b.left, a_parts) };

        for &v in &second {
            self.side[v] = 1;
        }
        self.arrange(first, first_parts);
        for &v in &second {
            self.side[v] = 0;
        }
        self.arrange(second, second_parts);
    }
}

/// Recursive-bisection leaf order of `g`. Connected components are laid out
/// one after another, ordered by their smallest line.
pub fn linear_order(g: &AdjacencyGraph, opts: &PartitionOptions) -> LineOrdering {
    let mut arr = Arranger::new(g, opts);
    for comp in g.components() {
        for &v in &comp {
            arr.side[v] = 0;
        }
        let len = comp.len();
        arr.arrange(comp, len);
    }
    LineOrdering::from_sequence(&arr.sequence).expect("every vertex placed once")
}

/// Splits the graph into `parts` groups by recursive bisection and labels
/// the groups left to right.
pub fn partition_labels(g: &AdjacencyGraph, parts: usize, opts: &PartitionOptions) -> PartitionLabels {
    let parts = parts.max(1);
    let mut arr = Arranger::new(g, opts);
    let all: Vec<usize> = (0..g.num_vertices()).collect();
    arr.side.iter_mut().for_each(|s| *s = 0);
    arr.arrange(all, parts);
    PartitionLabels { labels: arr.labels, num_parts: parts }
}

/// Ordering that minimizes the circuit's SWAP pairs, found by trying all
/// `N!` orderings in lexicographic order; the first minimum wins.
pub fn best_ordering_exhaustive(c: &Circuit) -> Result<(LineOrdering, SwapCount), OrderingError> {
    let n = c.num_lines();
    if n > EXHAUSTIVE_MAX_LINES {
        return Err(OrderingError::TooManyLines { lines: n, limit: EXHAUSTIVE_MAX_LINES });
    }
    if c.has_mct() {
        return Err(OrderingError::MustDecompose);
    }
    let gates: Vec<(GateKind, usize, usize, usize)> = c
        .gates()
        .iter()
        .filter(|g| g.kind() != GateKind::Not)
        .map(|g| {
            let cs = g.controls();
            (g.kind(), cs[0], cs.get(1).copied().unwrap_or(0), g.target())
        })
        .collect();

    let cost = |p: &[usize], bound: usize| -> usize {
        let mut total = 0;
        for &(kind, a, b, t) in &gates {
            total += match kind {
                GateKind::Toffoli => {
                    let (x, y) = if p[a] < p[b] { (p[a], p[b]) } else { (p[b], p[a]) };
                    toffoli_pairs(x, y, p[t])
                }
                _ => p[a].abs_diff(p[t]) - 1,
            };
            if total > bound {
                break;
            }
        }
        total
    };

    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = cost(&perm, usize::MAX);
    let mut best_perm = perm.clone();
    while best > 0 && next_permutation(&mut perm) {
        let k = cost(&perm, best);
        if k < best {
            best = k;
            best_perm.clone_from(&perm);
        }
    }
    let ord = LineOrdering::new(best_perm).expect("permutation");
    Ok((ord, SwapCount::new(best as u64)))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { return false };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Leaf order of recursive balanced bisection.
    #[default]
    Recursive,
    /// k-way partition labels sorted into an order; `None` uses one part per line.
    Labels {
        parts: Option<usize>,
    },
    /// Exact minimum over all orderings (small circuits only).
    Exhaustive,
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OrderOptions {
    pub strategy: Strategy,
    pub partition: PartitionOptions,
    /// Fall back to the identity ordering when reordering adds SWAP pairs.
    pub keep_best: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reordering {
    pub circuit: Circuit,
    pub ordering: LineOrdering,
    pub before: SwapCount,
    pub after: SwapCount,
}

pub fn compute_ordering(c: &Circuit, opts: &OrderOptions) -> Result<LineOrdering, OrderingError> {
    let n = c.num_lines();
    Ok(match opts.strategy {
        Strategy::Identity => LineOrdering::identity(n),
        Strategy::Recursive => linear_order(&build_graph(c)?, &opts.partition),
        Strategy::Labels { parts } => {
            let g = build_graph(c)?;
            order_from_labels(&partition_labels(&g, parts.unwrap_or(n), &opts.partition))
        }
        Strategy::Exhaustive => best_ordering_exhaustive(c)?.0,
    })
}

/// Orders the lines of an NCT circuit and counts SWAP pairs before and after.
pub fn reorder_pipeline(c: &Circuit, opts: &OrderOptions) -> Result<Reordering, OrderingError> {
    let before = circuit_swap_pairs(c)?;
    let mut ordering = compute_ordering(c, opts)?;
    let mut circuit = apply_ordering(c, &ordering).expect("ordering sized to circuit");
    let mut after = circuit_swap_pairs(&circuit)?;
    if opts.keep_best && after > before {
        ordering = LineOrdering::identity(c.num_lines());
        circuit = c.clone();
        after = before;
    }
    Ok(Reordering { circuit, ordering, before, after })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;

    #[test]
    fn labels_example() {
        let l = PartitionLabels::from_labels(vec![2, 1, 1, 3, 2, 4]);
        assert_eq!(order_from_labels(&l).as_slice(), &[2, 0, 1, 4, 3, 5]);
    }

    #[test]
    fn equal_labels_keep_order() {
        let l = PartitionLabels::from_labels(vec![3; 5]);
        assert!(order_from_labels(&l).is_identity());
        assert_eq!(order_from_labels(&PartitionLabels::from_labels(vec![1, 0])).as_slice(), &[1, 0]);
    }

    #[test]
    fn invalid_label() {
        assert_eq!(PartitionLabels::new(vec![0, 2], 2), Err(OrderingError::InvalidLabel { label: 2, num_parts: 2 }));
    }

    #[test]
    fn edgeless_graph_gives_identity() {
        let g = AdjacencyGraph::new(6);
        assert!(linear_order(&g, &PartitionOptions::default()).is_identity());
    }

    #[test]
    fn heavy_path_middle_vertex() {
        let g = AdjacencyGraph::from_edges(3, [(0, 2, 5), (2, 1, 5)]);
        let ord = linear_order(&g, &PartitionOptions::default());
        assert_eq!(ord.position(2), 1);
        // exhaustive over all 3! arrangements
        let best = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
            .iter()
            .map(|p| g.arrangement_cost(&LineOrdering::new(p.to_vec()).unwrap()))
            .min()
            .unwrap();
        assert_eq!(g.arrangement_cost(&ord), best);
    }

    #[test]
    fn components_are_concatenated() {
        let g = AdjacencyGraph::from_edges(5, [(0, 4, 1), (1, 3, 1)]);
        let ord = linear_order(&g, &PartitionOptions::default());
        assert_eq!(ord.sequence(), vec![0, 4, 1, 3, 2]);
    }

    #[test]
    fn partition_labels_uses_requested_parts() {
        let g = AdjacencyGraph::from_edges(6, (0..5).map(|i| (i, i + 1, 1)));
        let l = partition_labels(&g, 3, &PartitionOptions::default());
        assert_eq!(l.non_empty_parts(), 3);
        let mut counts = [0; 3];
        l.labels().iter().for_each(|&x| counts[x] += 1);
        assert_eq!(counts, [2, 2, 2]);
    }

    #[test]
    fn exhaustive_finds_zero_for_chain() {
        let c =
            Circuit::with_gates(4, [Gate::cnot(0, 2).unwrap(), Gate::cnot(2, 3).unwrap(), Gate::cnot(3, 1).unwrap()])
                .unwrap();
        let (ord, pairs) = best_ordering_exhaustive(&c).unwrap();
        assert_eq!(pairs, SwapCount::new(0));
        let r = apply_ordering(&c, &ord).unwrap();
        assert_eq!(circuit_swap_pairs(&r).unwrap(), SwapCount::new(0));
    }

    #[test]
    fn exhaustive_guard() {
        let c = Circuit::new(9).unwrap();
        assert_eq!(best_ordering_exhaustive(&c), Err(OrderingError::TooManyLines { lines: 9, limit: 8 }));
    }

    #[test]
    fn exhaustive_keeps_identity_when_optimal() {
        let c = Circuit::with_gates(3, [Gate::cnot(0, 1).unwrap()]).unwrap();
        assert!(best_ordering_exhaustive(&c).unwrap().0.is_identity());
    }

    #[test]
    fn keep_best_falls_back() {
        // already optimal; a reversed ordering is no better, identity stays
        let c = Circuit::with_gates(3, [Gate::cnot(0, 1).unwrap(), Gate::cnot(1, 2).unwrap()]).unwrap();
        let opts = OrderOptions { keep_best: true, ..Default::default() };
        let r = reorder_pipeline(&c, &opts).unwrap();
        assert!(r.after <= r.before);
    }

    #[test]
    fn single_lnn_gate_pipeline() {
        let c = Circuit::with_gates(2, [Gate::cnot(0, 1).unwrap()]).unwrap();
        let r = reorder_pipeline(&c, &OrderOptions::default()).unwrap();
        assert_eq!((r.before.pairs, r.after.pairs), (0, 0));
    }

    #[test]
    fn permutation_enumeration_count() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }
}
