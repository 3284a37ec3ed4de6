//! Multilevel balanced graph bisection.
//!
//! The graph is coarsened by heavy-edge matching until it is small, split by
//! greedy region growing, and the split is projected back level by level with
//! Fiduccia-Mattheyses refinement at each level. The finest level enforces
//! exact part sizes.

mod coarsen;
mod initial;
mod refine;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::AdjacencyGraph;

/// Coarsening stops once a level has at most this many vertices.
const COARSEST_SIZE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionOptions {
    pub seed: u64,
    /// Use edge weights in the cut objective; otherwise every edge counts 1.
    pub weighted: bool,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions { seed: 0, weighted: true }
    }
}

/// Result of splitting a vertex subset in two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisection {
    /// `ceil(n/2)` vertices, ascending.
    pub left: Vec<usize>,
    /// `floor(n/2)` vertices, ascending.
    pub right: Vec<usize>,
    pub cut: u64,
}

/// Compressed adjacency with vertex weights, local to one partitioning call.
#[derive(Debug, Clone)]
pub(crate) struct WorkGraph {
    xadj: Vec<usize>,
    adj: Vec<usize>,
    ew: Vec<u64>,
    vw: Vec<u64>,
}

impl WorkGraph {
    fn induced(g: &AdjacencyGraph, subset: &[usize], weighted: bool) -> Self {
        let mut local = vec![usize::MAX; g.num_vertices()];
        for (i, &v) in subset.iter().enumerate() {
            local[v] = i;
        }
        let mut xadj = Vec::with_capacity(subset.len() + 1);
        let mut adj = Vec::new();
        let mut ew = Vec::new();
        xadj.push(0);
        for &v in subset {
            for (u, w) in g.neighbors(v) {
                if local[u] != usize::MAX {
                    adj.push(local[u]);
                    ew.push(if weighted { w } else { 1 });
                }
            }
            xadj.push(adj.len());
        }
        WorkGraph { xadj, adj, ew, vw: vec![1; subset.len()] }
    }

    pub(crate) fn len(&self) -> usize {
        self.vw.len()
    }

    pub(crate) fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        let r = self.xadj[v]..self.xadj[v + 1];
        self.adj[r.clone()].iter().copied().zip(self.ew[r].iter().copied())
    }

    pub(crate) fn total_vertex_weight(&self) -> u64 {
        self.vw.iter().sum()
    }

    pub(crate) fn max_vertex_weight(&self) -> u64 {
        self.vw.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn cut(&self, part: &[u8]) -> u64 {
        let mut cut = 0;
        for v in 0..self.len() {
            for (u, w) in self.neighbors(v) {
                if u > v && part[u] != part[v] {
                    cut += w;
                }
            }
        }
        cut
    }

    pub(crate) fn side_weight(&self, part: &[u8], side: u8) -> u64 {
        part.iter().zip(&self.vw).filter(|(&p, _)| p == side).map(|(_, &w)| w).sum()
    }
}

/// Splits `subset` into parts of `ceil(n/2)` and `floor(n/2)` vertices with a
/// small cut. Deterministic for a given seed.
pub fn bisect(g: &AdjacencyGraph, subset: &[usize], opts: &PartitionOptions) -> Bisection {
    let n = subset.len();
    split(g, subset, n.div_ceil(2), opts)
}

/// Splits `subset` so that the left part has exactly `left_size` vertices.
pub(crate) fn split(g: &AdjacencyGraph, subset: &[usize], left_size: usize, opts: &PartitionOptions) -> Bisection {
    assert!(left_size <= subset.len());
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let wg = WorkGraph::induced(g, &sorted, opts.weighted);
    let salt = sorted.iter().fold(sorted.len() as u64, |h, &v| h.wrapping_mul(0x100_0000_01b3).wrapping_add(v as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ salt);

    let part = if left_size == 0 || left_size == sorted.len() {
        vec![if left_size == 0 { 1 } else { 0 }; sorted.len()]
    } else {
        multilevel(&wg, left_size as u64, &mut rng)
    };
    let cut = wg.cut(&part);
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (i, &v) in sorted.iter().enumerate() {
        if part[i] == 0 {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    debug_assert_eq!(left.len(), left_size);
    Bisection { left, right, cut }
}

fn multilevel(finest: &WorkGraph, target: u64, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let total = finest.total_vertex_weight();
    let cap = (3 * total).div_ceil(2 * COARSEST_SIZE as u64).max(1);
    let mut levels = vec![finest.clone()];
    let mut maps: Vec<Vec<usize>> = Vec::new();
    while levels.last().expect("non-empty").len() > COARSEST_SIZE {
        let fine = levels.last().expect("non-empty");
        let (coarse, map) = coarsen::heavy_edge_matching(fine, cap, rng);
        if coarse.len() * 20 > fine.len() * 19 {
            break;
        }
        levels.push(coarse);
        maps.push(map);
    }

    let coarsest = levels.last().expect("non-empty");
    let mut part = initial::grow_bisection(coarsest, target, tolerance(coarsest, levels.len() == 1), rng);
    for depth in (0..maps.len()).rev() {
        let map = &maps[depth];
        part = map.iter().map(|&c| part[c]).collect();
        let level = &levels[depth];
        refine::fm_refine(level, &mut part, target, tolerance(level, depth == 0));
    }
    part
}

/// Allowed deviation of the left part's weight from its target. The finest
/// level has unit weights and must be exact.
fn tolerance(g: &WorkGraph, finest: bool) -> u64 {
    if finest {
        0
    } else {
        g.max_vertex_weight()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_min_cut(g: &AdjacencyGraph) -> u64 {
        let n = g.num_vertices();
        let left = n.div_ceil(2) as u32;
        (0u32..1 << n)
            .filter(|m| m.count_ones() == left)
            .map(|m| g.edges().filter(|&(u, v, _)| (m >> u & 1) != (m >> v & 1)).map(|(_, _, w)| w).sum())
            .min()
            .unwrap()
    }

    #[test]
    fn two_vertices() {
        let g = AdjacencyGraph::from_edges(2, [(0, 1, 4)]);
        let b = bisect(&g, &[0, 1], &PartitionOptions::default());
        assert_eq!(b.left.len(), 1);
        assert_eq!(b.cut, 4);
    }

    #[test]
    fn path_of_four() {
        let g = AdjacencyGraph::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
        assert_eq!(brute_force_min_cut(&g), 1);
        let b = bisect(&g, &[0, 1, 2, 3], &PartitionOptions::default());
        assert_eq!(b.cut, 1);
        let mut halves = [b.left.clone(), b.right.clone()];
        halves.sort();
        assert_eq!(halves, [vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn star_cut_is_two() {
        let g = AdjacencyGraph::from_edges(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]);
        assert_eq!(brute_force_min_cut(&g), 2);
        assert_eq!(bisect(&g, &[0, 1, 2, 3], &PartitionOptions::default()).cut, 2);
    }

    #[test]
    fn odd_subset_sizes() {
        let g = AdjacencyGraph::from_edges(7, (0..6).map(|i| (i, i + 1, 1)));
        let b = bisect(&g, &[6, 0, 2, 4, 5], &PartitionOptions::default());
        assert_eq!(b.left.len(), 3);
        assert_eq!(b.right.len(), 2);
    }

    #[test]
    fn explicit_left_size() {
        let g = AdjacencyGraph::from_edges(6, (0..5).map(|i| (i, i + 1, 1)));
        let all: Vec<usize> = (0..6).collect();
        for k in 0..=6 {
            let b = split(&g, &all, k, &PartitionOptions::default());
            assert_eq!(b.left.len(), k);
            assert_eq!(b.right.len(), 6 - k);
        }
    }

    #[test]
    fn large_graph_is_balanced() {
        // two dense clusters joined by one light edge
        let mut edges = Vec::new();
        for a in 0..40 {
            for b in a + 1..40 {
                if (a * 7 + b * 3) % 5 == 0 {
                    edges.push((a, b, 3));
                    edges.push((a + 40, b + 40, 3));
                }
            }
        }
        for a in 0..39 {
            edges.push((a, a + 1, 2));
            edges.push((a + 40, a + 41, 2));
        }
        edges.push((0, 40, 1));
        let g = AdjacencyGraph::from_edges(80, edges);
        let all: Vec<usize> = (0..80).collect();
        let b = bisect(&g, &all, &PartitionOptions::default());
        assert_eq!(b.left.len(), 40);
        assert_eq!(b.cut, 1);
    }
}
