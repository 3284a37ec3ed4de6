use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use super::WorkGraph;

/// Contracts a heavy-edge matching of `fine`. Vertices are visited in random
/// order; each unmatched vertex is paired with the unmatched neighbor across
/// its heaviest edge, provided the merged weight stays within `cap`.
///
/// Returns the coarse graph and, for every fine vertex, its coarse vertex.
pub(crate) fn heavy_edge_matching(fine: &WorkGraph, cap: u64, rng: &mut ChaCha8Rng) -> (WorkGraph, Vec<usize>) {
    let n = fine.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    const UNMATCHED: usize = usize::MAX;
    let mut mate = vec![UNMATCHED; n];
    for &v in &order {
        if mate[v] != UNMATCHED {
            continue;
        }
        let mut best: Option<(u64, usize)> = None;
        for (u, w) in fine.neighbors(v) {
            if mate[u] != UNMATCHED || fine.vw[u] + fine.vw[v] > cap {
                continue;
            }
            // heavier edge first, then lower index
            if best.is_none_or(|(bw, bu)| w > bw || (w == bw && u < bu)) {
                best = Some((w, u));
            }
        }
        match best {
            Some((_, u)) => {
                mate[v] = u;
                mate[u] = v;
            }
            None => mate[v] = v,
        }
    }

    let mut map = vec![UNMATCHED; n];
    let mut coarse_n = 0;
    for &v in &order {
        if map[v] == UNMATCHED {
            map[v] = coarse_n;
            map[mate[v]] = coarse_n;
            coarse_n += 1;
        }
    }

    let mut vw = vec![0; coarse_n];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); coarse_n];
    for v in 0..n {
        vw[map[v]] += fine.vw[v];
        members[map[v]].push(v);
    }

    let mut xadj = Vec::with_capacity(coarse_n + 1);
    let mut adj = Vec::new();
    let mut ew = Vec::new();
    xadj.push(0);
    let mut acc: HashMap<usize, u64> = HashMap::new();
    for group in &members {
        acc.clear();
        let me = map[group[0]];
        for &v in group {
            for (u, w) in fine.neighbors(v) {
                let cu = map[u];
                if cu != me {
                    *acc.entry(cu).or_insert(0) += w;
                }
            }
        }
        let mut row: Vec<(usize, u64)> = acc.iter().map(|(&k, &w)| (k, w)).collect();
        row.sort_unstable();
        for (k, w) in row {
            adj.push(k);
            ew.push(w);
        }
        xadj.push(adj.len());
    }
    (WorkGraph { xadj, adj, ew, vw }, map)
}
