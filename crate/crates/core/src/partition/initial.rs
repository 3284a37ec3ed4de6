use rand::seq::index;
use rand_chacha::ChaCha8Rng;

use super::refine::fm_refine;
use super::WorkGraph;

const TRIALS: usize = 8;

/// Greedy graph-growing bisection: side 0 starts from a seed vertex and
/// absorbs the vertex with the best cut gain until it reaches `target`
/// weight. Several seeds are tried, each result is refined, and the
/// smallest cut wins.
pub(crate) fn grow_bisection(g: &WorkGraph, target: u64, tol: u64, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let n = g.len();
    let seeds: Vec<usize> = if n <= TRIALS {
        (0..n).collect()
    } else {
        let mut s = index::sample(rng, n, TRIALS).into_vec();
        s.sort_unstable();
        s
    };

    let mut best: Option<(u64, u64, Vec<u8>)> = None;
    for seed in seeds {
        let mut part = grow_from(g, seed, target, tol);
        fm_refine(g, &mut part, target, tol);
        let cut = g.cut(&part);
        let dev = g.side_weight(&part, 0).abs_diff(target);
        if best.as_ref().is_none_or(|(bc, bd, _)| (dev, cut) < (*bd, *bc)) {
            best = Some((cut, dev, part));
        }
    }
    best.map(|(_, _, p)| p).unwrap_or_default()
}

fn grow_from(g: &WorkGraph, seed: usize, target: u64, tol: u64) -> Vec<u8> {
    let n = g.len();
    let mut part = vec![1u8; n];
    // conn[v] = (weight to side 0, weight to side 1)
    let mut conn: Vec<(u64, u64)> = (0..n).map(|v| (0, g.neighbors(v).map(|(_, w)| w).sum())).collect();
    let mut w0 = 0;

    let absorb = |v: usize, part: &mut Vec<u8>, conn: &mut Vec<(u64, u64)>, w0: &mut u64| {
        part[v] = 0;
        *w0 += g.vw[v];
        for (u, w) in g.neighbors(v) {
            conn[u].0 += w;
            conn[u].1 -= w;
        }
    };

    if g.vw[seed] <= target + tol {
        absorb(seed, &mut part, &mut conn, &mut w0);
    }
    while w0 < target {
        let pick = (0..n).filter(|&v| part[v] == 1 && w0 + g.vw[v] <= target + tol).max_by(|&a, &b| {
            let ga = conn[a].0 as i64 - conn[a].1 as i64;
            let gb = conn[b].0 as i64 - conn[b].1 as i64;
            ga.cmp(&gb).then(b.cmp(&a))
        });
        match pick {
            Some(v) => absorb(v, &mut part, &mut conn, &mut w0),
            None => break,
        }
    }
    part
}
