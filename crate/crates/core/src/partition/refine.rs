use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::WorkGraph;

const MAX_PASSES: usize = 10;

/// Fiduccia-Mattheyses refinement of a two-way split.
///
/// Side 0 must end within `tol` of `target` weight. During a pass the
/// deviation may grow by one vertex weight; the pass is rolled back to the
/// best state seen, ranked by excess deviation and then cut.
pub(crate) fn fm_refine(g: &WorkGraph, part: &mut [u8], target: u64, tol: u64) {
    rebalance(g, part, target, tol);
    for _ in 0..MAX_PASSES {
        if !fm_pass(g, part, target, tol) {
            break;
        }
    }
}

fn gains(g: &WorkGraph, part: &[u8]) -> Vec<i64> {
    (0..g.len())
        .map(|v| g.neighbors(v).map(|(u, w)| if part[u] == part[v] { -(w as i64) } else { w as i64 }).sum())
        .collect()
}

/// Moves vertices off the heavy side, best gain first, until side 0 is
/// within `tol` of `target` or no move reduces the deviation.
fn rebalance(g: &WorkGraph, part: &mut [u8], target: u64, tol: u64) {
    let mut w0 = g.side_weight(part, 0);
    while w0.abs_diff(target) > tol {
        let from = if w0 > target { 0 } else { 1 };
        let gain = gains(g, part);
        let after = |v: usize| if from == 0 { w0 - g.vw[v] } else { w0 + g.vw[v] };
        let pick = (0..g.len())
            .filter(|&v| part[v] == from && after(v).abs_diff(target) < w0.abs_diff(target))
            .max_by(|&a, &b| gain[a].cmp(&gain[b]).then(b.cmp(&a)));
        let Some(v) = pick else { break };
        w0 = after(v);
        part[v] = 1 - from;
    }
}

fn fm_pass(g: &WorkGraph, part: &mut [u8], target: u64, tol: u64) -> bool {
    let n = g.len();
    let slack = tol + g.max_vertex_weight();
    let limit = (n / 4).clamp(25, 150);

    let mut gain = gains(g, part);
    let mut locked = vec![false; n];
    let mut heaps: [BinaryHeap<(i64, Reverse<usize>)>; 2] = [BinaryHeap::new(), BinaryHeap::new()];
    for v in 0..n {
        heaps[part[v] as usize].push((gain[v], Reverse(v)));
    }

    let mut w0 = g.side_weight(part, 0);
    let mut cut = g.cut(part) as i64;
    let key = |w0: u64, cut: i64| (w0.abs_diff(target).saturating_sub(tol), cut);
    let mut best = key(w0, cut);
    let mut best_len = 0;
    let mut moves = Vec::new();

    loop {
        let mut choice: Option<(i64, u64, usize)> = None;
        for side in 0..2u8 {
            let heap = &mut heaps[side as usize];
            while let Some(&(gv, Reverse(v))) = heap.peek() {
                if locked[v] || part[v] != side || gain[v] != gv {
                    heap.pop();
                } else {
                    break;
                }
            }
            let Some(&(gv, Reverse(v))) = heap.peek() else { continue };
            let next = if side == 0 { w0 - g.vw[v] } else { w0 + g.vw[v] };
            let dev = next.abs_diff(target);
            if dev > slack {
                continue;
            }
            let better = match choice {
                None => true,
                Some((cg, cd, cv)) => (gv, Reverse(dev), Reverse(v)) > (cg, Reverse(cd), Reverse(cv)),
            };
            if better {
                choice = Some((gv, dev, v));
            }
        }
        let Some((gv, _, v)) = choice else { break };

        let from = part[v];
        part[v] = 1 - from;
        locked[v] = true;
        w0 = if from == 0 { w0 - g.vw[v] } else { w0 + g.vw[v] };
        cut -= gv;
        gain[v] = -gv;
        for (u, w) in g.neighbors(v) {
            if locked[u] {
                continue;
            }
            if part[u] == part[v] {
                gain[u] -= 2 * w as i64;
            } else {
                gain[u] += 2 * w as i64;
            }
            heaps[part[u] as usize].push((gain[u], Reverse(u)));
        }
        moves.push(v);

        let k = key(w0, cut);
        if k < best {
            best = k;
            best_len = moves.len();
        } else if moves.len() - best_len > limit {
            break;
        }
    }

    for &v in moves[best_len..].iter().rev() {
        part[v] = 1 - part[v];
    }
    best_len > 0
}
