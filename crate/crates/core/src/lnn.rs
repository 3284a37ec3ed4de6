//! SWAP-pair counting and SWAP insertion for linear nearest-neighbor form.
//!
//! A gate whose lines are not adjacent is made executable by moving lines
//! with adjacent SWAPs before the gate and undoing the moves after it. Each
//! such SWAP together with its mirror is one *SWAP pair*.
//!
//! Counting follows a per-gate rule table. For a Toffoli with lower control
//! `c1`, upper control `c2` and target `t` it charges, for each control, the
//! lines strictly between that control and the target other than the second
//! control:
//!
//! | placement        | pairs                                               |
//! |------------------|-----------------------------------------------------|
//! | `t < c1 < c2`    | `(c1-t-1)+(c2-t-2)` if `c1-t>1`, else `c2-c1-1`      |
//! | `c1 < t < c2`    | `(t-c1-1)+(c2-t-1)`                                 |
//! | `c1 < c2 < t`    | `(t-c2-1)+(t-c1-2)` if `t-c2>1`, else `c2-c1-1`      |
//!
//! CNOT and SWAP gates need `|a-b|-1` pairs and NOT gates none.

use std::iter::Sum;
use std::ops::{Add, AddAssign};

use thiserror::Error;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::cost::CostModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LnnError {
    #[error("MCT gate with {controls} controls must be decomposed before SWAP counting")]
    MustDecompose { controls: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwapCount {
    pub pairs: u64,
}

impl SwapCount {
    pub fn new(pairs: u64) -> Self {
        SwapCount { pairs }
    }

    pub fn swap_gates(&self) -> u64 {
        2 * self.pairs
    }

    pub fn quantum_cost(&self, model: &CostModel) -> u64 {
        self.swap_gates() * model.swap_cost
    }
}

impl Add for SwapCount {
    type Output = SwapCount;

    fn add(self, rhs: SwapCount) -> SwapCount {
        SwapCount { pairs: self.pairs + rhs.pairs }
    }
}

impl AddAssign for SwapCount {
    fn add_assign(&mut self, rhs: SwapCount) {
        self.pairs += rhs.pairs;
    }
}

impl Sum for SwapCount {
    fn sum<I: Iterator<Item = SwapCount>>(iter: I) -> SwapCount {
        iter.fold(SwapCount::default(), Add::add)
    }
}

/// Pairs for a Toffoli with controls `c1 < c2` and target `t`.
pub(crate) fn toffoli_pairs(c1: usize, c2: usize, t: usize) -> usize {
    debug_assert!(c1 < c2 && t != c1 && t != c2);
    if t < c1 {
        if c1 - t > 1 {
            (c1 - t - 1) + (c2 - t - 2)
        } else {
            c2 - c1 - 1
        }
    } else if t < c2 {
        (t - c1 - 1) + (c2 - t - 1)
    } else if t - c2 > 1 {
        (t - c2 - 1) + (t - c1 - 2)
    } else {
        c2 - c1 - 1
    }
}

pub fn swap_pairs_for_gate(g: &Gate) -> Result<SwapCount, LnnError> {
    let pairs = match g.kind() {
        GateKind::Not => 0,
        GateKind::Cnot | GateKind::Swap => g.controls()[0].abs_diff(g.target()) - 1,
        GateKind::Toffoli => toffoli_pairs(g.controls()[0], g.controls()[1], g.target()),
        GateKind::Mct => return Err(LnnError::MustDecompose { controls: g.controls().len() }),
    };
    Ok(SwapCount::new(pairs as u64))
}

pub fn circuit_swap_pairs(c: &Circuit) -> Result<SwapCount, LnnError> {
    c.gates().iter().map(swap_pairs_for_gate).sum()
}

/// The SWAPs placed in front of a gate and the gate as it executes after
/// them. The SWAPs behind the gate are `setup` reversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapPlan {
    pub setup: Vec<Gate>,
    pub gate: Gate,
}

/// Walks a line from `from` to `to` with adjacent SWAPs.
fn walk(from: usize, to: usize, setup: &mut Vec<Gate>) -> usize {
    let mut p = from;
    while p < to {
        setup.push(Gate::swap(p, p + 1).expect("adjacent lines"));
        p += 1;
    }
    while p > to {
        setup.push(Gate::swap(p, p - 1).expect("adjacent lines"));
        p -= 1;
    }
    p
}

/// Movement plan realizing exactly `swap_pairs_for_gate(g)` SWAPs: controls
/// walk toward the target, the nearer control first, and never cross
/// another line of the gate.
pub fn swap_plan(g: &Gate) -> Result<SwapPlan, LnnError> {
    let mut setup = Vec::new();
    let gate = match g.kind() {
        GateKind::Not => g.clone(),
        GateKind::Mct => return Err(LnnError::MustDecompose { controls: g.controls().len() }),
        GateKind::Cnot | GateKind::Swap => {
            let (a, b) = (g.controls()[0], g.target());
            let to = if a < b { b - 1 } else { b + 1 };
            let a = walk(a, to, &mut setup);
            if g.kind() == GateKind::Swap {
                Gate::swap(a, b).expect("distinct lines")
            } else {
                Gate::cnot(a, b).expect("distinct lines")
            }
        }
        GateKind::Toffoli => {
            let (c1, c2, t) = (g.controls()[0], g.controls()[1], g.target());
            let (n1, n2) = if t < c1 {
                let n1 = walk(c1, t + 1, &mut setup);
                (n1, walk(c2, t + 2, &mut setup))
            } else if t < c2 {
                let n1 = walk(c1, t - 1, &mut setup);
                (n1, walk(c2, t + 1, &mut setup))
            } else {
                let n2 = walk(c2, t - 1, &mut setup);
                (walk(c1, t - 2, &mut setup), n2)
            };
            Gate::toffoli(n1, n2, t).expect("distinct lines")
        }
    };
    Ok(SwapPlan { setup, gate })
}

/// Surrounds every non-adjacent gate with SWAPs and their mirror images.
pub fn insert_swaps(c: &Circuit) -> Result<Circuit, LnnError> {
    let mut gates = Vec::with_capacity(c.len());
    for g in c.gates() {
        let plan = swap_plan(g)?;
        gates.extend(plan.setup.iter().cloned());
        gates.push(plan.gate);
        gates.extend(plan.setup.into_iter().rev());
    }
    Ok(Circuit::from_parts_unchecked(c.lines().to_vec(), gates))
}

/// How strictly a three-line Toffoli is judged adjacent.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Adjacency {
    /// Any three consecutive lines, as the rule table charges them 0 pairs.
    #[default]
    RuleTable,
    /// Three consecutive lines with the target in the middle.
    TargetInMiddle,
}

pub fn is_lnn_gate(g: &Gate, mode: Adjacency) -> bool {
    match g.kind() {
        GateKind::Not => true,
        GateKind::Cnot | GateKind::Swap => g.controls()[0].abs_diff(g.target()) == 1,
        GateKind::Toffoli => {
            let (lo, hi) = g.span();
            hi - lo == 2 && (mode == Adjacency::RuleTable || lo < g.target() && g.target() < hi)
        }
        GateKind::Mct => false,
    }
}

pub fn is_lnn(c: &Circuit) -> bool {
    is_lnn_with(c, Adjacency::RuleTable)
}

pub fn is_lnn_with(c: &Circuit, mode: Adjacency) -> bool {
    c.gates().iter().all(|g| is_lnn_gate(g, mode))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(g: Gate) -> u64 {
        swap_pairs_for_gate(&g).unwrap().pairs
    }

    #[test]
    fn not_and_adjacent_cnot() {
        assert_eq!(pairs(Gate::not(3)), 0);
        assert_eq!(pairs(Gate::cnot(0, 1).unwrap()), 0);
        assert_eq!(pairs(Gate::cnot(5, 1).unwrap()), 3);
    }

    #[test]
    fn toffoli_far_target() {
        let c = swap_pairs_for_gate(&Gate::toffoli(0, 1, 3).unwrap()).unwrap();
        assert_eq!(c.pairs, 2);
        assert_eq!(c.swap_gates(), 4);
        assert_eq!(c.quantum_cost(&CostModel::default()), 12);
    }

    #[test]
    fn toffoli_cases() {
        // target above both controls, gap of one line and of two lines
        assert_eq!(pairs(Gate::toffoli(2, 4, 0).unwrap()), 3);
        assert_eq!(pairs(Gate::toffoli(1, 4, 0).unwrap()), 2);
        assert_eq!(pairs(Gate::toffoli(1, 2, 0).unwrap()), 0);
        // target between controls
        assert_eq!(pairs(Gate::toffoli(0, 2, 1).unwrap()), 0);
        assert_eq!(pairs(Gate::toffoli(0, 5, 2).unwrap()), 3);
        // target below both controls
        assert_eq!(pairs(Gate::toffoli(0, 3, 4).unwrap()), 2);
        assert_eq!(pairs(Gate::toffoli(0, 2, 5).unwrap()), 5);
    }

    #[test]
    fn mct_must_be_decomposed() {
        let g = Gate::mct(vec![0, 1, 2], 3).unwrap();
        assert_eq!(swap_pairs_for_gate(&g), Err(LnnError::MustDecompose { controls: 3 }));
        let c = Circuit::with_gates(4, [g]).unwrap();
        assert!(insert_swaps(&c).is_err());
        assert!(!is_lnn(&c));
    }

    #[test]
    fn far_toffoli_plan() {
        let plan = swap_plan(&Gate::toffoli(0, 1, 3).unwrap()).unwrap();
        assert_eq!(plan.setup, vec![Gate::swap(1, 2).unwrap(), Gate::swap(0, 1).unwrap()]);
        assert_eq!(plan.gate, Gate::toffoli(1, 2, 3).unwrap());
        let c = Circuit::with_gates(4, [Gate::toffoli(0, 1, 3).unwrap()]).unwrap();
        let lnn = insert_swaps(&c).unwrap();
        assert_eq!(lnn.len(), 5);
        assert_eq!(lnn.gates().iter().filter(|g| g.kind() == GateKind::Swap).count(), 4);
        assert!(is_lnn(&lnn));
    }

    #[test]
    fn lnn_checks() {
        let t = |a, b, c| Gate::toffoli(a, b, c).unwrap();
        assert!(is_lnn_gate(&t(0, 2, 1), Adjacency::RuleTable));
        assert!(is_lnn_gate(&t(1, 2, 0), Adjacency::RuleTable));
        assert!(!is_lnn_gate(&t(1, 2, 0), Adjacency::TargetInMiddle));
        assert!(is_lnn_gate(&t(0, 2, 1), Adjacency::TargetInMiddle));
        assert!(!is_lnn_gate(&Gate::cnot(0, 2).unwrap(), Adjacency::RuleTable));
        assert!(is_lnn_gate(&Gate::not(5), Adjacency::RuleTable));
    }

    #[test]
    fn lnn_circuit_unchanged() {
        let c = Circuit::with_gates(3, [Gate::cnot(0, 1).unwrap(), Gate::toffoli(0, 1, 2).unwrap()]).unwrap();
        assert_eq!(circuit_swap_pairs(&c).unwrap(), SwapCount::new(0));
        assert_eq!(insert_swaps(&c).unwrap(), c);
    }
}
