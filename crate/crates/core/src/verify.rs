//! Classical simulation of reversible circuits on computational basis states
//! and exhaustive equivalence checking.

use rayon::prelude::*;
use thiserror::Error;

use crate::circuit::{Circuit, GateKind};
use crate::layout::LineOrdering;

/// Default largest line count accepted by simulation and equivalence checks.
pub const DEFAULT_MAX_LINES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{lines} lines exceed the simulation limit of {limit}")]
    TooManyLines { lines: usize, limit: usize },
    #[error("line map has length {map} but the reference circuit has {lines} lines")]
    LineMapLength { map: usize, lines: usize },
    #[error("line map sends reference line {line} to {mapped}, which is missing or an ancilla")]
    LineMapTarget { line: usize, mapped: usize },
    #[error("reference has {reference} lines, candidate has {candidate} lines and {ancillas} ancillas")]
    Incompatible { reference: usize, candidate: usize, ancillas: usize },
}

/// Bit `i` holds the value of line `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BasisState(pub u64);

impl BasisState {
    pub fn from_bits(bits: &[bool]) -> Self {
        BasisState(bits.iter().enumerate().fold(0, |acc, (i, &b)| acc | (u64::from(b) << i)))
    }

    pub fn bit(&self, line: usize) -> bool {
        self.0 >> line & 1 == 1
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Flip { controls: u64, target: u64 },
    Exchange { a: u32, b: u32 },
}

/// A circuit lowered to bit masks for repeated simulation.
#[derive(Debug, Clone)]
pub struct Simulator {
    num_lines: usize,
    ops: Vec<Op>,
}

impl Simulator {
    pub fn new(c: &Circuit) -> Result<Self, VerifyError> {
        Self::with_limit(c, DEFAULT_MAX_LINES)
    }

    pub fn with_limit(c: &Circuit, max_lines: usize) -> Result<Self, VerifyError> {
        let n = c.num_lines();
        if n > max_lines || n > 63 {
            return Err(VerifyError::TooManyLines { lines: n, limit: max_lines.min(63) });
        }
        let ops = c
            .gates()
            .iter()
            .map(|g| match g.kind() {
                GateKind::Swap => Op::Exchange { a: g.controls()[0] as u32, b: g.target() as u32 },
                _ => Op::Flip { controls: g.controls().iter().fold(0, |m, &l| m | 1 << l), target: 1 << g.target() },
            })
            .collect();
        Ok(Simulator { num_lines: n, ops })
    }

    pub fn num_lines(&self) -> usize {
        self.num_lines
    }

    pub fn run(&self, input: BasisState) -> BasisState {
        let mut s = input.0;
        for op in &self.ops {
            match *op {
                Op::Flip { controls, target } => {
                    if s & controls == controls {
                        s ^= target;
                    }
                }
                Op::Exchange { a, b } => {
                    if (s >> a ^ s >> b) & 1 == 1 {
                        s ^= 1 << a | 1 << b;
                    }
                }
            }
        }
        BasisState(s)
    }
}

pub fn simulate(c: &Circuit, input: BasisState) -> Result<BasisState, VerifyError> {
    Ok(Simulator::new(c)?.run(input))
}

/// Checks that `candidate` computes the same function as `reference`.
///
/// Reference line `i` corresponds to candidate line `line_map.position(i)`;
/// without a map, reference lines are matched in order to the candidate's
/// non-ancilla lines. Every reference input is tried with the candidate's
/// ancilla lines set to 0, and outputs are compared on mapped lines only.
pub fn equivalent(
    reference: &Circuit,
    candidate: &Circuit,
    line_map: Option<&LineOrdering>,
    ancilla_lines: &[usize],
) -> Result<bool, VerifyError> {
    equivalent_with_limit(reference, candidate, line_map, ancilla_lines, DEFAULT_MAX_LINES)
}

pub fn equivalent_with_limit(
    reference: &Circuit,
    candidate: &Circuit,
    line_map: Option<&LineOrdering>,
    ancilla_lines: &[usize],
    max_lines: usize,
) -> Result<bool, VerifyError> {
    let n = reference.num_lines();
    let m = candidate.num_lines();
    let is_ancilla = |l: usize| ancilla_lines.contains(&l);
    let free: Vec<usize> = (0..m).filter(|&l| !is_ancilla(l)).collect();
    if free.len() != n || ancilla_lines.iter().any(|&a| a >= m) {
        return Err(VerifyError::Incompatible { reference: n, candidate: m, ancillas: ancilla_lines.len() });
    }
    let mapping: Vec<usize> = match line_map {
        None => free,
        Some(map) => {
            if map.len() != n {
                return Err(VerifyError::LineMapLength { map: map.len(), lines: n });
            }
            (0..n).map(|i| map.position(i)).collect()
        }
    };
    for (line, &mapped) in mapping.iter().enumerate() {
        if mapped >= m || is_ancilla(mapped) {
            return Err(VerifyError::LineMapTarget { line, mapped });
        }
    }

    let r = Simulator::with_limit(reference, max_lines)?;
    let c = Simulator::with_limit(candidate, max_lines)?;
    let spread = |x: u64| mapping.iter().enumerate().fold(0u64, |acc, (i, &p)| acc | (x >> i & 1) << p);
    let observed: u64 = mapping.iter().fold(0, |acc, &p| acc | 1 << p);

    Ok((0..1u64 << n).into_par_iter().all(|x| {
        let want = spread(r.run(BasisState(x)).0);
        let got = c.run(BasisState(spread(x))).0 & observed;
        want == got
    }))
}

/// True when every input with `ancilla_lines` at 0 leaves them at 0.
pub fn ancillas_restored(c: &Circuit, ancilla_lines: &[usize]) -> Result<bool, VerifyError> {
    let sim = Simulator::new(c)?;
    let anc: u64 = ancilla_lines.iter().fold(0, |acc, &a| acc | 1 << a);
    let n = c.num_lines();
    Ok((0..1u64 << n).into_par_iter().filter(|x| x & anc == 0).all(|x| sim.run(BasisState(x)).0 & anc == 0))
}
