//! Rewriting of multiple-controlled Toffoli gates into Toffoli cascades.
//!
//! A gate with `k >= 3` controls becomes a compute chain of `k-2` Toffoli
//! gates that accumulates partial AND products into clean ancillas, one
//! Toffoli that flips the target, and the compute chain mirrored to return
//! the ancillas to zero: `2(k-2)+1` Toffoli gates over `k-2` ancillas.

use thiserror::Error;

use crate::circuit::{Circuit, Gate, GateKind, Line};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("expected an MCT gate with at least 3 controls, got {kind} with {controls}")]
    NotMct { kind: GateKind, controls: usize },
    #[error("decomposition needs {needed} ancillas but only {available} were supplied")]
    InsufficientAncillas { needed: usize, available: usize },
    #[error("ancilla line {0} is also used by the gate")]
    AncillaConflict(usize),
    #[error("ancilla line {0} is supplied twice")]
    RepeatedAncilla(usize),
}

/// Record of one MCT gate replaced during [`decompose_circuit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPlan {
    pub original_gate_index: usize,
    pub controls: usize,
    pub ancillas_used: Vec<usize>,
    pub emitted_gates: Vec<Gate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub circuit: Circuit,
    /// Indices of the appended ancilla lines.
    pub ancillas: Vec<usize>,
    pub plans: Vec<DecompositionPlan>,
}

/// Number of Toffoli gates emitted for a `k`-control gate.
pub fn toffoli_count(k: usize) -> usize {
    2 * (k - 2) + 1
}

pub fn decompose_mct(g: &Gate, ancilla_pool: &[usize]) -> Result<Vec<Gate>, DecomposeError> {
    let controls = g.controls();
    let k = controls.len();
    if g.kind() != GateKind::Mct || k < 3 {
        return Err(DecomposeError::NotMct { kind: g.kind(), controls: k });
    }
    let needed = k - 2;
    if ancilla_pool.len() < needed {
        return Err(DecomposeError::InsufficientAncillas { needed, available: ancilla_pool.len() });
    }
    let ancillas = &ancilla_pool[..needed];
    for (i, &a) in ancillas.iter().enumerate() {
        if g.lines().any(|l| l == a) {
            return Err(DecomposeError::AncillaConflict(a));
        }
        if ancillas[..i].contains(&a) {
            return Err(DecomposeError::RepeatedAncilla(a));
        }
    }

    let toffoli = |a: usize, b: usize, t: usize| Gate::toffoli(a, b, t).expect("lines are distinct");
    let mut compute = Vec::with_capacity(needed);
    compute.push(toffoli(controls[0], controls[1], ancillas[0]));
    for j in 1..needed {
        compute.push(toffoli(controls[j + 1], ancillas[j - 1], ancillas[j]));
    }

    let mut out = Vec::with_capacity(toffoli_count(k));
    out.extend(compute.iter().cloned());
    out.push(toffoli(controls[k - 1], ancillas[needed - 1], g.target()));
    out.extend(compute.into_iter().rev());
    Ok(out)
}

/// Replaces every MCT gate of `c` by its Toffoli cascade. Ancilla lines are
/// appended below the original lines and shared by all MCT gates.
pub fn decompose_circuit(c: &Circuit) -> Decomposition {
    let max_k = c.gates().iter().filter(|g| g.kind() == GateKind::Mct).map(|g| g.controls().len()).max();
    let Some(max_k) = max_k else {
        return Decomposition { circuit: c.clone(), ancillas: Vec::new(), plans: Vec::new() };
    };

    let mut shell = Circuit::from_parts_unchecked(c.lines().to_vec(), Vec::new());
    let ancillas: Vec<usize> = (0..max_k - 2)
        .map(|i| {
            let mut line = Line::named(format!("anc{i}"));
            line.input_label = "0".into();
            line.constant = Some(false);
            let idx = shell.append_line(line);
            let name = shell.lines()[idx].name.clone();
            shell.set_output_label(idx, name);
            idx
        })
        .collect();

    let mut gates = Vec::with_capacity(c.len());
    let mut plans = Vec::new();
    for (idx, g) in c.gates().iter().enumerate() {
        if g.kind() != GateKind::Mct {
            gates.push(g.clone());
            continue;
        }
        let emitted = decompose_mct(g, &ancillas).expect("ancilla pool sized for the widest gate");
        let k = g.controls().len();
        debug_assert_eq!(emitted.len(), toffoli_count(k));
        gates.extend(emitted.iter().cloned());
        plans.push(DecompositionPlan {
            original_gate_index: idx,
            controls: k,
            ancillas_used: ancillas[..k - 2].to_vec(),
            emitted_gates: emitted,
        });
    }
    Decomposition { circuit: Circuit::from_parts_unchecked(shell.lines().to_vec(), gates), ancillas, plans }
}
