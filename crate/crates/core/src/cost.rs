use crate::circuit::{Circuit, Gate, GateKind};

/// Per-gate quantum cost weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub not_cost: u64,
    pub cnot_cost: u64,
    pub toffoli_cost: u64,
    pub swap_cost: u64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel { not_cost: 1, cnot_cost: 1, toffoli_cost: 5, swap_cost: 3 }
    }
}

impl CostModel {
    /// Cost of a `k`-control MCT gate, priced as the Toffoli cascade it
    /// decomposes into (`2(k-2)+1` Toffoli gates).
    pub fn mct_cost(&self, controls: usize) -> u64 {
        debug_assert!(controls >= 3);
        self.toffoli_cost * (2 * (controls as u64 - 2) + 1)
    }

    pub fn gate_cost(&self, g: &Gate) -> u64 {
        match g.kind() {
            GateKind::Not => self.not_cost,
            GateKind::Cnot => self.cnot_cost,
            GateKind::Toffoli => self.toffoli_cost,
            GateKind::Mct => self.mct_cost(g.controls().len()),
            GateKind::Swap => self.swap_cost,
        }
    }
}

pub fn quantum_cost(c: &Circuit, model: &CostModel) -> u64 {
    c.gates().iter().map(|g| model.gate_cost(g)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_circuit_costs_nothing() {
        assert_eq!(quantum_cost(&Circuit::new(4).unwrap(), &CostModel::default()), 0);
    }

    #[test]
    fn swap_costs_three() {
        let c = Circuit::with_gates(2, [Gate::swap(0, 1).unwrap()]).unwrap();
        assert_eq!(quantum_cost(&c, &CostModel::default()), 3);
    }

    #[test]
    fn two_toffoli_four_small_gates() {
        let c = Circuit::with_gates(
            3,
            [
                Gate::not(0),
                Gate::cnot(2, 0).unwrap(),
                Gate::cnot(0, 1).unwrap(),
                Gate::toffoli(0, 1, 2).unwrap(),
                Gate::cnot(1, 0).unwrap(),
                Gate::toffoli(1, 2, 0).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(quantum_cost(&c, &CostModel::default()), 14);
    }

    #[test]
    fn mct_priced_as_cascade() {
        let m = CostModel::default();
        assert_eq!(m.mct_cost(3), 15);
        assert_eq!(m.mct_cost(4), 25);
    }
}
