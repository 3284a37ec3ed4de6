#![allow(dead_code)]

use std::path::PathBuf;

use lnn_core::{Circuit, Gate, Line};
use proptest::prelude::*;
use rand::seq::index;
use rand::Rng;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../benchmarks/revlib")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.real"))
}

/// Random gate on `n` lines with at most `max_controls` controls.
pub fn random_gate<R: Rng>(rng: &mut R, n: usize, max_controls: usize, swaps: bool) -> Gate {
    if swaps && n >= 2 && rng.random_ratio(1, 8) {
        let p = index::sample(rng, n, 2);
        return Gate::swap(p.index(0), p.index(1)).unwrap();
    }
    let k = rng.random_range(0..=max_controls.min(n - 1));
    let mut lines = index::sample(rng, n, k + 1).into_vec();
    let target = lines.pop().unwrap();
    Gate::controlled(lines, target).unwrap()
}

/// Random NOT/CNOT/Toffoli circuit.
pub fn random_nct<R: Rng>(rng: &mut R, n: usize, gates: usize) -> Circuit {
    Circuit::with_gates(n, (0..gates).map(|_| random_gate(rng, n, 2, false))).unwrap()
}

/// Random circuit with MCT and SWAP gates and random line metadata.
pub fn random_rich<R: Rng>(rng: &mut R, n: usize, gates: usize) -> Circuit {
    let lines = (0..n)
        .map(|i| {
            let mut l = Line::named(format!("q{i}_{}", rng.random_range(0..100)));
            l.input_label = format!("in{}", rng.random_range(0..1000));
            l.output_label = format!("out{}", rng.random_range(0..1000));
            l.constant = match rng.random_range(0..3) {
                0 => Some(false),
                1 => Some(true),
                _ => None,
            };
            l.garbage = rng.random_bool(0.3);
            l
        })
        .collect();
    let gs = (0..gates).map(|_| random_gate(rng, n, n - 1, true)).collect();
    Circuit::from_parts(lines, gs).unwrap()
}

pub fn arb_gate(n: usize, max_controls: usize) -> impl Strategy<Value = Gate> {
    let k_max = max_controls.min(n - 1);
    (0..=k_max)
        .prop_flat_map(move |k| proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k + 1).prop_shuffle())
        .prop_map(|mut lines| {
            let target = lines.pop().unwrap();
            Gate::controlled(lines, target).unwrap()
        })
}

/// NCT circuit on 2..=max_n lines.
pub fn arb_nct(max_n: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(arb_gate(n, 2), 0..=max_gates).prop_map(move |gs| Circuit::with_gates(n, gs).unwrap())
    })
}

/// Circuit that may contain MCT gates.
pub fn arb_mct(max_n: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(arb_gate(n, n - 1), 0..=max_gates)
            .prop_map(move |gs| Circuit::with_gates(n, gs).unwrap())
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
