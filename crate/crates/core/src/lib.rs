//! Linear nearest-neighbor (LNN) synthesis for reversible circuits.
//!
//! Circuits over the NOT/CNOT/Toffoli and multiple-controlled Toffoli gate
//! libraries are decomposed into Toffoli networks, their qubit lines are
//! reordered by recursive graph bisection, and SWAP gates are inserted so
//! that every gate acts on adjacent lines.
//!
//! ```
//! use lnn_core::{parse_real, reorder_pipeline, OrderOptions};
//!
//! let c = parse_real(".numvars 3\n.variables a b c\n.begin\nt2 a c\nt2 c b\n.end\n").unwrap();
//! let r = reorder_pipeline(&c, &OrderOptions::default()).unwrap();
//! assert_eq!(r.before.pairs, 1);
//! assert_eq!(r.after.pairs, 0);
//! ```

pub mod circuit;
pub mod cost;
pub mod decompose;
pub mod graph;
pub mod layout;
pub mod lnn;
pub mod ordering;
pub mod partition;
pub mod reference;
pub mod report;
pub mod revlib;
pub mod verify;

pub use circuit::{apply_ordering, gate_span, Circuit, CircuitError, Gate, GateKind, Line};
pub use cost::{quantum_cost, CostModel};
pub use decompose::{decompose_circuit, decompose_mct, DecomposeError, Decomposition, DecompositionPlan};
pub use graph::{build_graph, AdjacencyGraph, GraphError};
pub use layout::{InvalidOrdering, LineOrdering};
pub use lnn::{
    circuit_swap_pairs, insert_swaps, is_lnn, is_lnn_with, swap_pairs_for_gate, Adjacency, LnnError, SwapCount,
};
pub use ordering::{
    best_ordering_exhaustive, linear_order, order_from_labels, partition_labels, reorder_pipeline, OrderOptions,
    OrderingError, PartitionLabels, Reordering, Strategy,
};
pub use partition::{bisect, Bisection, PartitionOptions};

pub use report::{run_file, run_suite, CostReport, ReportError, ReportOptions, SuiteReport, Verification};
pub use revlib::{parse_document, parse_real, write_real, ParseError, RealDocument, RealHeader};
pub use verify::{equivalent, simulate, BasisState, VerifyError};
