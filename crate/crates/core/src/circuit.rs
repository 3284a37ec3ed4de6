//! In-memory model of reversible circuits over numbered qubit lines.
//!
//! Lines are indexed from `0` (topmost). A [`Gate`] stores its controls in
//! ascending order, so for a Toffoli gate `controls[0] < controls[1]` always
//! holds and the two controls can be read as the lower and upper control.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::layout::LineOrdering;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("gate references line {line} but the circuit has {num_lines} lines")]
    LineOutOfRange { line: usize, num_lines: usize },
    #[error("gate references line {0} more than once")]
    RepeatedLine(usize),
    #[error("{kind} gate cannot have {controls} controls")]
    ControlCount { kind: GateKind, controls: usize },
    #[error("duplicate line name `{0}`")]
    DuplicateName(String),
    #[error("a circuit needs at least one line")]
    NoLines,
    #[error("ordering has length {ordering} but the circuit has {num_lines} lines")]
    OrderingMismatch { ordering: usize, num_lines: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Not,
    Cnot,
    Toffoli,
    /// Multiple-controlled Toffoli with three or more controls.
    Mct,
    Swap,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "Toffoli",
            GateKind::Mct => "MCT",
            GateKind::Swap => "SWAP",
        };
        f.write_str(s)
    }
}

/// One reversible gate.
///
/// For `Swap`, the two exchanged lines are `controls[0]` and `target`, kept in
/// the order they were given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    controls: Vec<usize>,
    target: usize,
}

impl Gate {
    /// Builds a controlled-NOT family gate, picking the kind from the number
    /// of controls (0 → NOT, 1 → CNOT, 2 → Toffoli, 3+ → MCT).
    pub fn controlled(controls: impl Into<Vec<usize>>, target: usize) -> Result<Self, CircuitError> {
        let mut controls = controls.into();
        controls.sort_unstable();
        for w in controls.windows(2) {
            if w[0] == w[1] {
                return Err(CircuitError::RepeatedLine(w[0]));
            }
        }
        if controls.binary_search(&target).is_ok() {
            return Err(CircuitError::RepeatedLine(target));
        }
        let kind = match controls.len() {
            0 => GateKind::Not,
            1 => GateKind::Cnot,
            2 => GateKind::Toffoli,
            _ => GateKind::Mct,
        };
        Ok(Gate { kind, controls, target })
    }

    pub fn not(target: usize) -> Self {
        Gate { kind: GateKind::Not, controls: Vec::new(), target }
    }

    pub fn cnot(control: usize, target: usize) -> Result<Self, CircuitError> {
        Self::controlled(vec![control], target)
    }

    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Result<Self, CircuitError> {
        Self::controlled(vec![c1, c2], target)
    }

    pub fn mct(controls: impl Into<Vec<usize>>, target: usize) -> Result<Self, CircuitError> {
        let controls = controls.into();
        if controls.len() < 3 {
            return Err(CircuitError::ControlCount { kind: GateKind::Mct, controls: controls.len() });
        }
        Self::controlled(controls, target)
    }

    pub fn swap(a: usize, b: usize) -> Result<Self, CircuitError> {
        if a == b {
            return Err(CircuitError::RepeatedLine(a));
        }
        Ok(Gate { kind: GateKind::Swap, controls: vec![a], target: b })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn controls(&self) -> &[usize] {
        &self.controls
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Every line touched by the gate, controls first.
    pub fn lines(&self) -> impl Iterator<Item = usize> + '_ {
        self.controls.iter().copied().chain(std::iter::once(self.target))
    }

    pub fn num_lines(&self) -> usize {
        self.controls.len() + 1
    }

    /// Smallest and largest line index touched by the gate.
    pub fn span(&self) -> (usize, usize) {
        self.lines().fold((usize::MAX, 0), |(lo, hi), l| (lo.min(l), hi.max(l)))
    }

    /// Same gate with every line index sent through `map`.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Gate {
        match self.kind {
            GateKind::Swap => {
                Gate { kind: GateKind::Swap, controls: vec![map(self.controls[0])], target: map(self.target) }
            }
            kind => {
                let mut controls: Vec<usize> = self.controls.iter().map(|&c| map(c)).collect();
                controls.sort_unstable();
                Gate { kind, controls, target: map(self.target) }
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GateKind::Swap => write!(f, "SWAP({}, {})", self.controls[0], self.target),
            kind => write!(f, "{kind}({:?} -> {})", self.controls, self.target),
        }
    }
}

/// Minimum and maximum line index touched by `g`.
pub fn gate_span(g: &Gate) -> (usize, usize) {
    g.span()
}

/// Metadata attached to one qubit line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub name: String,
    /// Label in the `.inputs` list of a RevLib file.
    pub input_label: String,
    /// Label in the `.outputs` list of a RevLib file.
    pub output_label: String,
    /// Fixed input value for constant (ancilla) lines.
    pub constant: Option<bool>,
    pub garbage: bool,
}

impl Line {
    pub fn named(name: impl Into<String>) -> Self {
        let name = name.into();
        Line { input_label: name.clone(), output_label: name.clone(), name, constant: None, garbage: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    lines: Vec<Line>,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Circuit with `n` default lines named `x0 .. x{n-1}` and no gates.
    pub fn new(num_lines: usize) -> Result<Self, CircuitError> {
        let lines = (0..num_lines).map(|i| Line::named(format!("x{i}"))).collect();
        Self::from_parts(lines, Vec::new())
    }

    pub fn from_parts(lines: Vec<Line>, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        if lines.is_empty() {
            return Err(CircuitError::NoLines);
        }
        let mut names = HashSet::with_capacity(lines.len());
        for l in &lines {
            if !names.insert(l.name.as_str()) {
                return Err(CircuitError::DuplicateName(l.name.clone()));
            }
        }
        let c = Circuit { lines, gates: Vec::with_capacity(gates.len()) };
        gates.into_iter().try_fold(c, |mut c, g| {
            c.push(g)?;
            Ok(c)
        })
    }

    pub fn with_gates(num_lines: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self, CircuitError> {
        let mut c = Self::new(num_lines)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let n = self.lines.len();
        if let Some(line) = gate.lines().find(|&l| l >= n) {
            return Err(CircuitError::LineOutOfRange { line, num_lines: n });
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn has_mct(&self) -> bool {
        self.gates.iter().any(|g| g.kind == GateKind::Mct)
    }

    /// Appends a fresh line and returns its index. The name gets a numeric
    /// suffix if `name` is already taken.
    pub(crate) fn append_line(&mut self, mut line: Line) -> usize {
        if self.lines.iter().any(|l| l.name == line.name) {
            let base = line.name.clone();
            let mut i = 1;
            while self.lines.iter().any(|l| l.name == format!("{base}_{i}")) {
                i += 1;
            }
            line.name = format!("{base}_{i}");
        }
        self.lines.push(line);
        self.lines.len() - 1
    }

    pub(crate) fn set_output_label(&mut self, line: usize, label: String) {
        self.lines[line].output_label = label;
    }

    pub(crate) fn from_parts_unchecked(lines: Vec<Line>, gates: Vec<Gate>) -> Self {
        Circuit { lines, gates }
    }
}

/// Relabels every line of `c` through `ord`: original line `i` moves to
/// position `ord.position(i)`. Gate order is unchanged.
pub fn apply_ordering(c: &Circuit, ord: &LineOrdering) -> Result<Circuit, CircuitError> {
    if ord.len() != c.num_lines() {
        return Err(CircuitError::OrderingMismatch { ordering: ord.len(), num_lines: c.num_lines() });
    }
    let mut lines = vec![None; c.num_lines()];
    for (i, line) in c.lines.iter().enumerate() {
        lines[ord.position(i)] = Some(line.clone());
    }
    let lines = lines.into_iter().map(|l| l.expect("ordering is a bijection")).collect();
    let gates = c.gates.iter().map(|g| g.remap(|l| ord.position(l))).collect();
    Ok(Circuit::from_parts_unchecked(lines, gates))
}
