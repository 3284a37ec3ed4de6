//! Cost reports over `.real` files: parse, decompose, count SWAP pairs,
//! reorder, count again, optionally verify and emit LNN netlists.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::circuit::Circuit;
use crate::cost::{quantum_cost, CostModel};
use crate::decompose::decompose_circuit;
use crate::lnn::{insert_swaps, is_lnn, LnnError};
use crate::ordering::{reorder_pipeline, OrderOptions, OrderingError, Reordering, Strategy};
use crate::reference;
use crate::revlib::{parse_document, write_real, ParseError};
use crate::verify::{equivalent_with_limit, VerifyError, DEFAULT_MAX_LINES};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Order { path: PathBuf, source: OrderingError },
    #[error("{path}: {source}")]
    Lnn { path: PathBuf, source: LnnError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Passed,
    Failed,
    Skipped,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verification::Passed => "passed",
            Verification::Failed => "FAILED",
            Verification::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub order: OrderOptions,
    pub cost_model: CostModel,
    /// Directory for LNN netlists of the original and reordered circuits.
    pub emit_lnn: Option<PathBuf>,
    /// Verification runs only when the decomposed circuit has at most this
    /// many lines; 0 disables it.
    pub verify_max_lines: usize,
    /// Adds the wall-time column to CSV output.
    pub include_timing: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            order: OrderOptions::default(),
            cost_model: CostModel::default(),
            emit_lnn: None,
            verify_max_lines: DEFAULT_MAX_LINES,
            include_timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostReport {
    pub name: String,
    /// Lines after decomposition, ancillas included.
    pub lines: usize,
    pub ancillas: usize,
    /// Gates after decomposition.
    pub gates: usize,
    pub base_qc: u64,
    /// Cost stated in the source file's comments, if any.
    pub annotated_qc: Option<u64>,
    pub pairs_before: u64,
    pub swap_cost_before: u64,
    pub total_before: u64,
    pub pairs_after: u64,
    pub swap_cost_after: u64,
    pub total_after: u64,
    pub reduction_pct: f64,
    pub ordering: Vec<usize>,
    pub verification: Verification,
    pub warnings: Vec<String>,
    pub strategy: String,
    pub seed: u64,
    pub wall_ms: f64,
}

impl CostReport {
    /// Published totals for a benchmark of the same name.
    pub fn reference(&self) -> Option<&'static reference::ReferenceRow> {
        reference::lookup(&self.name)
    }

    /// False when the published before-ordering total differs from ours or
    /// the published row does not add up.
    pub fn matches_reference(&self) -> Option<bool> {
        self.reference().map(|r| r.is_self_consistent() && r.total_before == self.total_before)
    }
}

pub fn reduction_pct(before: u64, after: u64) -> f64 {
    if before == 0 {
        0.0
    } else {
        100.0 * (before as f64 - after as f64) / before as f64
    }
}

pub fn strategy_name(s: &Strategy) -> String {
    match s {
        Strategy::Recursive => "recursive".into(),
        Strategy::Labels { parts: None } => "labels".into(),
        Strategy::Labels { parts: Some(k) } => format!("labels:{k}"),
        Strategy::Exhaustive => "exhaustive".into(),
        Strategy::Identity => "identity".into(),
    }
}

pub fn run_file(path: &Path, opts: &ReportOptions) -> Result<CostReport, ReportError> {
    let text = fs::read_to_string(path).map_err(|source| ReportError::Io { path: path.into(), source })?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    run_text(&name, &text, opts).map_err(|e| match e {
        TextError::Parse(source) => ReportError::Parse { path: path.into(), source },
        TextError::Order(source) => ReportError::Order { path: path.into(), source },
        TextError::Lnn(source) => ReportError::Lnn { path: path.into(), source },
        TextError::Io(source) => ReportError::Io { path: opts.emit_lnn.clone().unwrap_or_default(), source },
    })
}

#[derive(Debug)]
enum TextError {
    Parse(ParseError),
    Order(OrderingError),
    Lnn(LnnError),
    Io(std::io::Error),
}

/// Same as [`run_file`] on in-memory `.real` text.
fn run_text(name: &str, text: &str, opts: &ReportOptions) -> Result<CostReport, TextError> {
    let start = Instant::now();
    let doc = parse_document(text).map_err(TextError::Parse)?;
    let original = doc.circuit;
    let dec = decompose_circuit(&original);
    let circuit = dec.circuit;

    let r = reorder_pipeline(&circuit, &opts.order).map_err(TextError::Order)?;
    let pair_cost = 2 * opts.cost_model.swap_cost;
    let base_qc = quantum_cost(&circuit, &opts.cost_model);
    let (pairs_before, pairs_after) = (r.before.pairs, r.after.pairs);
    let total_before = base_qc + pair_cost * pairs_before;
    let total_after = base_qc + pair_cost * pairs_after;

    let mut warnings = Vec::new();
    let needs_lnn = opts.emit_lnn.is_some() || opts.verify_max_lines > 0;
    let lnn = if needs_lnn {
        let before = insert_swaps(&circuit).map_err(TextError::Lnn)?;
        let after = insert_swaps(&r.circuit).map_err(TextError::Lnn)?;
        Some((before, after))
    } else {
        None
    };

    if let (Some(dir), Some((before, after))) = (&opts.emit_lnn, &lnn) {
        fs::create_dir_all(dir).map_err(TextError::Io)?;
        fs::write(dir.join(format!("{name}.lnn.real")), write_real(before)).map_err(TextError::Io)?;
        fs::write(dir.join(format!("{name}.reordered.lnn.real")), write_real(after)).map_err(TextError::Io)?;
    }

    let verification = match &lnn {
        Some((before, after)) if opts.verify_max_lines > 0 => {
            match verify(&original, &circuit, &dec.ancillas, &r, before, after, opts.verify_max_lines) {
                Ok(true) => Verification::Passed,
                Ok(false) => Verification::Failed,
                Err(VerifyError::TooManyLines { lines, limit }) => {
                    warnings.push(format!("verification skipped: {lines} lines exceed limit {limit}"));
                    Verification::Skipped
                }
                Err(e) => {
                    warnings.push(format!("verification error: {e}"));
                    Verification::Failed
                }
            }
        }
        _ => Verification::Skipped,
    };

    Ok(CostReport {
        name: name.to_string(),
        lines: circuit.num_lines(),
        ancillas: dec.ancillas.len(),
        gates: circuit.len(),
        base_qc,
        annotated_qc: doc.cost_annotation,
        pairs_before,
        swap_cost_before: pair_cost * pairs_before,
        total_before,
        pairs_after,
        swap_cost_after: pair_cost * pairs_after,
        total_after,
        reduction_pct: reduction_pct(total_before, total_after),
        ordering: r.ordering.as_slice().to_vec(),
        verification,
        warnings,
        strategy: strategy_name(&opts.order.strategy),
        seed: opts.order.partition.seed,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn verify(
    original: &Circuit,
    decomposed: &Circuit,
    ancillas: &[usize],
    r: &Reordering,
    lnn_before: &Circuit,
    lnn_after: &Circuit,
    limit: usize,
) -> Result<bool, VerifyError> {
    if decomposed.num_lines() > limit {
        return Err(VerifyError::TooManyLines { lines: decomposed.num_lines(), limit });
    }
    Ok(is_lnn(lnn_before)
        && is_lnn(lnn_after)
        && equivalent_with_limit(original, decomposed, None, ancillas, limit)?
        && equivalent_with_limit(decomposed, &r.circuit, Some(&r.ordering), &[], limit)?
        && equivalent_with_limit(decomposed, lnn_before, None, &[], limit)?
        && equivalent_with_limit(&r.circuit, lnn_after, None, &[], limit)?)
}

#[derive(Debug, Default)]
pub struct SuiteReport {
    pub rows: Vec<CostReport>,
    pub errors: Vec<ReportError>,
    pub include_timing: bool,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    circuit: &'a str,
    lines: usize,
    ancillas: usize,
    gates: usize,
    qc: u64,
    annotated_qc: Option<u64>,
    pairs_before: u64,
    swap_cost_before: u64,
    total_before: u64,
    pairs_after: u64,
    swap_cost_after: u64,
    total_after: u64,
    reduction_pct: String,
    verification: Verification,
    strategy: &'a str,
    seed: u64,
    ordering: String,
    ref_total_before: Option<u64>,
    ref_total_after: Option<u64>,
    ref_prior_qc: Option<u64>,
    ref_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<String>,
}

impl SuiteReport {
    /// Mean percent reduction over all rows; `None` when there are none.
    pub fn average_reduction(&self) -> Option<f64> {
        if self.rows.is_empty() {
            None
        } else {
            Some(self.rows.iter().map(|r| r.reduction_pct).sum::<f64>() / self.rows.len() as f64)
        }
    }

    pub fn average_display(&self) -> String {
        self.average_reduction().map_or_else(|| "n/a".to_string(), |a| format!("{a:.2}"))
    }

    /// True when some file failed to load or some verification failed.
    pub fn has_failures(&self) -> bool {
        !self.errors.is_empty() || self.rows.iter().any(|r| r.verification == Verification::Failed)
    }

    pub fn to_csv(&self) -> String {
        if self.rows.is_empty() {
            return String::new();
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            let reference = r.reference();
            let row = CsvRow {
                circuit: &r.name,
                lines: r.lines,
                ancillas: r.ancillas,
                gates: r.gates,
                qc: r.base_qc,
                annotated_qc: r.annotated_qc,
                pairs_before: r.pairs_before,
                swap_cost_before: r.swap_cost_before,
                total_before: r.total_before,
                pairs_after: r.pairs_after,
                swap_cost_after: r.swap_cost_after,
                total_after: r.total_after,
                reduction_pct: format!("{:.2}", r.reduction_pct),
                verification: r.verification,
                strategy: &r.strategy,
                seed: r.seed,
                ordering: r.ordering.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                ref_total_before: reference.map(|x| x.total_before),
                ref_total_after: reference.map(|x| x.total_after),
                ref_prior_qc: reference.and_then(|x| x.prior_qc),
                ref_match: r.matches_reference(),
                wall_ms: self.include_timing.then(|| format!("{:.3}", r.wall_ms)),
            };
            w.serialize(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str("| Circuit | Lines | Gates | QC | SWAP cost before | Total QC before | SWAP cost after | Total QC after | Reduction % | Verified | Published before/after |\n");
        s.push_str("|---|---:|---:|---:|---:|---:|---:|---:|---:|---|---|\n");
        for r in &self.rows {
            let published = match (r.reference(), r.matches_reference()) {
                (Some(x), Some(true)) => format!("{}/{}", x.total_before, x.total_after),
                (Some(x), _) => format!("{}/{} (differs)", x.total_before, x.total_after),
                (None, _) => "-".into(),
            };
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} | {} | {:.2} | {} | {} |\n",
                r.name,
                r.lines,
                r.gates,
                r.base_qc,
                r.swap_cost_before,
                r.total_before,
                r.swap_cost_after,
                r.total_after,
                r.reduction_pct,
                r.verification,
                published
            ));
        }
        s.push_str(&format!("\nAverage cost reduction %: {}\n", self.average_display()));
        s
    }
}

/// `.real` files under `path` (or `path` itself), sorted by name.
pub fn collect_inputs(path: &Path) -> Result<Vec<PathBuf>, ReportError> {
    if path.is_file() {
        return Ok(vec![path.to_path_buf()]);
    }
    let io = |source| ReportError::Io { path: path.into(), source };
    let mut files = Vec::new();
    for entry in fs::read_dir(path).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.is_file() && p.extension().is_some_and(|e| e == "real") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

/// Runs every `.real` file under `path` in parallel. Rows come back sorted by
/// file name; per-file failures are collected in `errors`.
pub fn run_suite(path: &Path, opts: &ReportOptions) -> Result<SuiteReport, ReportError> {
    let files = collect_inputs(path)?;
    let results: Vec<_> = files.par_iter().map(|f| run_file(f, opts)).collect();
    let mut suite = SuiteReport { include_timing: opts.include_timing, ..SuiteReport::default() };
    for r in results {
        match r {
            Ok(row) => suite.rows.push(row),
            Err(e) => suite.errors.push(e),
        }
    }
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S317: &str = ".version 1.0\n.numvars 3\n.variables a b c\n.begin\n\
        t1 a\nt2 c a\nt2 a b\nt3 a b c\nt2 b a\nt3 b c a\n.end\n";

    #[test]
    fn small_circuit_totals() {
        let r = run_text("3_17_13", S317, &ReportOptions::default()).unwrap();
        assert_eq!(r.base_qc, 14);
        assert_eq!((r.pairs_before, r.total_before), (1, 20));
        assert_eq!((r.pairs_after, r.total_after), (0, 14));
        assert_eq!(r.verification, Verification::Passed);
        assert_eq!(r.matches_reference(), Some(true));
        assert!((r.reduction_pct - 30.0).abs() < 1e-9);
    }

    #[test]
    fn empty_circuit_is_all_zero() {
        let r = run_text("empty", ".numvars 2\n.variables a b\n.begin\n.end\n", &ReportOptions::default()).unwrap();
        assert_eq!((r.base_qc, r.total_before, r.total_after, r.gates), (0, 0, 0, 0));
        assert_eq!(r.reduction_pct, 0.0);
    }

    #[test]
    fn reduction_formula() {
        assert_eq!(reduction_pct(0, 0), 0.0);
        assert_eq!(reduction_pct(200, 150), 25.0);
        assert_eq!(reduction_pct(100, 110), -10.0);
    }

    #[test]
    fn mct_gets_ancilla_and_verifies() {
        let text = ".numvars 5\n.variables a b c d e\n.begin\nt5 a b c d e\nt2 a e\n.end\n";
        let r = run_text("c4", text, &ReportOptions::default()).unwrap();
        assert_eq!((r.lines, r.ancillas, r.gates), (7, 2, 6));
        assert_eq!(r.verification, Verification::Passed);
    }

    #[test]
    fn verification_limit_skips() {
        let opts = ReportOptions { verify_max_lines: 2, ..ReportOptions::default() };
        let r = run_text("x", S317, &opts).unwrap();
        assert_eq!(r.verification, Verification::Skipped);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn empty_suite_average() {
        let s = SuiteReport::default();
        assert_eq!(s.average_display(), "n/a");
        assert!(s.to_markdown().contains("n/a"));
        assert!(!s.has_failures());
    }
}
