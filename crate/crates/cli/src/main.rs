use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lnn_core::ordering::Strategy;
use lnn_core::{build_graph, decompose_circuit, parse_real, run_suite, OrderOptions, PartitionOptions, ReportOptions};

#[derive(Parser)]
#[command(name = "lnn-route", version, about = "Line reordering and SWAP insertion for reversible circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cost report for a `.real` file or a directory of them.
    Report(ReportArgs),
    /// Print the line-interaction graph of a circuit as an adjacency list.
    Graph { file: PathBuf },
}

#[derive(clap::Args)]
struct ReportArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value_t = Order::Recursive)]
    order: Order,
    /// Part count for `--order labels`; defaults to the line count.
    #[arg(long)]
    parts: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    weighted_cut: bool,
    /// Keep the original order when reordering adds SWAPs.
    #[arg(long)]
    keep_best: bool,
    /// Write LNN netlists for the original and reordered circuits here.
    #[arg(long)]
    emit_lnn: Option<PathBuf>,
    /// Largest line count to verify by simulation; 0 disables it.
    #[arg(long, default_value_t = lnn_core::verify::DEFAULT_MAX_LINES as u8, value_parser = clap::value_parser!(u8).range(0..=63))]
    verify_max_lines: u8,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Include per-file wall time in CSV output.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Recursive,
    Labels,
    Exhaustive,
    Identity,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Report(args) => report(args),
        Command::Graph { file } => graph(&file),
    }
}

fn report(args: ReportArgs) -> ExitCode {
    if !args.path.exists() {
        eprintln!("error: {} does not exist", args.path.display());
        return ExitCode::from(2);
    }
    let strategy = match args.order {
        Order::Recursive => Strategy::Recursive,
        Order::Labels => Strategy::Labels { parts: args.parts },
        Order::Exhaustive => Strategy::Exhaustive,
        Order::Identity => Strategy::Identity,
    };
    let opts = ReportOptions {
        order: OrderOptions {
            strategy,
            partition: PartitionOptions { seed: args.seed, weighted: args.weighted_cut },
            keep_best: args.keep_best,
        },
        emit_lnn: args.emit_lnn,
        verify_max_lines: args.verify_max_lines.into(),
        include_timing: args.timing,
        ..ReportOptions::default()
    };
    let suite = match run_suite(&args.path, &opts) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match args.format {
        Format::Csv => print!("{}", suite.to_csv()),
        Format::Md => print!("{}", suite.to_markdown()),
    }
    for row in &suite.rows {
        for w in &row.warnings {
            eprintln!("warning: {}: {w}", row.name);
        }
        if row.verification == lnn_core::Verification::Failed {
            eprintln!("error: {}: verification failed", row.name);
        }
    }
    for e in &suite.errors {
        eprintln!("error: {e}");
    }
    eprintln!("average cost reduction %: {}", suite.average_display());
    if suite.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn graph(file: &Path) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(1);
        }
    };
    let circuit = match parse_real(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(1);
        }
    };
    let decomposed = decompose_circuit(&circuit).circuit;
    let g = build_graph(&decomposed).expect("decomposed circuit has no MCT gates");
    for (i, line) in decomposed.lines().iter().enumerate() {
        println!("# {i} {}", line.name);
    }
    print!("{}", g.to_adjacency_list());
    ExitCode::SUCCESS
}
