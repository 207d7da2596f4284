use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use matroid_cells::chirotope::chirotope_file_payload;
use matroid_cells::{
    process_one, sweep_file, Chirotope, ElementSet, SubsetOrder, SweepConfig,
};

/// Complete-cell statistics for uniform oriented matroids given as chirotopes.
///
/// Exit codes: 0 clean, 1 when some class exceeds the cyclic-arrangement
/// bound, 2 on fatal errors.
#[derive(Parser)]
#[command(name = "matroid-cells", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a chirotope database and aggregate complete-cell statistics.
    Sweep(SweepArgs),
    /// Emit a single chirotope line.
    Generate(GenerateArgs),
    /// Run the pipeline on each input line and print one report per class.
    Check(CheckArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Rank of the oriented matroids (projective dimension + 1).
    #[arg(long)]
    rank: u8,
    /// Ground-set size.
    #[arg(long)]
    elements: u8,
    /// Chirotope file: one {+,-} string of length C(n,r) per line;
    /// lines starting with '#' and blank lines are ignored.
    #[arg(long)]
    input: PathBuf,
    /// Subset order of the sign entries.
    #[arg(long, default_value_t = SubsetOrder::Lex)]
    order: SubsetOrder,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Checkpoint file. If it already exists the sweep resumes from it.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Data lines between checkpoint flushes.
    #[arg(long, default_value_t = 10_000)]
    checkpoint_interval: u64,
    /// Write one TSV row per class to this file.
    #[arg(long)]
    per_class_tsv: Option<PathBuf>,
    /// Write the JSON summary here as well as to stdout.
    #[arg(long)]
    summary_json: Option<PathBuf>,
    /// Stop after this many data lines, leaving a resumable checkpoint.
    #[arg(long)]
    max_lines: Option<u64>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Emit the alternating chirotope (every sorted basis positive).
    #[arg(long, required = true)]
    alternating: bool,
    #[arg(long)]
    rank: u8,
    #[arg(long)]
    elements: u8,
    /// Reorient the generated chirotope on these elements, e.g. `2,5,7`.
    #[arg(long, value_delimiter = ',')]
    reorient: Option<Vec<u8>>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    rank: u8,
    #[arg(long)]
    elements: u8,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = SubsetOrder::Lex)]
    order: SubsetOrder,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Sweep(args) => run_sweep(args),
        Command::Generate(args) => run_generate(args),
        Command::Check(args) => run_check(args),
    }
}

fn run_sweep(args: SweepArgs) -> anyhow::Result<ExitCode> {
    let cfg = SweepConfig {
        elements: args.elements,
        rank: args.rank,
        order: args.order,
        jobs: args.jobs,
        checkpoint: args.checkpoint,
        checkpoint_interval: args.checkpoint_interval,
        per_class_tsv: args.per_class_tsv,
        max_lines: args.max_lines,
    };
    let run = sweep_file(&args.input, &cfg)
        .with_context(|| format!("sweeping {}", args.input.display()))?;
    let json = run.summary.to_json();
    print!("{json}");
    if let Some(path) = &args.summary_json {
        std::fs::write(path, &json)
            .with_context(|| format!("writing summary to {}", path.display()))?;
    }
    if !run.finished {
        eprintln!(
            "stopped after --max-lines; resume with the same --checkpoint to continue"
        );
    }
    if !run.summary.errors.is_empty() {
        eprintln!("{} line(s) failed to parse", run.summary.errors.len());
    }
    Ok(if run.summary.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_generate(args: GenerateArgs) -> anyhow::Result<ExitCode> {
    let mut chi = Chirotope::alternating(args.elements, args.rank)?;
    if let Some(elements) = args.reorient {
        let set: ElementSet = elements.into_iter().collect();
        chi = chi.reorient(set)?;
    }
    println!("{chi}");
    Ok(ExitCode::SUCCESS)
}

fn run_check(args: CheckArgs) -> anyhow::Result<ExitCode> {
    let mut reader = BufReader::new(
        File::open(&args.input)
            .with_context(|| format!("opening {}", args.input.display()))?,
    );
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(
        out,
        "line\tcomplete_cell_topes\tcomplete_cells_projective\ttope_count\tattains_bound\texceeds_bound"
    )?;
    let mut violations = 0u64;
    let mut number = 0u64;
    let mut raw = Vec::new();
    loop {
        raw.clear();
        if reader.read_until(b'\n', &mut raw)? == 0 {
            break;
        }
        number += 1;
        let Ok(line) = std::str::from_utf8(&raw) else {
            eprintln!("line {number}: not valid UTF-8");
            continue;
        };
        let Some(payload) = chirotope_file_payload(line) else {
            continue;
        };
        match Chirotope::parse(payload, args.elements, args.rank, args.order)
            .and_then(|chi| process_one(&chi))
        {
            Ok(report) => {
                writeln!(
                    out,
                    "{number}\t{}\t{}\t{}\t{}\t{}",
                    report.complete_cell_topes,
                    report.complete_cell_topes / 2,
                    report.tope_count,
                    report.attains_bound,
                    report.exceeds_bound
                )?;
                if report.exceeds_bound {
                    violations += 1;
                }
            }
            Err(err) => eprintln!("line {number}: {err}"),
        }
    }
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
