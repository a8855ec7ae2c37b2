use clap::{Parser, Subcommand};
use kpoincare_cli::{dot, report, report_json, run, summary, verification_text, verify, CliError, InputDoc, DEFAULT_MAX_ORDER};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "kpoincare", about = "Poincaré series of curve and divisorial valuations over number fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Resolve the branch and print the invariants and the series.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Compare the series with the brute-force filtration dimensions.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Print the quotient resolution graph.
    Graph {
        file: PathBuf,
        /// DOT output (the only format).
        #[arg(long)]
        dot: bool,
    },
    /// Print the full report.
    Report {
        file: PathBuf,
        /// JSON output (the only format).
        #[arg(long)]
        json: bool,
        #[arg(long)]
        truncate: Option<usize>,
        /// Also run the oracle up to this order.
        #[arg(long)]
        verify: Option<usize>,
    },
}

fn load(path: &Path) -> Result<InputDoc, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    InputDoc::parse(&text)
}

fn dispatch(cmd: Cmd) -> Result<String, CliError> {
    match cmd {
        Cmd::Analyze { file, truncate } => Ok(summary(&run(&load(&file)?, truncate)?)),
        Cmd::Verify { file, max_order } => {
            let r = run(&load(&file)?, None)?;
            let v = verify(&r, max_order)?;
            let out = verification_text(&v);
            match v.first_mismatch {
                None => Ok(out),
                Some((v, oracle, formula)) => Err(CliError::Mismatch { v, oracle, formula, output: out }),
            }
        }
        Cmd::Graph { file, .. } => Ok(dot(&run(&load(&file)?, None)?.analysis)),
        Cmd::Report { file, truncate, verify: max, .. } => {
            let r = run(&load(&file)?, truncate)?;
            let v = max.map(|m| verify(&r, m)).transpose()?;
            Ok(report_json(&report(&r, v.as_ref())) + "\n")
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Mismatch { output, .. } = &e {
                print!("{output}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
