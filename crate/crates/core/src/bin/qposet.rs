use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qposet::cli::{self, Command, RunSpec};

/// Poset-metric additive and quantum stabilizer code toolkit.
#[derive(Parser)]
#[command(name = "qposet", version)]
struct Args {
    /// JSON input document.
    #[arg(long)]
    input: PathBuf,
    /// One of: params, dual, mds-check, perfect-check, reduce, verify-t1..verify-t5,
    /// construct-mds, simulate, enumerate-ideals.
    #[arg(long)]
    command: Command,
    /// JSON poset file `{"n": .., "covers": [[i, j], ..]}` overriding the document's poset.
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Enumeration cap in codewords.
    #[arg(long)]
    cap: Option<u64>,
    /// Seed for randomized poset search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the full JSON report.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = cli::run(&RunSpec {
        command: args.command,
        input: args.input,
        poset: args.poset,
        cap: args.cap,
        seed: args.seed,
        json: args.json,
    });
    print!("{}", outcome.report);
    ExitCode::from(outcome.exit_code as u8)
}
