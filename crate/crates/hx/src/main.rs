//! `hx`: batch front end for exact Hecke algebra computations.
//!
//! Reports go to standard output or `--out`; progress and summaries go to
//! standard error. Exit codes: 0 success, 1 usage or configuration error,
//! 2 computation not applicable to the input, 3 internal invariant violated.

mod args;
mod cache;
mod commands;
mod encode;
mod fail;
mod pool;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Format, Job};
use crate::commands::Output;
use crate::fail::Failure;
use crate::pool::Pool;

fn render(out: &Output, format: Format) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&out.json).expect("report serializes");
            text.push('\n');
            Ok(text.into_bytes())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &out.csv {
                w.write_record(r).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            w.into_inner().map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn emit(bytes: &[u8], job: &Job) -> Result<(), Failure> {
    match &job.out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Usage(format!("cannot write report: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let job = cli.flags.resolve()?;
    let pool = Pool::new(job.jobs);
    let out = commands::run(&cli.command, &job, &pool)?;
    emit(&render(&out, job.format)?, &job)?;
    for line in &out.summary {
        eprintln!("hx: {line}");
    }
    out.verdict
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hx: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
