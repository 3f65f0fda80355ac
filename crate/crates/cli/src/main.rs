//! `qwl`: command-line front end for `qwl-core`.
//!
//! Every subcommand prints one JSON run report on stdout:
//! `{subcommand, parameters, results, elapsed, version}`.
//! Exit codes: 0 success, 1 contract or verification failure (a partial
//! report is still printed when one exists), 2 usage or input-format error.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::commands::{Cli, Failure};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("QWL_LOG"))
        .format_timestamp(None)
        .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    match commands::run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification { message, partial }) => {
            if let Some(p) = partial {
                emit(&p);
            }
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}
