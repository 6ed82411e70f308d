//! `apery`: coefficients, expansions, recurrences and congruence checks from the
//! command line.
//!
//! Exit codes: 0 success, 1 a theorem-class cell failed (or a conjecture cell under
//! `--strict`), 2 usage or input error.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match commands::run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = rendered.render(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    let strict = matches!(cli.command, Command::Verify { strict: true, .. });
    if rendered.theorem_failed || (strict && rendered.conjecture_failed) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
