//! `graph-energy`: generate graphs, compute indices and energies, and
//! verify the energy inequalities over graph corpora.
//!
//! Exit status: 0 on success, 1 when verification finds a failing record,
//! 2 on usage, configuration or input errors.

mod commands;

use std::process::ExitCode;

use clap::Parser;

use commands::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
