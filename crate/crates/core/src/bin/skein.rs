use std::process::ExitCode;

use clap::Parser;
use skein::cli::{run, Cli, EXIT_FAILED};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.report) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_FAILED as u8);
            }
        }
        None => print!("{}", outcome.report),
    }
    if !outcome.ok {
        eprintln!("verification failed");
    }
    ExitCode::from(outcome.exit_code() as u8)
}
