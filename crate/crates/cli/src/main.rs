use std::process::ExitCode;

use clap::Parser;
use qprob::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match qprob::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qprob: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
