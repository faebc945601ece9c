use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use fueter::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    match cli::run(&args) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(outcome.stdout.as_bytes());
            let _ = out.flush();
            if let Some(why) = &outcome.failure {
                eprintln!("{why}");
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(fueter::EXIT_INVALID)
        }
    }
}
