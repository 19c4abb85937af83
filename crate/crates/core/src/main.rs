use std::process::ExitCode;

use clap::Parser;

use bitmce::cli::{self, Cli};

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(parsed) => ExitCode::from(cli::execute(parsed)),
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => cli::EXIT_USAGE,
            };
            let _ = err.print();
            ExitCode::from(code)
        }
    }
}
